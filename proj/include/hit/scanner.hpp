#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hit/factor.hpp"
#include "hit/poly.hpp"
#include "hit/verdict.hpp"

namespace hit {

struct ScanReport {
    RationalBivarPoly f;
    long bound = 0;
    std::vector<long> reducible_points;  // sorted
    std::vector<long> undefined_points;  // leading coefficient in X vanishes
    std::map<long, Factorization> factorizations;
    std::optional<VerdictStatus> verdict;  // cross-reference, set by the caller

    bool is_reducible_at(long t) const;
    std::string table() const;  // aligned text table
};

// Reducibility of f(t, X) over Q for every integer t in [-B, B].
// threads = 0 uses the hardware concurrency.
ScanReport scan(const RationalBivarPoly& f, long bound, unsigned threads = 0);

// Factorization of f(t, X) recomputed from scratch.
Factorization specialize_and_factor(const RationalBivarPoly& f, long t);

struct Reconciliation {
    bool contradiction = false;
    std::size_t small_count = 0;  // points with |t| <= B / 2
    std::size_t new_count = 0;    // points with B / 2 < |t| <= B
    std::size_t threshold = 0;
    std::vector<std::string> notes;
};

// Compares the points up to B / 2 with those up to B.  A Finite verdict
// together with more than max(known_exceptions, 4) new points is flagged;
// known_exceptions is the size of the exceptional set known in advance.
// Any other combination only gets notes.
Reconciliation reconcile(const ScanReport& report, const Verdict& v, std::size_t known_exceptions = 0);

}  // namespace hit
