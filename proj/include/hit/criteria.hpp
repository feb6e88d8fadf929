#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hit/cover.hpp"
#include "hit/perm.hpp"
#include "hit/verdict.hpp"

namespace hit {

// Monodromy and ramification data of an irreducible f(t, X), with A acting
// on the n roots.
struct RamificationDatum {
    PermGroup A;
    std::optional<PermGroup> G;  // geometric group; defaults to the branch group, then to A
    Permutation sigma_inf;       // inertia generator over t = infinity, on roots
    std::optional<PermGroup> D_inf;
    std::optional<BranchCycleDescription> branch;
    FieldFlag field = FieldFlag::Q;
    RingFlag ring = RingFlag::Z;
    std::optional<bool> rational_unramified_place_at_infinity;
    bool rational_spec_mode = false;  // study Red_f(k) instead of Red_f(R)

    int degree() const { return A.degree(); }
    PermGroup geometric() const;
    bool q_and_z() const { return field == FieldFlag::Q && ring == RingFlag::Z; }
    // Throws InputError when an invariant fails.
    void validate() const;
};

struct CriterionResult {
    std::string criterion;
    std::string tag;
    bool applicable = false;
    bool fired = false;
    std::string reason;
    std::vector<std::string> notes;
};

struct AbsIrrCheck {
    bool absolutely_irreducible = false;  // G transitive on roots
    bool a_simple = false;
    bool a_primitive = false;
    // A simple or primitive while G is intransitive: reducible
    // specializations are finite in number.
    bool obstructed = false;
};

AbsIrrCheck absolute_irreducibility_check(const RamificationDatum& d);

CriterionResult criterion_unram(const RamificationDatum& d);
CriterionResult criterion_gcd1(const RamificationDatum& d);
CriterionResult criterion_rat(const RamificationDatum& d);
CriterionResult criterion_prime(const RamificationDatum& d);
CriterionResult criterion_doubly(const RamificationDatum& d);
CriterionResult criterion_primitive_cf(const RamificationDatum& d);
CriterionResult criterion_simple_galois(const RamificationDatum& d);
CriterionResult criterion_absirr(const RamificationDatum& d);

// Criterion ids in evaluation order.
const std::vector<std::string>& criterion_order();
CriterionResult run_criterion(const std::string& id, const RamificationDatum& d);

// Whether a nonabelian simple group name lies in CF(k) for the field flag.
bool in_cf_table(const std::string& simple_name, FieldFlag field);

// Candidate stabilizers A_z (index-2 subgroups, stabilizers of k-subsets
// and of blocks) with index at most 2 ord(sigma), checked against the
// conditions at infinity on A/A_z.
std::vector<CandidateConfig> siegel_constraint_report(const RamificationDatum& d);

// Runs every criterion and merges an optional shape verdict.  Finite when
// a criterion fired, InfiniteWitness when only the shape verdict supplied
// a witness, otherwise Inconclusive with the candidate report.
Verdict verdict(const RamificationDatum& d, const std::optional<Verdict>& shape = std::nullopt);

// Re-runs the criterion behind a fired entry; false if it no longer fires.
bool reassert(const RamificationDatum& d, const FiredCriterion& f);

}  // namespace hit
