#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hit/criteria.hpp"
#include "hit/poly.hpp"

namespace hit {

// Shape analysis of f, then the criteria on d when a datum is given.
Verdict verdict_for_polynomial(const RationalBivarPoly& f, FieldFlag field, RingFlag ring,
                               const std::optional<RamificationDatum>& d = std::nullopt);

struct CheckResult {
    std::string group;  // "identity", "genus", "agdi", "verdict", "scan"
    std::string name;
    bool passed = false;
    std::string detail;
};

// Names accepted by the --only filter: a group or a check name.
std::vector<std::string> verification_items();

// Runs the published identities and theorem checks.  An empty filter runs
// everything; inject_fault perturbs every identity.
std::vector<CheckResult> verify_paper(const std::vector<std::string>& only = {}, bool inject_fault = false);

}  // namespace hit
