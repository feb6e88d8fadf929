#pragma once

#include <json.hpp>
#include <string>

#include "hit/action.hpp"
#include "hit/chartab.hpp"
#include "hit/cover.hpp"
#include "hit/criteria.hpp"
#include "hit/perm.hpp"
#include "hit/scanner.hpp"
#include "hit/verdict.hpp"

namespace hit {

using json = nlohmann::json;

// Parses JSON text; syntax errors become InputError with line and column.
json parse_json(const std::string& text, const std::string& source = "input");

// A permutation is an array of 0-based images or a cycle string.
Permutation perm_from_json(const json& j, int degree, const std::string& path = "");
json perm_to_json(const Permutation& p);

// {"degree": n, "generators": [...]} or {"catalog": "M11"}.
PermGroup group_from_json(const json& j, const std::string& path = "");
json group_to_json(const PermGroup& g);

// {"degree": n, "cycles": [...], "infinity_index": i}.
BranchCycleDescription branch_from_json(const json& j, const std::string& path = "");
json branch_to_json(const BranchCycleDescription& b);

// "natural", "subsets:k" or "power:p".
Action action_from_spec(const std::string& spec, int degree);

RamificationDatum datum_from_json(const json& j);
json datum_to_json(const RamificationDatum& d);

json verdict_to_json(const Verdict& v);
json scan_to_json(const ScanReport& r);
json table_to_json(const CharacterTable& t);

}  // namespace hit
