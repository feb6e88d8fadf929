#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hit/perm.hpp"

namespace hit {

enum class Family { Symmetric, Alternating, Cyclic, Dihedral, AGL1, PSL2, M11, M12 };

// Identifier of a catalog group.  Text forms: "S5", "A6", "C4", "D5",
// "AGL1(7)", "PSL2(7)@8", "M11", "M12".  For PSL2 the parameter is q and
// the degree selects the action.
struct GroupId {
    Family family = Family::Symmetric;
    int param = 1;
    int degree = 1;

    static GroupId parse(const std::string& text);
    std::string to_string() const;
    friend bool operator==(const GroupId&, const GroupId&) = default;
};

// Known order of the named group (independent of the stored generators).
std::uint64_t known_order(const GroupId& id);

// Builds the group and re-verifies its order: by closure when the order is
// within the materialization cap, otherwise by Jordan's criterion.  Throws
// InputError for ids outside the catalog and InvariantViolation when the
// stored generators do not produce the expected order.
PermGroup named_group(const GroupId& id);
PermGroup named_group(const std::string& id);

// Every catalog entry (S_n, A_n for n <= 12; C_n, D_n for n <= 12; AGL1(p)
// for p <= 23; the stored PSL2 and Mathieu actions).
std::vector<GroupId> catalog_ids();

// Version number of the stored generator data file.
int catalog_data_version();

}  // namespace hit
