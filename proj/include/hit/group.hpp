#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hit/perm.hpp"

namespace hit {

using Partition = std::vector<std::vector<int>>;

// --- orbits and actions on points ------------------------------------------

std::vector<int> orbit(const PermGroup& g, int x);
// Orbits sorted by smallest point, each orbit sorted.
Partition orbits(const PermGroup& g);
Partition orbits(int degree, const std::vector<Permutation>& gens);
bool is_transitive(const PermGroup& g);

// Finest block system in which a and b share a block (Atkinson's
// union-find), returned as point -> block label (labels are smallest
// points).
std::vector<int> minimal_block_labels(const PermGroup& g, int a, int b);

// Every nontrivial block system, each as a sorted partition.  Systems are
// sorted by block size.  Throws InputError for intransitive g.
std::vector<Partition> block_systems(const PermGroup& g);
bool is_primitive(const PermGroup& g);
bool is_2transitive(const PermGroup& g);

// Number of orbits of g on ordered pairs (i, j) with i from a set of size
// e_degree and j from a set of size f_degree, where the two actions are
// given by generator images on both sets.
std::size_t orbits_on_product(const std::vector<Permutation>& e_gens,
                              const std::vector<Permutation>& f_gens);

// If g is recognizably Alt(n) or Sym(n) (primitive and containing a
// Jordan element among generator powers), returns its order.
std::optional<std::uint64_t> giant_order(const PermGroup& g);

enum class GiantKind { None, Alternating, Symmetric };
GiantKind giant_kind(const PermGroup& g);

// --- subgroups -------------------------------------------------------------

// Subgroup of elements of g satisfying pred (which must define a
// subgroup), with a small generating set.
template <class Pred>
PermGroup subgroup_by_filter(const PermGroup& g, Pred pred);

PermGroup subgroup_from_elements(int degree, const std::vector<Permutation>& elems);

PermGroup stabilizer(const PermGroup& g, int x);
PermGroup setwise_stabilizer(const PermGroup& g, const std::vector<int>& set);
PermGroup normalizer(const PermGroup& g, const PermGroup& h);
PermGroup centralizer(const PermGroup& g, const Permutation& x);
PermGroup intersection(const PermGroup& a, const PermGroup& b);
PermGroup join(const PermGroup& a, const PermGroup& b);

bool is_subgroup(const PermGroup& h, const PermGroup& g);
bool is_normal(const PermGroup& g, const PermGroup& n);
bool same_group(const PermGroup& a, const PermGroup& b);
// |N H| = |N| |H| / |N cap H|; n and h must lie in g.
std::uint64_t product_size(const PermGroup& g, const PermGroup& n, const PermGroup& h);

// Normal closure of s in the group generated by ambient_gens.  Gives up
// and returns nullopt if the closure would exceed limit elements.
std::optional<PermGroup> normal_closure(int degree, const std::vector<Permutation>& ambient_gens,
                                        const std::vector<Permutation>& s, std::size_t limit);
PermGroup normal_closure(const PermGroup& g, const std::vector<Permutation>& s);

PermGroup derived_subgroup(const PermGroup& g);
bool has_index2_subgroup(const PermGroup& g);
// Subgroup generated by all squares; it contains the derived subgroup.
PermGroup square_subgroup(const PermGroup& g);

// All normal subgroups (including 1 and g), sorted by order.
std::vector<PermGroup> normal_subgroups(const PermGroup& g);

// --- composition factors ---------------------------------------------------

struct CompositionFactor {
    std::uint64_t order = 1;
    bool abelian = true;
    std::string name;  // "C2", "A5", "PSL2(7)", "M11", or "simple(order=N)"
    bool identified = true;
};

// Factors listed from the top of the series down.
std::vector<CompositionFactor> composition_factors(const PermGroup& g);
bool is_simple(const PermGroup& g);

// Name of a nonabelian simple group of the given order, or nullopt when the
// order is ambiguous or unknown.  has_order_15 disambiguates 20160.
std::optional<std::string> simple_group_name(std::uint64_t order, std::optional<bool> has_order_15 = {});

// --- constructions ---------------------------------------------------------

enum class WreathMode { Imprimitive, Product };

// G wr H with G on n points and H on p points.  Imprimitive: point
// (i in block j) is j*n + i.  Product: tuple (x_0, ..., x_{p-1}) is
// sum x_j n^j, and h moves coordinate j to coordinate h(j).
PermGroup wreath_product(const PermGroup& g, const PermGroup& h, WreathMode mode);
PermGroup direct_product(const PermGroup& a, const PermGroup& b);

// --- template implementation -----------------------------------------------

template <class Pred>
PermGroup subgroup_by_filter(const PermGroup& g, Pred pred) {
    const ElementSet& all = g.elements();
    const int n = g.degree();
    ElementSet sub(n);
    sub.insert(Permutation::identity(n));
    std::vector<Permutation> gens;
    for (const auto& e : all.elements()) {
        if (sub.contains(e) || !pred(e)) continue;
        extend_closure(sub, gens, e, all.size());
        gens.push_back(e);
    }
    return PermGroup(n, std::move(gens), std::move(sub));
}

}  // namespace hit
