#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hit/action.hpp"
#include "hit/chartab.hpp"
#include "hit/perm.hpp"

namespace hit {

// Branch cycles sigma_1, ..., sigma_r with product one; the group they
// generate is the geometric monodromy group.
struct BranchCycleDescription {
    PermGroup group;
    std::vector<Permutation> cycles;
    std::optional<std::size_t> infinity_index;

    int degree() const { return group.degree(); }

    // Validates product one and transitivity.  When claimed is given, the
    // cycles must generate exactly that group.
    static BranchCycleDescription make(int degree, std::vector<Permutation> cycles,
                                       std::optional<std::size_t> infinity_index = {},
                                       const std::optional<PermGroup>& claimed = {});
};

// Branch cycles of Z^m - Z: the transpositions (0 1), (1 2), ..., (m-2 m-1)
// followed by the m-cycle closing the product, marked as infinity.
BranchCycleDescription zm_minus_z(int m);

// Degree minus number of cycles.
int ind(const Permutation& p);

// g(E) from 2(n - 1 + g) = sum ind(pi_E(sigma_i)).  Throws InputError when
// the induced action is intransitive or the result is not a non-negative
// integer.
long long rh_genus(const BranchCycleDescription& b, const Action& action);
long long rh_genus(const BranchCycleDescription& b);

struct ScottReport {
    long long lhs = 0;  // 2 (n - d(G))
    long long rhs = 0;  // sum (n - d(sigma_i))
    bool holds = true;
};

// d(.) is the number of orbits of the induced action.
ScottReport scott_check(const std::vector<Permutation>& cycles, const Action& action);

struct OrbitComparison {
    std::size_t index = 0;  // position of sigma_i
    int orbits_e = 0;       // orbits of <pi_E(sigma_i)>
    int orbits_f = 0;
};

struct GenusComparison {
    long long g_e = 0;
    long long g_f = 0;
    CharacterCheck difference;                  // is pi_F - pi_E a character
    std::vector<OrbitComparison> orbit_comparisons;
};

// Computes both genera and the character test.  When pi_F - pi_E is
// certified a character, g_E <= g_F and orbits_e <= orbits_f for every
// sigma_i are asserted (InvariantViolation otherwise).
GenusComparison genus_compare(const BranchCycleDescription& b, const Action& e, const Action& f,
                              const CharacterTable* table = nullptr, bool allow_table = true);

struct PlacesAtInfinity {
    int count = 0;
    std::vector<int> lengths;  // ramification indices, descending
};

PlacesAtInfinity places_above_infinity(const BranchCycleDescription& b, const Action& action);
PlacesAtInfinity places_above_infinity(const BranchCycleDescription& b);

struct WreathGenus {
    long long genus = 0;        // (n^(p-1) - 1)(np - n - p)/p
    long long ind_sigma = 0;    // (n^p - n)(1 - 1/p)
    long long sum_ind_tau = 0;  // 2 n^(p-1) (n - 1)
};

WreathGenus wreath_genus_formula(long long n, long long p);

// Explicit branch cycles on Delta^p for S_n wr C_p in product action: the
// coordinate shift and its inverse, then 2(n-1) transpositions (j j+1),
// each twice, acting in coordinate 0.
BranchCycleDescription wreath_branch_data(int n, int p);

// 1 + C(m,k)(mk - k^2 - m - 1)/(2m); throws InputError if not integral.
long long kset_genus_formula(int m, int k);

// r permutations of g whose product is one: r-1 random elements and the
// inverse of their product.
std::vector<Permutation> random_product_one_tuple(const PermGroup& g, int r, std::mt19937_64& rng);

}  // namespace hit
