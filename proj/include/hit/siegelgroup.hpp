#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hit/action.hpp"
#include "hit/group.hpp"
#include "hit/perm.hpp"

namespace hit {

// A primitive group A, a nontrivial normal subgroup G and a cyclic
// subgroup I = <i_gen> of G, all on the same points.
struct AgdiInstance {
    PermGroup A;
    PermGroup G;
    PermGroup I;
    Permutation i_gen;

    // Validates the invariants; throws InputError when one fails.
    static AgdiInstance make(PermGroup A, PermGroup G, const Permutation& i_gen);
};

struct AgdiHypotheses {
    bool a_holds = false;  // I has at most two orbits
    bool b_holds = false;  // A = G N_A(I)
    int i_orbits = 0;
};

AgdiHypotheses agdi_hypotheses(const AgdiInstance& inst);
// Primitivity of G.  Throws InputError when a hypothesis fails.
bool agdi_conclusion(const AgdiInstance& inst);

struct AbsindCertificate {
    bool issued = false;
    bool used_b = false;  // false when I is transitive
    std::string reason;
};
// Certificate that G is primitive (monodromy indecomposable over the
// algebraic closure).  Not issued when the preconditions fail.
AbsindCertificate absind_transfer(const AgdiInstance& inst);

// A = (S_m x S_m) : C_2 in product action on m^2 points, G = S_m x S_m and
// I generated by (m-cycle, (m-1)-cycle).  Needs m >= 3 and 2 (m!)^2 within
// the group cap.
AgdiInstance build_agdi_counterexample(int m);

struct AgdiSweepReport {
    std::size_t groups = 0;
    std::size_t instances = 0;         // (A, G, I) triples up to conjugacy with (a)
    std::size_t hypotheses_hold = 0;   // both (a) and (b)
    std::size_t b_failures = 0;
    std::vector<std::string> violations;
    std::vector<std::string> skipped;
};

// Every primitive catalog group of degree <= max_degree and order <=
// max_order, every nontrivial normal subgroup G and every cyclic subgroup
// of G up to conjugacy in A.
AgdiSweepReport agdi_sweep(int max_degree = 12, std::uint64_t max_order = 100000, unsigned threads = 0);

struct WreathIntransitive {
    PermGroup W;          // G^p : H, imprimitive on n p points
    PermGroup W_tilde;
    Partition blocks;
    Action product = Action::natural(1);  // action on Delta^p
    PermGroup product_image;
    bool product_primitive = false;
    PermGroup V;          // stabilizer of a point of Delta^p, on n p points
    std::vector<int> v_orbit_lengths;
};

// G primitive and non-regular on n points, p prime, C_p <= H <= AGL_1(p)
// on p points.  W_tilde defaults to W and must normalize it.
WreathIntransitive wreath_maximal_intransitive(const PermGroup& G, int p, const PermGroup& H,
                                               const std::optional<PermGroup>& W_tilde = std::nullopt);

struct BlockDecomposition {
    Partition blocks;
    int block_size = 0;
    int num_blocks = 0;
    // The block stabilizer induces a cyclic-by-2 group on a block.
    bool inner_cyclic_by_2 = false;
};

// One entry per nontrivial block system of a transitive group.
std::vector<BlockDecomposition> decompositions_via_blocks(const PermGroup& mono);

}  // namespace hit
