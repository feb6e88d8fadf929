#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hit/group.hpp"
#include "hit/perm.hpp"

namespace hit {

// A permutation action derived from the natural action on {0..n-1}.
// apply() maps a permutation of the source points to the induced
// permutation of the target set.
class Action {
public:
    static Action natural(int n);
    // Lexicographically ordered k-subsets.
    static Action k_subsets(int n, int k);
    // Action on the blocks of an invariant partition.
    static Action on_blocks(int n, Partition blocks);
    // Diagonal action on Delta^p, tuple index sum x_j n^j.
    static Action cartesian_power(int n, int p);
    // Product action of a group preserving p blocks of equal size n on the
    // transversals Delta_0 x ... x Delta_{p-1}; tuple index sum d_j n^j
    // where d_j is the position of the chosen point inside block j.
    static Action product_on_blocks(int degree, Partition blocks);
    // Right cosets H x of a subgroup H of g, ordered by first appearance
    // in the element list of g; the coset of the identity is point 0.
    static Action on_cosets(const PermGroup& g, const PermGroup& h);

    int source_degree() const;
    int degree() const;
    Permutation apply(const Permutation& p) const;
    std::vector<Permutation> apply_all(const std::vector<Permutation>& ps) const;
    PermGroup image(const PermGroup& g) const;
    std::string describe() const;
    std::vector<std::string> point_labels() const;

    struct Impl;

private:
    explicit Action(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

}  // namespace hit
