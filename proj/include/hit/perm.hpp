#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hit {

// A permutation of {0, ..., n-1} stored as its image list.
//
// Products are read left to right: (p * q)(x) = q(p(x)), i.e. p is
// applied first.  This convention is used everywhere in the library.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    // Skips the bijection check; for images produced by trusted code.
    static Permutation unchecked(std::vector<int> images);
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

    // Accepts cycle notation "(0 1 2)(3 4)", "()" for the identity, or an
    // image list "[1, 2, 0]".  Commas inside cycles are allowed.
    static Permutation parse(std::string_view text, int degree);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int x) const { return img_[static_cast<std::size_t>(x)]; }
    const std::vector<int>& images() const { return img_; }

    Permutation inverse() const;
    Permutation pow(long long e) const;
    bool is_identity() const;
    bool is_even() const;

    // Non-trivial cycles, each starting at its smallest point.
    std::vector<std::vector<int>> cycles() const;
    // All cycle lengths including fixed points, sorted descending.
    std::vector<int> cycle_type() const;
    int num_cycles() const;
    int num_fixed_points() const;
    std::uint64_t order() const;

    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> img_;
};

// Left-to-right product: the result maps x to q(p(x)).
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

// x^g = g^-1 x g, which sends g(i) to g(x(i)).
Permutation conjugate(const Permutation& x, const Permutation& g);
Permutation commutator(const Permutation& a, const Permutation& b);

std::size_t hash_value(const Permutation& p);

struct PermHash {
    std::size_t operator()(const Permutation& p) const { return hash_value(p); }
};

// Insertion-ordered set of permutations with open-addressing lookup.
class ElementSet {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    explicit ElementSet(int degree = 0);

    int degree() const { return degree_; }
    std::size_t size() const { return elems_.size(); }
    const Permutation& operator[](std::size_t i) const { return elems_[i]; }
    const std::vector<Permutation>& elements() const { return elems_; }

    std::size_t find(const Permutation& p) const;
    bool contains(const Permutation& p) const { return find(p) != npos; }
    // Returns the index of p, inserting it if new.
    std::size_t insert(const Permutation& p);

private:
    void rehash(std::size_t buckets);

    int degree_;
    std::vector<Permutation> elems_;
    std::vector<std::uint32_t> slots_;
};

// Global limits for brute-force algorithms.
struct Limits {
    std::size_t group_cap = 100000;  // largest group ever materialized
    std::size_t table_cap = 100000;  // largest group for character tables
    std::size_t table_classes = 60;  // most classes for character tables
    std::size_t subgroup_lattice_cap = 500;
};
Limits& limits();

// Closure of gens starting from an existing group.  Returns false (leaving
// the set partially filled) once the size would exceed limit.
bool extend_closure(ElementSet& group, const std::vector<Permutation>& old_gens,
                    const Permutation& new_gen, std::size_t limit);

// Full closure of gens.  Returns nullopt when the size exceeds limit.
std::optional<ElementSet> closure_limited(int degree, const std::vector<Permutation>& gens,
                                          std::size_t limit);

struct ConjugacyClasses {
    std::vector<std::size_t> reps;          // element indices
    std::vector<std::size_t> sizes;
    std::vector<std::uint32_t> class_of;    // per element index
};

// A subgroup of Sym(n) given by generators.  Element lists and conjugacy
// classes are computed on demand and shared between copies.
class PermGroup {
public:
    PermGroup() : PermGroup(1, {}) {}
    PermGroup(int degree, std::vector<Permutation> generators);
    PermGroup(int degree, std::vector<Permutation> generators, ElementSet elements);

    static PermGroup trivial(int degree);
    static PermGroup parse(int degree, const std::vector<std::string>& generators);

    int degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return gens_; }

    // Group order.  Uses a recorded order if known, a giant-group test,
    // and otherwise materializes the group.
    std::uint64_t order() const;
    std::optional<std::uint64_t> known_order() const;
    PermGroup with_known_order(std::uint64_t order) const;

    // Throws CapExceeded when the group is larger than limits().group_cap.
    const ElementSet& elements() const;
    bool is_materialized() const;
    bool contains(const Permutation& p) const;

    // Classes sorted by cycle type (parts descending, compared
    // lexicographically), ties broken by the lexicographically least
    // element, which is also the stored representative.
    const ConjugacyClasses& classes() const;

    const std::string& label() const { return label_; }
    PermGroup with_label(std::string label) const;

private:
    struct Cache;
    int degree_;
    std::vector<Permutation> gens_;
    std::string label_;
    std::shared_ptr<Cache> cache_;
};

}  // namespace hit
