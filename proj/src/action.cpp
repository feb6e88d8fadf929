#include "hit/action.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "hit/error.hpp"

namespace hit {

struct Action::Impl {
    virtual ~Impl() = default;
    virtual int source_degree() const = 0;
    virtual int degree() const = 0;
    virtual Permutation apply(const Permutation& p) const = 0;
    virtual std::string describe() const = 0;
    virtual std::string label(int point) const { return std::to_string(point); }
};

namespace {

void check_source(const Permutation& p, int n) {
    if (p.degree() != n)
        throw InputError("action on " + std::to_string(n) + " points applied to a permutation of degree " +
                         std::to_string(p.degree()));
}

std::string set_label(const std::vector<int>& s) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << '}';
    return os.str();
}

struct NaturalImpl : Action::Impl {
    int n;
    explicit NaturalImpl(int n_) : n(n_) {}
    int source_degree() const override { return n; }
    int degree() const override { return n; }
    Permutation apply(const Permutation& p) const override {
        check_source(p, n);
        return p;
    }
    std::string describe() const override { return "natural"; }
};

struct SubsetImpl : Action::Impl {
    int n, k;
    std::vector<std::vector<int>> subsets;
    std::map<std::vector<int>, int> index;
    SubsetImpl(int n_, int k_) : n(n_), k(k_) {
        std::vector<int> cur;
        build(0, cur);
        for (std::size_t i = 0; i < subsets.size(); ++i) index[subsets[i]] = static_cast<int>(i);
    }
    void build(int start, std::vector<int>& cur) {
        if (static_cast<int>(cur.size()) == k) {
            subsets.push_back(cur);
            return;
        }
        for (int x = start; x < n; ++x) {
            cur.push_back(x);
            build(x + 1, cur);
            cur.pop_back();
        }
    }
    int source_degree() const override { return n; }
    int degree() const override { return static_cast<int>(subsets.size()); }
    Permutation apply(const Permutation& p) const override {
        check_source(p, n);
        std::vector<int> img(subsets.size());
        std::vector<int> s(static_cast<std::size_t>(k));
        for (std::size_t i = 0; i < subsets.size(); ++i) {
            for (int j = 0; j < k; ++j) s[static_cast<std::size_t>(j)] = p(subsets[i][static_cast<std::size_t>(j)]);
            std::sort(s.begin(), s.end());
            img[i] = index.at(s);
        }
        return Permutation::unchecked(std::move(img));
    }
    std::string describe() const override { return std::to_string(k) + "-subsets"; }
    std::string label(int point) const override { return set_label(subsets[static_cast<std::size_t>(point)]); }
};

struct BlockImpl : Action::Impl {
    int n;
    Partition blocks;
    std::vector<int> block_of;
    BlockImpl(int n_, Partition b) : n(n_), blocks(std::move(b)), block_of(static_cast<std::size_t>(n_), -1) {
        for (auto& blk : blocks) std::sort(blk.begin(), blk.end());
        std::sort(blocks.begin(), blocks.end());
        for (std::size_t i = 0; i < blocks.size(); ++i)
            for (int x : blocks[i]) {
                if (x < 0 || x >= n || block_of[static_cast<std::size_t>(x)] != -1)
                    throw InputError("block list is not a partition of the points");
                block_of[static_cast<std::size_t>(x)] = static_cast<int>(i);
            }
        if (std::find(block_of.begin(), block_of.end(), -1) != block_of.end())
            throw InputError("block list does not cover every point");
    }
    int source_degree() const override { return n; }
    int degree() const override { return static_cast<int>(blocks.size()); }
    Permutation apply(const Permutation& p) const override {
        check_source(p, n);
        std::vector<int> img(blocks.size());
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            const int target = block_of[static_cast<std::size_t>(p(blocks[i][0]))];
            for (int x : blocks[i])
                if (block_of[static_cast<std::size_t>(p(x))] != target)
                    throw InputError("permutation " + p.to_string() + " does not preserve the block system");
            img[i] = target;
        }
        return Permutation(std::move(img));
    }
    std::string describe() const override { return "blocks of size " + std::to_string(blocks[0].size()); }
    std::string label(int point) const override { return set_label(blocks[static_cast<std::size_t>(point)]); }
};

struct PowerImpl : Action::Impl {
    int n, p, deg;
    PowerImpl(int n_, int p_) : n(n_), p(p_), deg(1) {
        for (int j = 0; j < p; ++j) {
            if (static_cast<long long>(deg) * n > 2000000) throw CapExceeded("cartesian power too large");
            deg *= n;
        }
    }
    int source_degree() const override { return n; }
    int degree() const override { return deg; }
    Permutation apply(const Permutation& g) const override {
        check_source(g, n);
        std::vector<int> img(static_cast<std::size_t>(deg));
        for (int idx = 0; idx < deg; ++idx) {
            int rest = idx, out = 0, pw = 1;
            for (int j = 0; j < p; ++j) {
                out += g(rest % n) * pw;
                rest /= n;
                pw *= n;
            }
            img[static_cast<std::size_t>(idx)] = out;
        }
        return Permutation::unchecked(std::move(img));
    }
    std::string describe() const override { return "cartesian power " + std::to_string(p); }
};

struct ProductImpl : Action::Impl {
    int n_src, bsize, nblocks, deg;
    Partition blocks;
    std::vector<int> block_of, pos_in_block;
    ProductImpl(int degree, Partition b) : n_src(degree), blocks(std::move(b)) {
        for (auto& blk : blocks) std::sort(blk.begin(), blk.end());
        std::sort(blocks.begin(), blocks.end());
        nblocks = static_cast<int>(blocks.size());
        bsize = nblocks ? static_cast<int>(blocks[0].size()) : 0;
        block_of.assign(static_cast<std::size_t>(degree), -1);
        pos_in_block.assign(static_cast<std::size_t>(degree), -1);
        for (int i = 0; i < nblocks; ++i) {
            if (static_cast<int>(blocks[static_cast<std::size_t>(i)].size()) != bsize)
                throw InputError("product action needs blocks of equal size");
            for (int j = 0; j < bsize; ++j) {
                int x = blocks[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (x < 0 || x >= degree || block_of[static_cast<std::size_t>(x)] != -1)
                    throw InputError("block list is not a partition of the points");
                block_of[static_cast<std::size_t>(x)] = i;
                pos_in_block[static_cast<std::size_t>(x)] = j;
            }
        }
        deg = 1;
        for (int j = 0; j < nblocks; ++j) {
            if (static_cast<long long>(deg) * bsize > 2000000) throw CapExceeded("product action too large");
            deg *= bsize;
        }
    }
    int source_degree() const override { return n_src; }
    int degree() const override { return deg; }
    Permutation apply(const Permutation& g) const override {
        check_source(g, n_src);
        std::vector<int> pw(static_cast<std::size_t>(nblocks), 1);
        for (int j = 1; j < nblocks; ++j) pw[static_cast<std::size_t>(j)] = pw[static_cast<std::size_t>(j - 1)] * bsize;
        std::vector<int> img(static_cast<std::size_t>(deg));
        for (int idx = 0; idx < deg; ++idx) {
            int rest = idx, out = 0;
            for (int j = 0; j < nblocks; ++j) {
                int x = blocks[static_cast<std::size_t>(j)][static_cast<std::size_t>(rest % bsize)];
                rest /= bsize;
                int y = g(x);
                out += pos_in_block[static_cast<std::size_t>(y)] * pw[static_cast<std::size_t>(block_of[static_cast<std::size_t>(y)])];
            }
            img[static_cast<std::size_t>(idx)] = out;
        }
        return Permutation(std::move(img));
    }
    std::string describe() const override {
        return "product action on " + std::to_string(nblocks) + " blocks of size " + std::to_string(bsize);
    }
};

struct CosetImpl : Action::Impl {
    PermGroup g;
    std::vector<std::size_t> reps;          // element indices of coset reps
    std::vector<std::uint32_t> coset_of;    // per element index of g
    CosetImpl(const PermGroup& g_, const PermGroup& h) : g(g_) {
        if (!is_subgroup(h, g)) throw InputError("coset action needs a subgroup");
        const ElementSet& el = g.elements();
        const ElementSet& he = h.elements();
        constexpr std::uint32_t unset = 0xffffffffu;
        coset_of.assign(el.size(), unset);
        for (std::size_t i = 0; i < el.size(); ++i) {
            if (coset_of[i] != unset) continue;
            const auto c = static_cast<std::uint32_t>(reps.size());
            reps.push_back(i);
            for (const auto& x : he.elements()) coset_of[el.find(x * el[i])] = c;
        }
    }
    int source_degree() const override { return g.degree(); }
    int degree() const override { return static_cast<int>(reps.size()); }
    Permutation apply(const Permutation& p) const override {
        const ElementSet& el = g.elements();
        if (!el.contains(p)) throw InputError("coset action applied to an element outside the group");
        std::vector<int> img(reps.size());
        for (std::size_t i = 0; i < reps.size(); ++i)
            img[i] = static_cast<int>(coset_of[el.find(el[reps[i]] * p)]);
        return Permutation(std::move(img));
    }
    std::string describe() const override { return "cosets of a subgroup of index " + std::to_string(reps.size()); }
};

}  // namespace

Action Action::natural(int n) { return Action(std::make_shared<NaturalImpl>(n)); }

Action Action::k_subsets(int n, int k) {
    if (k < 0 || k > n) throw InputError("k-subsets need 0 <= k <= n");
    return Action(std::make_shared<SubsetImpl>(n, k));
}

Action Action::on_blocks(int n, Partition blocks) { return Action(std::make_shared<BlockImpl>(n, std::move(blocks))); }

Action Action::cartesian_power(int n, int p) {
    if (p < 1) throw InputError("cartesian power needs p >= 1");
    return Action(std::make_shared<PowerImpl>(n, p));
}

Action Action::product_on_blocks(int degree, Partition blocks) {
    return Action(std::make_shared<ProductImpl>(degree, std::move(blocks)));
}

Action Action::on_cosets(const PermGroup& g, const PermGroup& h) {
    return Action(std::make_shared<CosetImpl>(g, h));
}

int Action::source_degree() const { return impl_->source_degree(); }
int Action::degree() const { return impl_->degree(); }
Permutation Action::apply(const Permutation& p) const { return impl_->apply(p); }

std::vector<Permutation> Action::apply_all(const std::vector<Permutation>& ps) const {
    std::vector<Permutation> out;
    out.reserve(ps.size());
    for (const auto& p : ps) out.push_back(apply(p));
    return out;
}

PermGroup Action::image(const PermGroup& g) const { return PermGroup(degree(), apply_all(g.generators())); }

std::string Action::describe() const { return impl_->describe(); }

std::vector<std::string> Action::point_labels() const {
    std::vector<std::string> out;
    for (int i = 0; i < degree(); ++i) out.push_back(impl_->label(i));
    return out;
}

}  // namespace hit
