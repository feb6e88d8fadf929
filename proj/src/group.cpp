#include "hit/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "hit/error.hpp"

namespace hit {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            auto& p = parent[static_cast<std::size_t>(x)];
            p = parent[static_cast<std::size_t>(p)];
            x = p;
        }
        return x;
    }
    // Keeps the smaller root so labels end up being block minima.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);
        parent[static_cast<std::size_t>(b)] = a;
        return true;
    }
};

Partition labels_to_partition(const std::vector<int>& labels) {
    std::map<int, std::vector<int>> blocks;
    for (std::size_t i = 0; i < labels.size(); ++i) blocks[labels[i]].push_back(static_cast<int>(i));
    Partition out;
    for (auto& [k, v] : blocks) out.push_back(std::move(v));
    return out;
}

std::uint64_t factorial(int n) {
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
    return r;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void require_transitive(const PermGroup& g, const char* what) {
    if (!is_transitive(g)) throw InputError(std::string(what) + " requires a transitive group");
}

}  // namespace

// --- orbits ----------------------------------------------------------------

std::vector<int> orbit(const PermGroup& g, int x) {
    if (x < 0 || x >= g.degree()) throw InputError("point out of range");
    std::vector<char> seen(static_cast<std::size_t>(g.degree()), 0);
    std::vector<int> orb{x};
    seen[static_cast<std::size_t>(x)] = 1;
    for (std::size_t k = 0; k < orb.size(); ++k)
        for (const auto& s : g.generators()) {
            int y = s(orb[k]);
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = 1;
                orb.push_back(y);
            }
        }
    std::sort(orb.begin(), orb.end());
    return orb;
}

Partition orbits(int degree, const std::vector<Permutation>& gens) {
    UnionFind uf(degree);
    for (const auto& s : gens)
        for (int i = 0; i < degree; ++i) uf.unite(i, s(i));
    std::vector<int> labels(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) labels[static_cast<std::size_t>(i)] = uf.find(i);
    return labels_to_partition(labels);
}

Partition orbits(const PermGroup& g) { return orbits(g.degree(), g.generators()); }

bool is_transitive(const PermGroup& g) { return orbits(g).size() == 1; }

std::vector<int> minimal_block_labels(const PermGroup& g, int a, int b) {
    const int n = g.degree();
    UnionFind uf(n);
    std::vector<std::pair<int, int>> queue;
    if (uf.unite(a, b)) queue.emplace_back(a, b);
    for (std::size_t k = 0; k < queue.size(); ++k) {
        auto [x, y] = queue[k];
        for (const auto& s : g.generators()) {
            int u = uf.find(s(x));
            int v = uf.find(s(y));
            if (u != v) {
                uf.unite(u, v);
                queue.emplace_back(u, v);
            }
        }
    }
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = uf.find(i);
    return labels;
}

std::vector<Partition> block_systems(const PermGroup& g) {
    require_transitive(g, "block_systems");
    const int n = g.degree();
    std::set<std::vector<int>> found;
    std::vector<std::vector<int>> work;
    auto nontrivial = [&](const std::vector<int>& labels) {
        return std::any_of(labels.begin(), labels.end(), [](int l) { return l != 0; });
    };
    for (int b = 1; b < n; ++b) {
        auto labels = minimal_block_labels(g, 0, b);
        if (nontrivial(labels) && found.insert(labels).second) work.push_back(labels);
    }
    // The join of two invariant partitions is invariant, and every block
    // system is a join of the minimal ones seeded at point 0.
    const std::vector<std::vector<int>> seeds = work;
    for (std::size_t k = 0; k < work.size(); ++k) {
        for (const auto& s : seeds) {
            UnionFind uf(n);
            for (int i = 0; i < n; ++i) {
                uf.unite(i, work[k][static_cast<std::size_t>(i)]);
                uf.unite(i, s[static_cast<std::size_t>(i)]);
            }
            std::vector<int> labels(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = uf.find(i);
            if (nontrivial(labels) && found.insert(labels).second) work.push_back(labels);
        }
    }
    std::vector<Partition> out;
    for (const auto& l : found) out.push_back(labels_to_partition(l));
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        if (a[0].size() != b[0].size()) return a[0].size() < b[0].size();
        return a < b;
    });
    return out;
}

bool is_primitive(const PermGroup& g) {
    require_transitive(g, "is_primitive");
    for (int b = 1; b < g.degree(); ++b) {
        auto labels = minimal_block_labels(g, 0, b);
        if (std::any_of(labels.begin(), labels.end(), [](int l) { return l != 0; })) return false;
    }
    return true;
}

std::size_t orbits_on_product(const std::vector<Permutation>& e_gens, const std::vector<Permutation>& f_gens) {
    if (e_gens.size() != f_gens.size()) throw InputError("actions have different generator counts");
    if (e_gens.empty()) return 0;
    const std::size_t ne = static_cast<std::size_t>(e_gens[0].degree());
    const std::size_t nf = static_cast<std::size_t>(f_gens[0].degree());
    std::vector<char> seen(ne * nf, 0);
    std::size_t count = 0;
    std::vector<std::size_t> stack;
    for (std::size_t start = 0; start < ne * nf; ++start) {
        if (seen[start]) continue;
        ++count;
        seen[start] = 1;
        stack.push_back(start);
        while (!stack.empty()) {
            std::size_t p = stack.back();
            stack.pop_back();
            const int i = static_cast<int>(p / nf);
            const int j = static_cast<int>(p % nf);
            for (std::size_t k = 0; k < e_gens.size(); ++k) {
                std::size_t q = static_cast<std::size_t>(e_gens[k](i)) * nf + static_cast<std::size_t>(f_gens[k](j));
                if (!seen[q]) {
                    seen[q] = 1;
                    stack.push_back(q);
                }
            }
        }
    }
    return count;
}

bool is_2transitive(const PermGroup& g) {
    require_transitive(g, "is_2transitive");
    const int n = g.degree();
    if (n <= 2) return true;
    // Orbits on ordered pairs: the diagonal is one orbit, so 2-transitive
    // means exactly two orbits on Omega x Omega.
    return orbits_on_product(g.generators(), g.generators()) == 2;
}

GiantKind giant_kind(const PermGroup& g) {
    const int n = g.degree();
    if (!is_transitive(g)) return GiantKind::None;
    if (n <= 2) return GiantKind::Symmetric;
    if (!is_primitive(g)) return GiantKind::None;
    bool has_transposition = false;
    bool has_alt_witness = false;
    for (const auto& s : g.generators()) {
        std::vector<int> type = s.cycle_type();
        std::map<int, int> mult;
        for (int l : type) mult[l]++;
        for (auto [len, cnt] : mult) {
            if (cnt != 1 || !is_prime_u64(static_cast<std::uint64_t>(len))) continue;
            std::uint64_t m = 1;
            for (int l : type)
                if (l != len) m = std::lcm(m, static_cast<std::uint64_t>(l));
            if (m % static_cast<std::uint64_t>(len) == 0) continue;
            // s^m is a single len-cycle.
            if (len == 2) has_transposition = true;
            if (len == 3 || len <= n - 3) has_alt_witness = true;
        }
    }
    if (has_transposition) return GiantKind::Symmetric;
    if (!has_alt_witness) return GiantKind::None;
    bool all_even = std::all_of(g.generators().begin(), g.generators().end(),
                                [](const Permutation& s) { return s.is_even(); });
    return all_even ? GiantKind::Alternating : GiantKind::Symmetric;
}

std::optional<std::uint64_t> giant_order(const PermGroup& g) {
    if (g.degree() > 20) return std::nullopt;
    switch (giant_kind(g)) {
        case GiantKind::Symmetric: return factorial(g.degree());
        case GiantKind::Alternating: return factorial(g.degree()) / 2;
        default: return std::nullopt;
    }
}

// --- subgroups -------------------------------------------------------------

PermGroup subgroup_from_elements(int degree, const std::vector<Permutation>& elems) {
    ElementSet sub(degree);
    sub.insert(Permutation::identity(degree));
    std::vector<Permutation> gens;
    for (const auto& e : elems) {
        if (sub.contains(e)) continue;
        extend_closure(sub, gens, e, static_cast<std::size_t>(-1));
        gens.push_back(e);
    }
    ElementSet given(degree);
    given.insert(Permutation::identity(degree));
    for (const auto& e : elems) given.insert(e);
    if (sub.size() != given.size()) throw InvariantViolation("element list is not closed under multiplication");
    return PermGroup(degree, std::move(gens), std::move(sub));
}

PermGroup stabilizer(const PermGroup& g, int x) {
    if (x < 0 || x >= g.degree()) throw InputError("point out of range");
    return subgroup_by_filter(g, [x](const Permutation& p) { return p(x) == x; });
}

PermGroup setwise_stabilizer(const PermGroup& g, const std::vector<int>& set) {
    std::vector<char> in(static_cast<std::size_t>(g.degree()), 0);
    for (int x : set) {
        if (x < 0 || x >= g.degree()) throw InputError("point out of range");
        in[static_cast<std::size_t>(x)] = 1;
    }
    return subgroup_by_filter(g, [&](const Permutation& p) {
        for (int x : set)
            if (!in[static_cast<std::size_t>(p(x))]) return false;
        return true;
    });
}

bool is_subgroup(const PermGroup& h, const PermGroup& g) {
    if (h.degree() != g.degree()) return false;
    for (const auto& s : h.generators())
        if (!g.contains(s)) return false;
    return true;
}

PermGroup normalizer(const PermGroup& g, const PermGroup& h) {
    if (!is_subgroup(h, g)) throw InputError("normalizer: H is not a subgroup of G");
    const ElementSet& he = h.elements();
    return subgroup_by_filter(g, [&](const Permutation& p) {
        for (const auto& s : h.generators())
            if (!he.contains(conjugate(s, p))) return false;
        return true;
    });
}

PermGroup centralizer(const PermGroup& g, const Permutation& x) {
    return subgroup_by_filter(g, [&](const Permutation& p) { return x * p == p * x; });
}

PermGroup intersection(const PermGroup& a, const PermGroup& b) {
    if (a.degree() != b.degree()) throw InputError("intersection of groups of different degree");
    const ElementSet& be = b.elements();
    return subgroup_by_filter(a, [&](const Permutation& p) { return be.contains(p); });
}

PermGroup join(const PermGroup& a, const PermGroup& b) {
    if (a.degree() != b.degree()) throw InputError("join of groups of different degree");
    auto gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return PermGroup(a.degree(), std::move(gens));
}

bool is_normal(const PermGroup& g, const PermGroup& n) {
    if (!is_subgroup(n, g)) return false;
    for (const auto& s : n.generators())
        for (const auto& a : g.generators())
            if (!n.contains(conjugate(s, a))) return false;
    return true;
}

bool same_group(const PermGroup& a, const PermGroup& b) {
    return is_subgroup(a, b) && is_subgroup(b, a);
}

std::uint64_t product_size(const PermGroup& g, const PermGroup& n, const PermGroup& h) {
    if (!is_subgroup(n, g) || !is_subgroup(h, g)) throw InputError("product_size: arguments must lie in G");
    const std::uint64_t inter = intersection(n, h).order();
    return n.order() * h.order() / inter;
}

std::optional<PermGroup> normal_closure(int degree, const std::vector<Permutation>& ambient_gens,
                                        const std::vector<Permutation>& s, std::size_t limit) {
    ElementSet set(degree);
    set.insert(Permutation::identity(degree));
    std::vector<Permutation> gens;
    auto add = [&](const Permutation& x) {
        if (set.contains(x)) return true;
        if (!extend_closure(set, gens, x, limit)) return false;
        gens.push_back(x);
        return true;
    };
    for (const auto& x : s)
        if (!add(x)) return std::nullopt;
    for (std::size_t k = 0; k < gens.size(); ++k)
        for (const auto& a : ambient_gens)
            if (!add(conjugate(gens[k], a))) return std::nullopt;
    return PermGroup(degree, std::move(gens), std::move(set));
}

PermGroup normal_closure(const PermGroup& g, const std::vector<Permutation>& s) {
    auto r = normal_closure(g.degree(), g.generators(), s, limits().group_cap);
    if (!r) throw CapExceeded("normal closure exceeds the materialization cap");
    return *r;
}

PermGroup derived_subgroup(const PermGroup& g) {
    std::vector<Permutation> comms;
    const auto& gens = g.generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) comms.push_back(commutator(gens[i], gens[j]));
    return normal_closure(g, comms);
}

PermGroup square_subgroup(const PermGroup& g) {
    std::vector<Permutation> s;
    const auto& gens = g.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        s.push_back(gens[i] * gens[i]);
        for (std::size_t j = i + 1; j < gens.size(); ++j) s.push_back(commutator(gens[i], gens[j]));
    }
    return normal_closure(g, s);
}

bool has_index2_subgroup(const PermGroup& g) {
    // Index-2 subgroups exist iff G/G' has even order.
    const std::uint64_t q = g.order() / derived_subgroup(g).order();
    return q % 2 == 0;
}

std::vector<PermGroup> normal_subgroups(const PermGroup& g) {
    const ElementSet& el = g.elements();
    const ConjugacyClasses& cc = g.classes();
    std::vector<PermGroup> found;
    auto known = [&](const PermGroup& n) {
        for (const auto& m : found)
            if (m.order() == n.order() && is_subgroup(n, m)) return true;
        return false;
    };
    found.push_back(PermGroup::trivial(g.degree()));
    std::vector<PermGroup> atoms;
    for (std::size_t r : cc.reps) {
        if (el[r].is_identity()) continue;
        PermGroup n = normal_closure(g, {el[r]});
        if (!known(n)) {
            found.push_back(n);
            atoms.push_back(n);
        }
    }
    for (std::size_t k = 1; k < found.size(); ++k) {
        for (const auto& a : atoms) {
            if (is_subgroup(a, found[k])) continue;
            PermGroup j = join(found[k], a);
            j.elements();
            if (!known(j)) found.push_back(j);
        }
    }
    std::stable_sort(found.begin(), found.end(),
                     [](const PermGroup& a, const PermGroup& b) { return a.order() < b.order(); });
    return found;
}

// --- composition factors ---------------------------------------------------

namespace {

struct SimpleEntry {
    std::uint64_t order;
    const char* name;
};

// Nonabelian simple groups of order at most 10^5.
constexpr SimpleEntry kSimple[] = {
    {60, "A5"},          {168, "PSL2(7)"},   {360, "A6"},        {504, "PSL2(8)"},    {660, "PSL2(11)"},
    {1092, "PSL2(13)"},  {2448, "PSL2(17)"}, {2520, "A7"},       {3420, "PSL2(19)"},  {4080, "PSL2(16)"},
    {5616, "PSL3(3)"},   {6048, "PSU3(3)"},  {6072, "PSL2(23)"}, {7800, "PSL2(25)"},  {7920, "M11"},
    {9828, "PSL2(27)"},  {12180, "PSL2(29)"}, {14880, "PSL2(31)"}, {25308, "PSL2(37)"}, {25920, "PSU4(2)"},
    {29120, "Sz(8)"},    {32736, "PSL2(32)"}, {34440, "PSL2(41)"}, {39732, "PSL2(43)"}, {51888, "PSL2(47)"},
    {58800, "PSL2(49)"}, {62400, "PSU3(4)"},  {74412, "PSL2(53)"}, {95040, "M12"},
};

std::string alternating_name(int n) { return "A" + std::to_string(n); }

}  // namespace

std::optional<std::string> simple_group_name(std::uint64_t order, std::optional<bool> has_order_15) {
    if (order == 20160) {
        if (!has_order_15) return std::nullopt;
        return *has_order_15 ? std::string("A8") : std::string("PSL3(4)");
    }
    for (const auto& e : kSimple)
        if (e.order == order) return std::string(e.name);
    return std::nullopt;
}

std::vector<CompositionFactor> composition_factors(const PermGroup& g) {
    std::vector<CompositionFactor> out;
    if (g.degree() >= 5) {
        GiantKind kind = giant_kind(g);
        if (kind != GiantKind::None) {
            std::uint64_t alt = factorial(g.degree()) / 2;
            if (kind == GiantKind::Symmetric) out.push_back({2, true, "C2", true});
            out.push_back({alt, false, alternating_name(g.degree()), true});
            return out;
        }
    }
    PermGroup h = g;
    const int n = g.degree();
    while (true) {
        const std::uint64_t ho = h.order();
        if (ho == 1) break;
        if (is_prime_u64(ho)) {
            out.push_back({ho, true, "C" + std::to_string(ho), true});
            break;
        }
        const ElementSet& el = h.elements();
        const ConjugacyClasses& cc = h.classes();
        // Greedy: keep adding class representatives while the normal
        // closure stays proper.  Any proper normal subgroup has order at
        // most |H|/2, so closures are abandoned past that size.
        std::vector<Permutation> chosen;
        PermGroup nsub = PermGroup::trivial(n);
        for (std::size_t r : cc.reps) {
            const Permutation& c = el[r];
            if (c.is_identity() || (nsub.is_materialized() && nsub.contains(c))) continue;
            auto trial = chosen;
            trial.push_back(c);
            auto m = normal_closure(n, h.generators(), trial, static_cast<std::size_t>(ho / 2));
            if (m) {
                chosen = std::move(trial);
                nsub = *m;
            }
        }
        nsub.elements();
        const std::uint64_t q = ho / nsub.order();
        if (is_prime_u64(q)) {
            out.push_back({q, true, "C" + std::to_string(q), true});
        } else {
            std::optional<bool> has15;
            if (q == 20160) {
                bool found = false;
                const ElementSet& ne = nsub.elements();
                for (const auto& x : el.elements()) {
                    Permutation y = x;
                    int k = 1;
                    while (!ne.contains(y) && k <= 16) {
                        y = y * x;
                        ++k;
                    }
                    if (k == 15) {
                        found = true;
                        break;
                    }
                }
                has15 = found;
            }
            auto name = simple_group_name(q, has15);
            if (name)
                out.push_back({q, false, *name, true});
            else
                out.push_back({q, false, "simple(order=" + std::to_string(q) + ")", false});
        }
        h = nsub;
    }
    return out;
}

bool is_simple(const PermGroup& g) {
    auto f = composition_factors(g);
    return f.size() == 1;
}

// --- constructions ---------------------------------------------------------

PermGroup wreath_product(const PermGroup& g, const PermGroup& h, WreathMode mode) {
    const int n = g.degree();
    const int p = h.degree();
    std::vector<Permutation> gens;
    if (mode == WreathMode::Imprimitive) {
        const int deg = n * p;
        for (const auto& s : g.generators()) {
            std::vector<int> img(static_cast<std::size_t>(deg));
            std::iota(img.begin(), img.end(), 0);
            for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = s(i);
            gens.push_back(Permutation::unchecked(std::move(img)));
        }
        for (const auto& t : h.generators()) {
            std::vector<int> img(static_cast<std::size_t>(deg));
            for (int j = 0; j < p; ++j)
                for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(j * n + i)] = t(j) * n + i;
            gens.push_back(Permutation::unchecked(std::move(img)));
        }
        return PermGroup(deg, std::move(gens));
    }
    double size = 1;
    for (int j = 0; j < p; ++j) size *= n;
    if (size > 2e6) throw CapExceeded("product action degree n^p is too large");
    int deg = 1;
    for (int j = 0; j < p; ++j) deg *= n;
    std::vector<int> digits(static_cast<std::size_t>(p));
    auto decode = [&](int idx) {
        for (int j = 0; j < p; ++j) {
            digits[static_cast<std::size_t>(j)] = idx % n;
            idx /= n;
        }
    };
    for (const auto& s : g.generators()) {
        std::vector<int> img(static_cast<std::size_t>(deg));
        for (int idx = 0; idx < deg; ++idx) {
            int x0 = idx % n;
            img[static_cast<std::size_t>(idx)] = idx - x0 + s(x0);
        }
        gens.push_back(Permutation::unchecked(std::move(img)));
    }
    std::vector<int> pw(static_cast<std::size_t>(p), 1);
    for (int j = 1; j < p; ++j) pw[static_cast<std::size_t>(j)] = pw[static_cast<std::size_t>(j - 1)] * n;
    for (const auto& t : h.generators()) {
        std::vector<int> img(static_cast<std::size_t>(deg));
        for (int idx = 0; idx < deg; ++idx) {
            decode(idx);
            int out = 0;
            for (int j = 0; j < p; ++j) out += digits[static_cast<std::size_t>(j)] * pw[static_cast<std::size_t>(t(j))];
            img[static_cast<std::size_t>(idx)] = out;
        }
        gens.push_back(Permutation::unchecked(std::move(img)));
    }
    return PermGroup(deg, std::move(gens));
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
    const int na = a.degree();
    const int nb = b.degree();
    std::vector<Permutation> gens;
    for (const auto& s : a.generators()) {
        std::vector<int> img(static_cast<std::size_t>(na + nb));
        std::iota(img.begin(), img.end(), 0);
        for (int i = 0; i < na; ++i) img[static_cast<std::size_t>(i)] = s(i);
        gens.push_back(Permutation::unchecked(std::move(img)));
    }
    for (const auto& s : b.generators()) {
        std::vector<int> img(static_cast<std::size_t>(na + nb));
        std::iota(img.begin(), img.end(), 0);
        for (int i = 0; i < nb; ++i) img[static_cast<std::size_t>(na + i)] = na + s(i);
        gens.push_back(Permutation::unchecked(std::move(img)));
    }
    return PermGroup(na + nb, std::move(gens));
}

}  // namespace hit
