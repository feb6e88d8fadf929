#include "hit/siegelgroup.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "hit/catalog.hpp"
#include "hit/error.hpp"

namespace hit {

namespace {

bool is_cyclic_group(const PermGroup& g) {
    const std::uint64_t n = g.order();
    for (const auto& x : g.elements().elements())
        if (x.order() == n) return true;
    return false;
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

AgdiInstance AgdiInstance::make(PermGroup A, PermGroup G, const Permutation& i_gen) {
    const int n = A.degree();
    if (G.degree() != n || i_gen.degree() != n) throw InputError("A, G and I must act on the same points");
    if (!is_transitive(A) || !is_primitive(A)) throw InputError("A must be primitive");
    if (G.order() == 1) throw InputError("G must be nontrivial");
    if (!is_subgroup(G, A) || !is_normal(A, G)) throw InputError("G must be a normal subgroup of A");
    if (!G.contains(i_gen)) throw InputError("I must be contained in G");
    AgdiInstance inst{std::move(A), std::move(G), PermGroup(n, {i_gen}), i_gen};
    return inst;
}

AgdiHypotheses agdi_hypotheses(const AgdiInstance& inst) {
    AgdiHypotheses h;
    h.i_orbits = static_cast<int>(orbits(inst.I).size());
    h.a_holds = h.i_orbits <= 2;
    if (inst.G.order() == inst.A.order()) {
        h.b_holds = true;
    } else {
        const PermGroup N = normalizer(inst.A, inst.I);
        h.b_holds = product_size(inst.A, inst.G, N) == inst.A.order();
    }
    return h;
}

bool agdi_conclusion(const AgdiInstance& inst) {
    const AgdiHypotheses h = agdi_hypotheses(inst);
    if (!h.a_holds) throw InputError("hypothesis (a) fails: I has " + std::to_string(h.i_orbits) + " orbits");
    if (!h.b_holds) throw InputError("hypothesis (b) fails: A != G N_A(I)");
    return is_primitive(inst.G);
}

AbsindCertificate absind_transfer(const AgdiInstance& inst) {
    const AgdiHypotheses h = agdi_hypotheses(inst);
    AbsindCertificate c;
    if (!h.a_holds) {
        c.reason = "I has more than two orbits";
        return c;
    }
    if (h.i_orbits == 2 && !h.b_holds) {
        c.reason = "I has two orbits and A != G N_A(I)";
        return c;
    }
    c.used_b = h.i_orbits == 2;
    if (!is_primitive(inst.G))
        throw InvariantViolation("primitivity transfer violated: G is imprimitive although the hypotheses hold");
    c.issued = true;
    c.reason = h.i_orbits == 1 ? "I transitive; G primitive" : "I has two orbits and A = G N_A(I); G primitive";
    return c;
}

AgdiInstance build_agdi_counterexample(int m) {
    if (m < 3) throw InputError("counterexample needs m >= 3");
    std::uint64_t fact = 1;
    for (int i = 2; i <= m; ++i) fact *= static_cast<std::uint64_t>(i);
    if (m > 8 || 2 * fact * fact > limits().group_cap)
        throw CapExceeded("counterexample group of order 2 (" + std::to_string(m) + "!)^2 exceeds the group cap");
    const PermGroup sm = named_group("S" + std::to_string(m));
    const PermGroup A = wreath_product(sm, named_group("C2"), WreathMode::Product);
    const int n = m * m;
    // Coordinate j of point x is (x / m^j) mod m.
    auto coordinatewise = [&](const Permutation& a, const Permutation& b) {
        std::vector<int> img(static_cast<std::size_t>(n));
        for (int x = 0; x < n; ++x) img[static_cast<std::size_t>(x)] = a(x % m) + m * b(x / m);
        return Permutation(img);
    };
    const Permutation id = Permutation::identity(m);
    std::vector<Permutation> base;
    for (const auto& g : sm.generators()) {
        base.push_back(coordinatewise(g, id));
        base.push_back(coordinatewise(id, g));
    }
    const PermGroup G(n, base);
    std::vector<std::vector<int>> full(1), shorter(1);
    for (int i = 0; i < m; ++i) full[0].push_back(i);
    for (int i = 0; i + 1 < m; ++i) shorter[0].push_back(i);
    const Permutation gen = coordinatewise(Permutation::from_cycles(m, full), Permutation::from_cycles(m, shorter));
    return AgdiInstance::make(A.with_known_order(2 * fact * fact), G.with_known_order(fact * fact), gen);
}

namespace {

void sweep_group(const GroupId& id, AgdiSweepReport& r) {
    const PermGroup A = named_group(id);
    const ElementSet& el = A.elements();
    const auto& cc = A.classes();
    for (const PermGroup& G : normal_subgroups(A)) {
        if (G.order() == 1) continue;
        const bool g_primitive = is_primitive(G);
        for (std::size_t rep : cc.reps) {
            const Permutation& x = el[rep];
            if (!G.contains(x)) continue;
            AgdiInstance inst{A, G, PermGroup(A.degree(), {x}), x};
            if (orbits(inst.I).size() > 2) continue;
            ++r.instances;
            const AgdiHypotheses h = agdi_hypotheses(inst);
            if (!h.b_holds) {
                ++r.b_failures;
                continue;
            }
            ++r.hypotheses_hold;
            if (!g_primitive)
                r.violations.push_back(id.to_string() + ": |G| = " + std::to_string(G.order()) + ", I = <" +
                                       x.to_string() + ">");
        }
    }
}

}  // namespace

AgdiSweepReport agdi_sweep(int max_degree, std::uint64_t max_order, unsigned threads) {
    std::vector<GroupId> ids;
    AgdiSweepReport total;
    for (const auto& id : catalog_ids()) {
        if (id.degree > max_degree) continue;
        if (known_order(id) > max_order || known_order(id) > limits().group_cap) {
            total.skipped.push_back(id.to_string());
            continue;
        }
        const PermGroup g = named_group(id);
        if (!is_transitive(g) || !is_primitive(g)) continue;
        ids.push_back(id);
    }
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(ids.size(), 1)));
    std::vector<std::future<AgdiSweepReport>> parts;
    for (unsigned t = 0; t < threads; ++t)
        parts.push_back(std::async(std::launch::async, [&, t] {
            AgdiSweepReport r;
            for (std::size_t k = t; k < ids.size(); k += threads) {
                sweep_group(ids[k], r);
                ++r.groups;
            }
            return r;
        }));
    for (auto& f : parts) {
        AgdiSweepReport r = f.get();
        total.groups += r.groups;
        total.instances += r.instances;
        total.hypotheses_hold += r.hypotheses_hold;
        total.b_failures += r.b_failures;
        total.violations.insert(total.violations.end(), r.violations.begin(), r.violations.end());
    }
    std::sort(total.violations.begin(), total.violations.end());
    return total;
}

WreathIntransitive wreath_maximal_intransitive(const PermGroup& G, int p, const PermGroup& H,
                                               const std::optional<PermGroup>& W_tilde) {
    const int n = G.degree();
    if (!is_prime(p)) throw InputError("p must be prime");
    if (!is_transitive(G) || !is_primitive(G)) throw InputError("G must be primitive");
    if (G.order() == static_cast<std::uint64_t>(n)) throw InputError("G must be primitive non-regular");
    if (H.degree() != p) throw InputError("H must act on p points");
    bool has_p_cycle = false;
    for (const auto& x : H.elements().elements()) has_p_cycle = has_p_cycle || x.cycle_type() == std::vector<int>{p};
    if (!has_p_cycle || !is_subgroup(H, named_group("AGL1(" + std::to_string(p) + ")")))
        throw InputError("H must satisfy C_p <= H <= AGL_1(p)");

    WreathIntransitive out;
    out.W = wreath_product(G, H, WreathMode::Imprimitive);
    out.W_tilde = W_tilde ? *W_tilde : out.W;
    if (out.W_tilde.degree() != n * p) throw InputError("W~ must act on n p points");
    if (!is_subgroup(out.W, out.W_tilde) || !is_normal(out.W_tilde, out.W))
        throw InputError("W must be a normal subgroup of W~");
    for (int j = 0; j < p; ++j) {
        std::vector<int> b;
        for (int i = 0; i < n; ++i) b.push_back(j * n + i);
        out.blocks.push_back(b);
    }
    std::vector<int> block_of(static_cast<std::size_t>(n * p));
    for (int x = 0; x < n * p; ++x) block_of[static_cast<std::size_t>(x)] = x / n;
    for (const auto& g : out.W_tilde.generators())
        for (const auto& b : out.blocks)
            for (int x : b)
                if (block_of[static_cast<std::size_t>(g(x))] != block_of[static_cast<std::size_t>(g(b[0]))])
                    throw InvariantViolation("W~ does not preserve the blocks of W");

    out.product = Action::product_on_blocks(n * p, out.blocks);
    out.product_image = out.product.image(out.W_tilde);
    out.product_primitive = is_primitive(out.product_image);
    if (!out.product_primitive) throw InvariantViolation("product action of W~ is imprimitive");
    out.V = subgroup_by_filter(out.W_tilde, [&](const Permutation& x) { return out.product.apply(x)(0) == 0; });
    for (const auto& o : orbits(out.V)) out.v_orbit_lengths.push_back(static_cast<int>(o.size()));
    std::sort(out.v_orbit_lengths.begin(), out.v_orbit_lengths.end());
    return out;
}

std::vector<BlockDecomposition> decompositions_via_blocks(const PermGroup& mono) {
    if (!is_transitive(mono)) throw InputError("decompositions need a transitive group");
    std::vector<BlockDecomposition> out;
    for (const auto& sys : block_systems(mono)) {
        BlockDecomposition d;
        d.blocks = sys;
        d.block_size = static_cast<int>(sys[0].size());
        d.num_blocks = static_cast<int>(sys.size());
        const std::vector<int>& b = sys[0];
        const PermGroup stab = setwise_stabilizer(mono, b);
        std::vector<int> pos(static_cast<std::size_t>(mono.degree()), -1);
        for (std::size_t i = 0; i < b.size(); ++i) pos[static_cast<std::size_t>(b[i])] = static_cast<int>(i);
        std::vector<Permutation> gens;
        for (const auto& g : stab.generators()) {
            std::vector<int> img;
            for (int x : b) img.push_back(pos[static_cast<std::size_t>(g(x))]);
            gens.push_back(Permutation(img));
        }
        const PermGroup inner(d.block_size, gens);
        bool cyc2 = is_cyclic_group(inner);
        if (!cyc2)
            for (const auto& x : inner.elements().elements())
                if (2 * x.order() == inner.order()) {
                    const PermGroup c(d.block_size, {x});
                    cyc2 = is_normal(inner, c);
                    if (cyc2) break;
                }
        d.inner_cyclic_by_2 = cyc2;
        out.push_back(d);
    }
    return out;
}

}  // namespace hit
