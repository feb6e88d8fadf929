#include "hit/criteria.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "hit/action.hpp"
#include "hit/error.hpp"
#include "hit/group.hpp"
#include "hit/ratfun.hpp"

namespace hit {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

bool materializable(const PermGroup& g) { return g.order() <= limits().group_cap; }

std::string join_ints(const std::vector<int>& v, const char* sep = " ") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

// Orders j!/2 for j >= 5 up to the 64-bit range.
bool is_alternating_order(std::uint64_t q) {
    std::uint64_t f = 60;
    for (std::uint64_t j = 6; f < q; ++j) {
        if (f > UINT64_MAX / j) return false;
        f *= j;
    }
    return f == q;
}

bool is_alternating_name(const std::string& name) {
    return name.size() >= 2 && name[0] == 'A' &&
           std::all_of(name.begin() + 1, name.end(), [](char c) { return c >= '0' && c <= '9'; });
}

struct TableEntry {
    const char* name;
    std::uint64_t order;
    bool over_q;
};

constexpr TableEntry kCf[] = {
    {"PSL2(7)", 168, true},        {"PSL2(8)", 504, true},       {"PSL2(11)", 660, false},
    {"PSL2(13)", 1092, false},     {"PSL3(3)", 5616, false},     {"PSL3(4)", 20160, false},
    {"PSL4(3)", 6065280, false},   {"PSL5(2)", 9999360, false},  {"PSL6(2)", 20158709760ULL, false},
    {"M11", 7920, false},          {"M12", 95040, false},        {"M22", 443520, false},
    {"M23", 10200960, false},      {"M24", 244823040, false},
};

// Whether a simple group of this order could lie in CF(k), for factors the
// library could not name.
bool order_possibly_in_cf(std::uint64_t q, FieldFlag field) {
    if (is_alternating_order(q)) return true;
    for (const auto& e : kCf)
        if (e.order == q && (e.over_q || field == FieldFlag::General)) return true;
    return false;
}

CriterionResult start(const char* id, const char* tag) {
    CriterionResult r;
    r.criterion = id;
    r.tag = tag;
    return r;
}

bool integral_gate(const RamificationDatum& d, CriterionResult& r) {
    if (d.rational_spec_mode) {
        r.reason = "stated for integral specializations only";
        return false;
    }
    return true;
}

bool qz_gate(const RamificationDatum& d, CriterionResult& r) {
    if (!integral_gate(d, r)) return false;
    if (!d.q_and_z()) {
        r.reason = "stated over Q with integral specializations";
        return false;
    }
    return true;
}

void fire(CriterionResult& r, std::string reason) {
    r.fired = true;
    r.reason = std::move(reason);
}

std::optional<long long> root_genus(const RamificationDatum& d) {
    if (!d.branch) return std::nullopt;
    return rh_genus(*d.branch);
}

}  // namespace

PermGroup RamificationDatum::geometric() const {
    if (G) return *G;
    if (branch) return branch->group;
    return A;
}

void RamificationDatum::validate() const {
    const int n = degree();
    if (sigma_inf.degree() != n) throw InputError("sigma_inf acts on " + std::to_string(sigma_inf.degree()) +
                                                  " points, A on " + std::to_string(n));
    if (!is_transitive(A)) throw InputError("A must be transitive on the roots");
    if (!A.contains(sigma_inf)) throw InputError("sigma_inf is not in A");
    if (G) {
        if (G->degree() != n) throw InputError("G acts on a different number of points");
        if (!is_subgroup(*G, A) || !is_normal(A, *G)) throw InputError("G is not a normal subgroup of A");
    }
    if (branch) {
        if (branch->degree() != n) throw InputError("branch data acts on a different number of points");
        if (G && !same_group(branch->group, *G)) throw InputError("branch cycles do not generate G");
        if (!is_subgroup(branch->group, A) || !is_normal(A, branch->group))
            throw InputError("branch cycles do not generate a normal subgroup of A");
        if (branch->infinity_index) {
            const Permutation& s = branch->cycles[*branch->infinity_index];
            if (s.cycle_type() != sigma_inf.cycle_type())
                throw InputError("branch cycle at infinity has cycle type " + join_ints(s.cycle_type()) +
                                 ", sigma_inf has " + join_ints(sigma_inf.cycle_type()));
        }
    }
    if (D_inf) {
        if (D_inf->degree() != n) throw InputError("D_inf acts on a different number of points");
        if (!is_subgroup(*D_inf, A)) throw InputError("D_inf is not a subgroup of A");
        if (!D_inf->contains(sigma_inf)) throw InputError("sigma_inf is not in D_inf");
        if (!is_normal(*D_inf, PermGroup(n, {sigma_inf}))) throw InputError("inertia is not normal in D_inf");
    }
}

AbsIrrCheck absolute_irreducibility_check(const RamificationDatum& d) {
    AbsIrrCheck c;
    c.absolutely_irreducible = is_transitive(d.geometric());
    c.a_primitive = is_primitive(d.A);
    c.a_simple = is_simple(d.A);
    c.obstructed = (c.a_simple || c.a_primitive) && !c.absolutely_irreducible;
    return c;
}

CriterionResult criterion_absirr(const RamificationDatum& d) {
    CriterionResult r = start("absirr", "C:HIT:absirr");
    r.applicable = true;
    const AbsIrrCheck c = absolute_irreducibility_check(d);
    if (c.obstructed)
        fire(r, std::string("G is intransitive although A is ") + (c.a_simple ? "simple" : "primitive") +
                    ", so f is not absolutely irreducible");
    else if (!c.absolutely_irreducible)
        r.reason = "G intransitive, but A is neither simple nor primitive";
    else
        r.reason = "f is absolutely irreducible";
    return r;
}

CriterionResult criterion_unram(const RamificationDatum& d) {
    CriterionResult r = start("unram", "T:unram");
    if (!integral_gate(d, r)) return r;
    if (!d.sigma_inf.is_identity()) {
        r.reason = "infinity is ramified";
        return r;
    }
    r.applicable = true;
    if (!materializable(d.A)) {
        switch (giant_kind(d.A)) {
            case GiantKind::Alternating:
                r.tag = "C:unram";
                fire(r, "A is alternating and has no subgroup of index 2; the Galois group is preserved");
                return r;
            case GiantKind::Symmetric:
                fire(r, "the only index-2 subgroup of A is alternating and does not contain a root stabilizer");
                return r;
            case GiantKind::None:
                r.reason = "A exceeds the group cap";
                return r;
        }
    }
    if (!has_index2_subgroup(d.A)) {
        r.tag = "C:unram";
        fire(r, "A has no subgroup of index 2; the Galois group is preserved for almost all specializations");
        return r;
    }
    const PermGroup j = join(stabilizer(d.A, 0), square_subgroup(d.A));
    if (j.order() == d.A.order()) {
        fire(r, "no index-2 subgroup of A contains a root stabilizer, so t = g(z) with deg g = 2 is impossible");
        return r;
    }
    r.reason = "an index-2 subgroup of A contains the root stabilizer; t = g(z) with deg g = 2 is possible";
    r.notes.push_back("index-2 overgroup of A_x has order " + std::to_string(d.A.order() / 2) +
                      " and contains the subgroup generated by A_x and all squares (order " +
                      std::to_string(j.order()) + ")");
    return r;
}

CriterionResult criterion_gcd1(const RamificationDatum& d) {
    CriterionResult r = start("gcd1", "T:gcd=1");
    if (!qz_gate(d, r)) return r;
    if (d.degree() % 2 == 0) {
        r.reason = "degree " + std::to_string(d.degree()) + " is even";
        return r;
    }
    r.applicable = true;
    const std::vector<int> type = d.sigma_inf.cycle_type();
    int g = 0;
    for (int l : type) g = std::gcd(g, l);
    if (g == 1)
        fire(r, "odd degree and the cycle lengths " + join_ints(type) + " of sigma_inf have gcd 1");
    else
        r.reason = "cycle lengths " + join_ints(type) + " have gcd " + std::to_string(g);
    return r;
}

CriterionResult criterion_rat(const RamificationDatum& d) {
    CriterionResult r = start("rat", "T:rat");
    if (!qz_gate(d, r)) return r;
    if (!d.rational_unramified_place_at_infinity) {
        r.reason = "no information on rational unramified places above infinity";
        return r;
    }
    r.applicable = true;
    if (*d.rational_unramified_place_at_infinity)
        fire(r, "the root field has a rational unramified place above infinity");
    else
        r.reason = "no rational unramified place above infinity";
    return r;
}

CriterionResult criterion_prime(const RamificationDatum& d) {
    CriterionResult r = start("prime", "T:p");
    if (!qz_gate(d, r)) return r;
    const int p = d.degree();
    if (p == 2) {
        r.reason = "the prime degree theorem does not hold for p = 2";
        return r;
    }
    if (!is_prime(p)) {
        r.reason = "degree " + std::to_string(p) + " is not prime";
        return r;
    }
    r.applicable = true;
    const std::vector<int> type = d.sigma_inf.cycle_type();
    if (type != std::vector<int>{p}) {
        fire(r, "sigma_inf has cycle type " + join_ints(type) + ", so infinity is not totally ramified");
        return r;
    }
    if (const auto g = root_genus(d); g && *g > 0) {
        fire(r, "infinity is totally ramified, but the root field has genus " + std::to_string(*g));
        return r;
    }
    r.reason = "sigma_inf is a " + std::to_string(p) + "-cycle";
    r.notes.push_back(d.branch ? "root field has genus 0: a form t = h(x') is possible"
                               : "no branch data: a form t = h(x') is possible");
    return r;
}

CriterionResult criterion_doubly(const RamificationDatum& d) {
    CriterionResult r = start("doubly", d.rational_spec_mode ? "T:doubly-k" : "T:doubly");
    if (!is_2transitive(d.A)) {
        r.reason = "A is not 2-transitive";
        return r;
    }
    r.applicable = true;
    if (!is_transitive(d.geometric())) {
        fire(r, "A is 2-transitive but f is not absolutely irreducible");
        return r;
    }
    const auto g = root_genus(d);
    if (d.rational_spec_mode) {
        if (g && *g >= 2) fire(r, "A is 2-transitive and the root field has genus " + std::to_string(*g) + " >= 2");
        else if (g) r.reason = "root field has genus " + std::to_string(*g);
        else r.notes.push_back("genus not evaluated: no branch data");
        return r;
    }
    const int places = d.sigma_inf.num_cycles();
    if (places > 2) {
        fire(r, "A is 2-transitive and there are " + std::to_string(places) + " places above infinity");
        return r;
    }
    if (g && *g > 0) {
        fire(r, "A is 2-transitive and the root field has genus " + std::to_string(*g));
        return r;
    }
    r.reason = std::to_string(places) + " place(s) above infinity" + (g ? ", genus 0" : "");
    if (!g) r.notes.push_back("genus not evaluated: no branch data");
    return r;
}

bool in_cf_table(const std::string& name, FieldFlag field) {
    if (is_alternating_name(name)) return std::stoi(name.substr(1)) >= 5;
    for (const auto& e : kCf)
        if (name == e.name) return e.over_q || field == FieldFlag::General;
    return false;
}

CriterionResult criterion_primitive_cf(const RamificationDatum& d) {
    CriterionResult r = start("primitive_cf", "T:main");
    if (!integral_gate(d, r)) return r;
    if (!is_primitive(d.A)) {
        r.reason = "A is imprimitive";
        return r;
    }
    r.applicable = true;
    const std::string table = d.field == FieldFlag::Q ? "CF(Q)" : "CF(k)";
    std::vector<std::string> inside;
    for (const auto& f : composition_factors(d.A)) {
        if (f.abelian) continue;
        if (!f.identified) {
            if (!order_possibly_in_cf(f.order, d.field)) {
                fire(r, "A has a nonabelian composition factor of order " + std::to_string(f.order) +
                            ", which matches no group in " + table);
                return r;
            }
            r.notes.push_back("unidentified composition factor of order " + std::to_string(f.order));
            continue;
        }
        if (!in_cf_table(f.name, d.field)) {
            fire(r, "A is primitive with nonabelian composition factor " + f.name + " not in " + table);
            return r;
        }
        inside.push_back(f.name);
    }
    r.reason = inside.empty() ? "A has no nonabelian composition factor"
                              : "every nonabelian composition factor lies in " + table;
    return r;
}

CriterionResult criterion_simple_galois(const RamificationDatum& d) {
    CriterionResult r = start("simple_galois", "C:mainQ:Galois_2");
    if (!qz_gate(d, r)) return r;
    const auto factors = composition_factors(d.A);
    if (factors.size() != 1) {
        r.reason = "A is not simple";
        return r;
    }
    const CompositionFactor& f = factors[0];
    if (f.order <= 3) {
        r.reason = "A is " + f.name + ", isomorphic to C2 or an alternating group";
        return r;
    }
    if (!f.abelian && is_alternating_name(f.name)) {
        r.reason = "A is alternating";
        return r;
    }
    if (!f.identified && is_alternating_order(f.order)) {
        r.reason = "A is simple of order " + std::to_string(f.order) + " and might be alternating";
        return r;
    }
    r.applicable = true;
    fire(r, "A is simple (" + f.name + ") and not alternating or C2; the Galois group is preserved");
    return r;
}

const std::vector<std::string>& criterion_order() {
    static const std::vector<std::string> order{"unram",  "gcd1",         "rat",           "prime",
                                                "doubly", "primitive_cf", "simple_galois", "absirr"};
    return order;
}

CriterionResult run_criterion(const std::string& id, const RamificationDatum& d) {
    if (id == "unram") return criterion_unram(d);
    if (id == "gcd1") return criterion_gcd1(d);
    if (id == "rat") return criterion_rat(d);
    if (id == "prime") return criterion_prime(d);
    if (id == "doubly") return criterion_doubly(d);
    if (id == "primitive_cf") return criterion_primitive_cf(d);
    if (id == "simple_galois") return criterion_simple_galois(d);
    if (id == "absirr") return criterion_absirr(d);
    throw InputError("unknown criterion '" + id + "'");
}

namespace {

struct Candidate {
    std::string description;
    PermGroup H;
};

// Kernels of the nonzero homomorphisms A -> C2.
void index2_candidates(const PermGroup& A, std::vector<Candidate>& out) {
    const PermGroup sq = square_subgroup(A);
    if (sq.order() == A.order()) return;
    std::vector<Permutation> basis;
    PermGroup span = sq;
    for (const auto& g : A.generators())
        if (!span.contains(g)) {
            basis.push_back(g);
            span = join(span, PermGroup(A.degree(), {g}));
        }
    if (basis.size() > 5) return;
    const int r = static_cast<int>(basis.size());
    for (int c = 1; c < (1 << r); ++c) {
        std::vector<Permutation> gens = sq.generators();
        int first = -1;
        for (int i = 0; i < r; ++i) {
            if (!(c >> i & 1)) gens.push_back(basis[static_cast<std::size_t>(i)]);
            else if (first < 0) first = i;
            else gens.push_back(basis[static_cast<std::size_t>(i)] * basis[static_cast<std::size_t>(first)]);
        }
        out.push_back({"index-2 subgroup #" + std::to_string(c), PermGroup(A.degree(), gens)});
    }
}

void subset_candidates(const PermGroup& A, std::uint64_t max_index, std::vector<Candidate>& out) {
    const int n = A.degree();
    if (n > 20) return;
    std::set<std::uint32_t> seen;
    for (int k = 1; 2 * k <= n; ++k) {
        std::vector<int> pick(static_cast<std::size_t>(k));
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            std::uint32_t mask = 0;
            for (int x : pick) mask |= 1u << x;
            if (!seen.count(mask)) {
                std::vector<std::uint32_t> orbit{mask};
                seen.insert(mask);
                for (std::size_t i = 0; i < orbit.size() && orbit.size() <= max_index; ++i)
                    for (const auto& g : A.generators()) {
                        std::uint32_t img = 0;
                        for (int x = 0; x < n; ++x)
                            if (orbit[i] >> x & 1) img |= 1u << g(x);
                        if (seen.insert(img).second) orbit.push_back(img);
                    }
                if (orbit.size() <= max_index)
                    out.push_back({"stabilizer of {" + join_ints(pick, ",") + "}", setwise_stabilizer(A, pick)});
            }
            int i = k - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
}

}  // namespace

std::vector<CandidateConfig> siegel_constraint_report(const RamificationDatum& d) {
    std::vector<CandidateConfig> out;
    const PermGroup& A = d.A;
    if (!materializable(A)) return out;
    const int n = d.degree();
    const std::uint64_t max_index = 2 * d.sigma_inf.order();
    const PermGroup I(n, {d.sigma_inf});
    const PermGroup D = d.D_inf ? *d.D_inf : normalizer(A, I);
    const PermGroup G = d.geometric();

    std::vector<Candidate> cands;
    index2_candidates(A, cands);
    subset_candidates(A, max_index, cands);
    if (!is_primitive(A))
        for (const auto& sys : block_systems(A))
            cands.push_back({"stabilizer of block {" + join_ints(sys[0], ",") + "}", setwise_stabilizer(A, sys[0])});

    std::vector<PermGroup> kept;
    for (const auto& c : cands) {
        const std::uint64_t index = A.order() / c.H.order();
        if (index < 2 || index > max_index || is_transitive(c.H)) continue;
        if (std::any_of(kept.begin(), kept.end(), [&](const PermGroup& k) { return same_group(k, c.H); })) continue;
        kept.push_back(c.H);

        const Action act = Action::on_cosets(A, c.H);
        const Permutation s = act.apply(d.sigma_inf);
        CandidateConfig cfg;
        cfg.subgroup = c.description;
        cfg.index = index;
        cfg.sigma_cycles = s.cycle_type();
        const bool two = cfg.sigma_cycles.size() == 2;
        if (d.q_and_z() && two && cfg.sigma_cycles[0] != cfg.sigma_cycles[1]) cfg.failed.push_back("equal-lengths");
        const PermGroup Dc = act.image(D);
        if (d.q_and_z() && !is_transitive(Dc)) cfg.failed.push_back("D-transitive");
        const InfinityMode mode = d.q_and_z() && two ? InfinityMode::QTwoRealConjugatePoles : InfinityMode::General;
        const ConstraintChecklist chk =
            infinity_constraints(act.image(A), Dc, PermGroup(act.degree(), {s}), s, mode, act.image(G));
        for (const auto& item : chk.items)
            if (!item.pass) cfg.failed.push_back(item.id);
        cfg.survives = cfg.failed.empty();
        out.push_back(std::move(cfg));
    }
    return out;
}

Verdict verdict(const RamificationDatum& d, const std::optional<Verdict>& shape) {
    d.validate();
    Verdict v;
    for (const auto& id : criterion_order()) {
        CriterionResult r;
        try {
            r = run_criterion(id, d);
        } catch (const CapExceeded& e) {
            v.notes.push_back(id + ": not evaluated (" + e.what() + ")");
            continue;
        }
        if (r.fired) v.fired.push_back({r.criterion, r.tag, r.reason});
        else if (r.applicable) v.notes.push_back(id + ": " + r.reason);
        for (const auto& note : r.notes) v.notes.push_back(id + ": " + note);
    }
    bool witnessed = false;
    if (shape) {
        v.fired.insert(v.fired.end(), shape->fired.begin(), shape->fired.end());
        v.witnesses = shape->witnesses;
        v.notes.insert(v.notes.end(), shape->notes.begin(), shape->notes.end());
        witnessed = shape->status == VerdictStatus::InfiniteWitness;
    }
    if (!v.fired.empty() && witnessed)
        throw InvariantViolation("criterion " + v.fired.front().criterion + " [" + v.fired.front().tag +
                                 "] claims finiteness, but the shape analysis exhibits an infinite family");
    if (!v.fired.empty()) {
        v.status = VerdictStatus::Finite;
    } else if (witnessed) {
        v.status = VerdictStatus::InfiniteWitness;
    } else {
        v.status = VerdictStatus::Inconclusive;
        try {
            v.candidates = siegel_constraint_report(d);
        } catch (const CapExceeded& e) {
            v.notes.push_back(std::string("candidate report skipped: ") + e.what());
        }
        if (!v.candidates.empty() &&
            std::none_of(v.candidates.begin(), v.candidates.end(), [](const CandidateConfig& c) { return c.survives; }))
            v.notes.push_back("no listed candidate A_z survives; the list does not cover every subgroup");
    }
    v.check();
    return v;
}

bool reassert(const RamificationDatum& d, const FiredCriterion& f) {
    const auto& order = criterion_order();
    if (std::find(order.begin(), order.end(), f.criterion) == order.end())
        throw InputError("criterion '" + f.criterion + "' is not a datum criterion");
    const CriterionResult r = run_criterion(f.criterion, d);
    return r.fired && r.tag == f.tag;
}

}  // namespace hit
