#include "hit/ratfun.hpp"

#include <algorithm>
#include <numeric>

#include "hit/error.hpp"
#include "hit/factor.hpp"
#include "hit/group.hpp"

namespace hit {

RationalFunction::RationalFunction(RationalUniPoly num, RationalUniPoly den) {
    if (den.is_zero()) throw InputError("rational function with zero denominator");
    const RationalUniPoly g = gcd(num, den);
    if (g.degree() > 0) {
        num = exact_div(num, g);
        den = exact_div(den, g);
    }
    const mpq_class lc = den.leading();
    num_ = mpq_class(1 / lc) * num;
    den_ = mpq_class(1 / lc) * den;
}

RationalFunction RationalFunction::polynomial(RationalUniPoly p) {
    return RationalFunction(std::move(p), RationalUniPoly::constant(1));
}

RationalFunction RationalFunction::parse(const std::string& text, const std::string& var) {
    const BivarRatFun r = parse_expression(text, "", var);
    return RationalFunction(r.num.coeff_t(0), r.den.coeff_t(0));
}

int RationalFunction::degree() const { return std::max(num_.degree(), den_.degree()); }

std::string RationalFunction::to_string(const std::string& var) const {
    if (den_.degree() == 0) return num_.to_string(var);
    return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

int FiberProfile::geometric_count() const {
    int c = 0;
    for (const auto& p : points) c += p.field_degree;
    return c;
}

int FiberProfile::total_multiplicity() const {
    int c = 0;
    for (const auto& p : points) c += p.field_degree * p.multiplicity;
    return c;
}

int count_real_roots(const RationalUniPoly& p) {
    if (p.degree() < 1) return 0;
    std::vector<RationalUniPoly> seq{p, p.derivative()};
    while (seq.back().degree() > 0) {
        RationalUniPoly r = -divmod(seq[seq.size() - 2], seq.back()).second;
        if (r.is_zero()) break;
        seq.push_back(std::move(r));
    }
    auto changes = [&](bool at_plus) {
        int count = 0, last = 0;
        for (const auto& q : seq) {
            int s = sgn(q.leading());
            if (!at_plus && q.degree() % 2 == 1) s = -s;
            if (s != 0 && last != 0 && s != last) ++count;
            if (s != 0) last = s;
        }
        return count;
    };
    return changes(false) - changes(true);
}

FiberProfile fiber_profile(const RationalFunction& g, const std::optional<mpq_class>& value) {
    if (g.is_constant()) throw InputError("fiber of a constant function");
    const int deg = g.degree();
    const RationalUniPoly F =
        value ? g.numerator() - mpq_class(*value) * g.denominator() : g.denominator();
    FiberProfile out;
    if (F.degree() >= 1)
        for (const auto& fp : factor_Q(F).factors) {
            FiberPoint pt;
            pt.factor = fp.factor;
            pt.field_degree = fp.factor.degree();
            pt.multiplicity = fp.multiplicity;
            pt.real_roots = count_real_roots(fp.factor);
            out.points.push_back(pt);
        }
    if (F.degree() < deg) {
        FiberPoint inf;
        inf.at_infinity = true;
        inf.multiplicity = deg - std::max(F.degree(), 0);
        out.points.push_back(inf);
    }
    if (out.total_multiplicity() != deg) throw InvariantViolation("fiber multiplicities do not sum to the degree");
    return out;
}

Admissibility siegel_admissible(const RationalFunction& g, FieldFlag field) {
    const FiberProfile poles = fiber_profile(g, std::nullopt);
    const int count = poles.geometric_count();
    if (count > 2) return {false, std::to_string(count) + " distinct poles; at most 2 allowed"};
    if (count == 1) return {true, "a single pole"};
    if (field == FieldFlag::General) return {true, "two poles"};
    if (poles.points.size() == 1 && !poles.points[0].at_infinity) {
        const FiberPoint& p = poles.points[0];
        if (p.real()) return {true, "two real conjugate poles, roots of " + p.factor.to_string("Z")};
        return {false, "conjugate poles are not real (negative discriminant of " + p.factor.to_string("Z") + ")"};
    }
    for (const auto& p : poles.points)
        if (p.at_infinity) return {false, "infinity and a rational pole are not conjugate"};
    return {false, "two rational poles are not conjugate"};
}

std::vector<int> inertia_cycle_type_at(const RationalFunction& g, const std::optional<mpq_class>& value) {
    std::vector<int> out;
    for (const auto& p : fiber_profile(g, value).points)
        for (int i = 0; i < p.field_degree; ++i) out.push_back(p.multiplicity);
    std::sort(out.rbegin(), out.rend());
    return out;
}

bool sqrt_in_cyclotomic(long d, long m) {
    if (d == 0 || d == 1) throw InputError("Q(sqrt d) needs d != 0, 1");
    if (m < 1) throw InputError("cyclotomic index must be positive");
    for (long p = 2; p * p <= std::labs(d); ++p)
        if (d % (p * p) == 0) throw InputError("d = " + std::to_string(d) + " is not squarefree");
    const long mod4 = ((d % 4) + 4) % 4;
    const long disc = mod4 == 1 ? std::labs(d) : 4 * std::labs(d);
    return m % disc == 0;
}

bool ConstraintChecklist::all_pass() const {
    return std::all_of(items.begin(), items.end(), [](const ConstraintItem& i) { return i.pass; });
}

const ConstraintItem* ConstraintChecklist::find(const std::string& id) const {
    for (const auto& i : items)
        if (i.id == id) return &i;
    return nullptr;
}

ConstraintChecklist infinity_constraints(const PermGroup& A, const PermGroup& D, const PermGroup& I,
                                         const Permutation& sigma, InfinityMode mode,
                                         const std::optional<PermGroup>& G) {
    const int n = A.degree();
    if (D.degree() != n || I.degree() != n || sigma.degree() != n) throw InputError("groups act on different degrees");
    if (!same_group(I, PermGroup(n, {sigma}))) throw InputError("I is not generated by sigma");
    if (!D.contains(sigma)) throw InputError("sigma is not in D");
    if (!is_subgroup(D, A)) throw InputError("D is not a subgroup of A");
    const PermGroup g = G ? *G : A;
    if (!is_subgroup(g, A) || !is_normal(A, g)) throw InputError("G is not a normal subgroup of A");

    ConstraintChecklist out;
    const int cycles = sigma.num_cycles();
    out.items.push_back({"cycles", "sigma has at most two cycles", cycles <= 2});
    out.items.push_back({"A=GD", "A = G D", product_size(A, g, D) == A.order()});
    out.items.push_back({"I<=G", "I is contained in G and D", g.contains(sigma) && D.contains(sigma)});
    if (mode == InfinityMode::General) return out;

    const std::vector<int> type = sigma.cycle_type();
    const bool two_equal = type.size() == 2 && type[0] == type[1];
    out.items.push_back({"a", "sigma is a product of two m-cycles", two_equal});
    if (!two_equal) {
        out.items.push_back({"b", "sigma^r is conjugate in D to sigma for r prime to m", false});
        out.items.push_back({"c", "some element of D swaps the two orbits of I", false});
        out.items.push_back({"d", "some involution of D inverts sigma and fixes both orbits", false});
        return out;
    }
    const int m = type[0];
    const Partition orb = orbits(n, {sigma});
    std::vector<int> which(static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < orb.size(); ++k)
        for (int x : orb[k]) which[static_cast<std::size_t>(x)] = static_cast<int>(k);

    const auto& elems = D.elements().elements();
    std::vector<Permutation> conj;
    bool swap = false, invert = false;
    const Permutation inv = sigma.inverse();
    for (const auto& t : elems) {
        conj.push_back(conjugate(sigma, t));
        bool swaps = true, fixes = true;
        for (int x = 0; x < n; ++x) {
            const bool same = which[static_cast<std::size_t>(x)] == which[static_cast<std::size_t>(t(x))];
            swaps = swaps && !same;
            fixes = fixes && same;
        }
        swap = swap || swaps;
        if (fixes && (t * t).is_identity() && conj.back() == inv) invert = true;
    }
    std::sort(conj.begin(), conj.end());
    bool powers = true;
    for (int r = 1; r < m; ++r)
        if (std::gcd(r, m) == 1 && !std::binary_search(conj.begin(), conj.end(), sigma.pow(r))) powers = false;
    out.items.push_back({"b", "sigma^r is conjugate in D to sigma for r prime to m", powers});
    out.items.push_back({"c", "some element of D swaps the two orbits of I", swap});
    out.items.push_back({"d", "some involution of D inverts sigma and fixes both orbits", invert});
    return out;
}

}  // namespace hit
