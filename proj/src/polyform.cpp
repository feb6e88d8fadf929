#include "hit/polyform.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "hit/error.hpp"

namespace hit {

namespace {

bool is_kth_power(const mpq_class& q, int k) {
    if (q == 0) return true;
    if (q < 0 && k % 2 == 0) return false;
    mpz_class num = abs(q.get_num()), r;
    if (!mpz_root(r.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(k))) return false;
    mpz_class den = q.get_den();
    return mpz_root(r.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(k)) != 0;
}

bool squarefree_uni(const RationalUniPoly& h) { return h.degree() >= 1 && gcd(h, h.derivative()).degree() == 0; }

// A positive integer d > 1 that is not a square, if H = X^2 - d t^2.
std::optional<long> pell_parameter(const RationalBivarPoly& H) {
    if (H.terms().size() != 2 || H.coeff(0, 2) != 1) return std::nullopt;
    const mpq_class c = -H.coeff(2, 0);
    if (c.get_den() != 1 || c <= 1 || !c.get_num().fits_slong_p()) return std::nullopt;
    if (mpz_perfect_square_p(c.get_num_mpz_t())) return std::nullopt;
    return c.get_num().get_si();
}

std::string join_values(const std::vector<mpz_class>& v) {
    std::string s;
    for (const auto& x : v) {
        if (!s.empty()) s += ", ";
        s += x.get_str();
    }
    return s;
}

Witness pell_witness(long d) {
    auto [x1, y1] = pell_fundamental(d);
    std::vector<mpz_class> ts{0};
    mpz_class x = x1, y = y1;
    for (int k = 0; k < 3; ++k) {
        // X^2 - (1 + d y^2) = (X - x)(X + x).
        ts.push_back(y);
        ts.push_back(-y);
        const mpz_class nx = x1 * x + d * y1 * y, ny = x1 * y + y1 * x;
        x = nx;
        y = ny;
    }
    std::sort(ts.begin(), ts.end());
    Witness w;
    w.kind = "pell";
    w.description = "X^2 - d t^2 - 1 splits at every t = y with x^2 - d y^2 = 1";
    w.data = {{"d", std::to_string(d)},
              {"fundamental_solution", "(" + x1.get_str() + ", " + y1.get_str() + ")"},
              {"sample_t", join_values(ts)}};
    return w;
}

// Values h(x) in Z for integer x, if h takes any integral value on Z.
std::optional<Witness> value_witness(const RationalUniPoly& h) {
    mpz_class den = 1;
    for (const auto& c : h.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    if (den > 1000000) return std::nullopt;
    const long D = den.get_si();
    for (long r = 0; r < D; ++r) {
        if (h.eval(mpq_class(r)).get_den() != 1) continue;
        std::vector<mpz_class> ts;
        for (long k = 0; k < 4; ++k) ts.push_back(h.eval(mpq_class(r + k * D)).get_num());
        Witness w;
        w.kind = "value-set";
        w.description = "h(X) - t has the root X = x at t = h(x), and h is integral on x = r mod D";
        w.data = {{"h", h.to_string()},
                  {"residue", std::to_string(r)},
                  {"modulus", std::to_string(D)},
                  {"sample_t", join_values(ts)}};
        return w;
    }
    return std::nullopt;
}

bool has_simple_rational_root(const RationalUniPoly& q) {
    if (q.degree() < 1) return false;
    for (const auto& f : factor_Q(q).factors)
        if (f.factor.degree() == 1 && f.multiplicity == 1) return true;
    return false;
}

std::string truncate(std::string s, std::size_t n) {
    if (s.size() > n) s = s.substr(0, n) + " ...";
    return s;
}

}  // namespace

bool is_homogeneous(const RationalBivarPoly& h) { return h.is_homogeneous(); }
int total_degree(const RationalBivarPoly& h) { return h.total_degree(); }

bool divisible_by_t(const RationalBivarPoly& h) {
    for (const auto& [m, c] : h.terms())
        if (m.first == 0) return false;
    return true;
}

bool separable_in_X(const RationalBivarPoly& h) {
    const int n = h.degree_X();
    if (n < 1) return false;
    if (h.is_homogeneous()) return squarefree_uni(h.evaluate_t(1));
    // The discriminant in t has degree at most (2n - 1) deg_t; if it is
    // nonzero, one of that many + 1 points with full X-degree finds it.
    const long bound = static_cast<long>(2 * n - 1) * std::max(h.degree_t(), 0);
    long good = 0;
    for (long k = 0; good <= bound; ++k) {
        const long t = (k % 2 == 0) ? k / 2 : -(k + 1) / 2;
        const RationalUniPoly F = h.evaluate_t(mpq_class(t));
        if (F.degree() != n) continue;
        if (squarefree_uni(F)) return true;
        ++good;
    }
    return false;
}

PowerTest proper_power_test(const RationalBivarPoly& h) {
    if (!h.is_homogeneous() || h.is_zero()) throw InputError("proper_power_test needs a nonzero homogeneous polynomial");
    if (divisible_by_t(h)) throw InputError("proper_power_test needs a polynomial not divisible by t");
    const RationalUniPoly u = h.evaluate_t(1);
    if (u.degree() < 1) return {};
    const Factorization f = factor_Q(u);
    int e = 0;
    for (const auto& fp : f.factors) e = std::gcd(e, fp.multiplicity);
    for (int k = e; k > 1; --k)
        if (e % k == 0 && is_kth_power(f.unit, k)) return {true, k};
    return {};
}

std::pair<mpz_class, mpz_class> pell_fundamental(long d) {
    if (d <= 1) throw InputError("Pell equation needs d > 1");
    mpz_class D = d;
    if (mpz_perfect_square_p(D.get_mpz_t())) throw InputError("Pell equation needs a non-square d");
    mpz_class a0;
    mpz_sqrt(a0.get_mpz_t(), D.get_mpz_t());
    mpz_class m = 0, q = 1, a = a0;
    mpz_class h2 = 0, h1 = 1, k2 = 1, k1 = 0;
    for (;;) {
        const mpz_class h = a * h1 + h2, k = a * k1 + k2;
        if (h * h - D * k * k == 1) return {h, k};
        h2 = h1;
        h1 = h;
        k2 = k1;
        k1 = k;
        m = q * a - m;
        q = (D - m * m) / q;
        a = (a0 + m) / q;
    }
}

std::string to_string(ShapeKind k) {
    switch (k) {
        case ShapeKind::Thue: return "H(t,X)-1";
        case ShapeKind::TPowerH: return "t^m*h(X)-1";
        case ShapeKind::PMinusTQ: return "P(X)-t*Q(X)";
        case ShapeKind::HMinusT: return "h(X)-t";
        case ShapeKind::None: return "none";
    }
    return "?";
}

std::vector<Shape> detect_shapes(const RationalBivarPoly& f) {
    std::vector<Shape> out;
    const mpq_class c0 = f.coeff(0, 0);
    if (c0 != 0) {
        RationalBivarPoly H = f - RationalBivarPoly::constant(c0);
        if (!H.is_zero() && H.is_homogeneous()) {
            Shape s;
            s.kind = ShapeKind::Thue;
            s.H = mpq_class(-1 / c0) * H;
            out.push_back(s);
        }
        int m = -1;
        bool same = true;
        for (const auto& [mono, c] : f.terms()) {
            if (mono == RationalBivarPoly::Monomial{0, 0}) continue;
            if (m < 0) m = mono.first;
            same = same && mono.first == m;
        }
        if (same && m >= 1) {
            Shape s;
            s.kind = ShapeKind::TPowerH;
            s.m = m;
            s.h = mpq_class(-1 / c0) * f.coeff_t(m);
            if (s.h.degree() >= 1) out.push_back(s);
        }
    }
    if (f.degree_t() == 1) {
        Shape s;
        s.P = f.coeff_t(0);
        s.Q = -f.coeff_t(1);
        if (s.Q.degree() == 0) {
            s.kind = ShapeKind::HMinusT;
            s.h = mpq_class(1 / s.Q.coeff(0)) * s.P;
        } else {
            s.kind = ShapeKind::PMinusTQ;
        }
        out.push_back(s);
    }
    return out;
}

Verdict shape_verdict(const RationalBivarPoly& f, FieldFlag field, RingFlag ring) {
    if (f.degree_X() < 2) throw InputError("shape analysis needs degree >= 2 in X");
    const bool over_QZ = field == FieldFlag::Q && ring == RingFlag::Z;
    Verdict v;
    const std::vector<Shape> shapes = detect_shapes(f);
    for (const Shape& s : shapes) {
        switch (s.kind) {
            case ShapeKind::Thue: {
                const int n = s.H.total_degree();
                const bool sep = separable_in_X(s.H);
                if (n == 2) {
                    if (auto d = pell_parameter(s.H)) {
                        v.witnesses.push_back(pell_witness(*d));
                    } else {
                        v.notes.push_back("Thue form of degree 2: the separable-form theorem needs degree > 2");
                    }
                } else if (n > 2 && sep) {
                    v.fired.push_back({"shape_thue_separable", "T:Langmannsep",
                                       "H(t,X)-1 with H homogeneous of total degree " + std::to_string(n) +
                                           " > 2 and separable in X"});
                } else if (n > 2) {
                    const bool odd = n % 2 == 1;
                    const bool t_free = !divisible_by_t(s.H);
                    const bool power = t_free && proper_power_test(s.H).is_power;
                    if (over_QZ && odd && t_free && !power) {
                        v.fired.push_back({"shape_thue_nonpower", "T:Langmannirr",
                                           "H(t,X)-1 with H homogeneous of odd degree " + std::to_string(n) +
                                               ", not divisible by t, not a proper power"});
                    } else if (odd && t_free && !power) {
                        v.notes.push_back(
                            "odd-degree non-separable Thue form: the finiteness theorem holds over Q and Z only; "
                            "number rings with infinitely many units give counterexamples");
                    } else if (!odd) {
                        v.notes.push_back("even-degree non-separable Thue form: conjectural case, no verdict");
                    } else {
                        v.notes.push_back("Thue form divisible by t or a proper power: no theorem applies");
                    }
                }
                break;
            }
            case ShapeKind::TPowerH: {
                if (!squarefree_uni(s.h)) {
                    v.notes.push_back("t^m*h(X)-1 with h not separable: no theorem applies");
                } else if (s.m >= 3 || s.h.degree() % 2 == 1) {
                    v.fired.push_back({"shape_tmh", "P:t^mh",
                                       "t^" + std::to_string(s.m) + "*h(X)-1 with h separable of degree " +
                                           std::to_string(s.h.degree()) + (s.m >= 3 ? ", m >= 3" : ", odd degree")});
                } else {
                    v.notes.push_back("t^m*h(X)-1 with m <= 2 and deg h even: infinitely many reducible values possible");
                }
                break;
            }
            case ShapeKind::PMinusTQ: {
                if (gcd(s.P, s.Q).degree() > 0) {
                    v.notes.push_back("P and Q share a factor, so f is reducible over Q(t)");
                    break;
                }
                if (over_QZ && has_simple_rational_root(s.Q))
                    v.fired.push_back({"shape_pq_rational_root", "T:PQ",
                                       "P(X)-t*Q(X) with P, Q coprime and Q having a simple rational root"});
                const int dp = s.P.degree(), dq = s.Q.degree();
                if (squarefree_uni(s.Q) && dq >= dp - 1) {
                    if (std::max(dp, dq) % 2 == 1)
                        v.fired.push_back({"shape_pq_general", "T:LangmGen",
                                           "P(X)-t*Q(X) with Q separable, deg Q >= deg P - 1, odd max degree " +
                                               std::to_string(std::max(dp, dq))});
                    else
                        v.notes.push_back("P(X)-t*Q(X) with even max degree: a degree-2 splitting may exist");
                }
                break;
            }
            case ShapeKind::HMinusT: {
                if (auto w = value_witness(s.h))
                    v.witnesses.push_back(*w);
                else
                    v.notes.push_back("h(X)-t with h never integral on Z: no witness found");
                break;
            }
            case ShapeKind::None: break;
        }
    }
    if (shapes.empty()) v.notes.push_back("no recognized shape; defer to the criteria engine");
    if (!v.fired.empty() && !v.witnesses.empty())
        throw InvariantViolation("shape analysis produced both a finiteness theorem and an infinite family");
    if (!v.fired.empty())
        v.status = VerdictStatus::Finite;
    else if (!v.witnesses.empty())
        v.status = VerdictStatus::InfiniteWitness;
    v.check();
    return v;
}

// --- identities -------------------------------------------------------------

namespace {

IdentityCheck compare(const std::string& tag, const std::string& label, const BivarRatFun& lhs, BivarRatFun rhs,
                      bool fault) {
    if (fault) rhs = rhs + BivarRatFun::poly(RationalBivarPoly::constant(1));
    IdentityCheck c;
    c.tag = tag;
    c.label = label;
    const RationalBivarPoly diff = lhs.num * rhs.den - rhs.num * lhs.den;
    c.passed = diff.is_zero();
    if (!c.passed) c.diff = truncate(diff.to_string("Z", "X"), 400);
    return c;
}

RationalUniPoly zpoly(const std::string& s) { return parse_univariate(s, "Z"); }

std::string with_d(std::string s, long d) {
    std::string out;
    for (char ch : s) {
        if (ch == 'd')
            out += "(" + std::to_string(d) + ")";
        else
            out += ch;
    }
    return out;
}

const long kParams[] = {2, 3, 5};

std::vector<IdentityCheck> check_absirr(bool fault) {
    const RationalBivarPoly f = parse_bivariate("X^4 + 2*(1-t)*X^2 + (1+t)^2");
    const BivarRatFun lhs = substitute_t(f, zpoly("Z^2"), zpoly("1"));
    const BivarRatFun rhs = parse_expression("(X^2 + 2*Z*X + Z^2 + 1)*(X^2 - 2*Z*X + Z^2 + 1)", "Z", "X");
    return {compare("absirr", "f(Z^2, X) splits into two quadratics", lhs, rhs, fault)};
}

std::vector<IdentityCheck> check_units(bool fault) {
    const RationalBivarPoly H = parse_bivariate("X^2*(X - t)");
    const BivarRatFun lhs =
        substitute_t(H, zpoly("1 - Z^3"), zpoly("Z")) - BivarRatFun::poly(RationalBivarPoly::constant(1));
    const BivarRatFun rhs = parse_expression("(X - 1/Z)*(X^2 + Z^2*X + Z)", "Z", "X");
    return {compare("units", "H((1-Z^3)/Z, X) - 1 factors", lhs, rhs, fault)};
}

std::vector<IdentityCheck> check_quartic(bool fault) {
    std::vector<IdentityCheck> out;
    for (long d : kParams) {
        const RationalBivarPoly f = parse_bivariate(with_d("-4*d*X^2*(d*X^2 - t^2) - 1", d));
        const BivarRatFun lhs = substitute_t(f, zpoly(with_d("Z^2 + d", d)), zpoly(with_d("Z^2 - d", d)));
        const BivarRatFun rhs = parse_expression(
            with_d("-(2*d*X^2 - 4*d*Z/(Z^2 - d)*X - 1)*(2*d*X^2 + 4*d*Z/(Z^2 - d)*X - 1)", d), "Z", "X");
        out.push_back(compare("quartic", "d=" + std::to_string(d), lhs, rhs, fault));
    }
    return out;
}

std::vector<IdentityCheck> check_pell(bool fault) {
    std::vector<IdentityCheck> out;
    for (long d : kParams) {
        const RationalBivarPoly f = parse_bivariate(with_d("-4*d*X^2*(d*X^2 - t^2) - 1", d));
        auto [u1, v1] = pell_fundamental(d);
        mpz_class u = u1, v = v1;
        for (int k = 0; k < 4; ++k) {
            IdentityCheck c;
            c.tag = "pell";
            c.label = "d=" + std::to_string(d) + " (u,v)=(" + u.get_str() + "," + v.get_str() + ")";
            const mpq_class z(u, v);
            const mpq_class zz = z * z;
            const mpq_class t = (zz + d) / (zz - d);
            mpq_class expected = u * u + d * v * v;
            if (fault) expected += 1;
            const bool integral = t.get_den() == 1 && t == expected;
            const bool reducible = factor_Q(f.evaluate_t(t)).reducible();
            c.passed = integral && reducible;
            if (!integral) c.diff = "t = " + t.get_str() + " but u^2 + d v^2 = " + expected.get_str();
            else if (!reducible) c.diff = "f(" + t.get_str() + ", X) is irreducible";
            out.push_back(c);
            const mpz_class nu = u1 * u + d * v1 * v, nv = u1 * v + v1 * u;
            u = nu;
            v = nv;
        }
    }
    return out;
}

}  // namespace

const std::vector<std::string>& identity_tags() {
    static const std::vector<std::string> tags{"absirr", "units", "quartic", "pell"};
    return tags;
}

std::vector<IdentityCheck> verify_identity(const std::string& tag, bool inject_fault) {
    if (tag == "absirr") return check_absirr(inject_fault);
    if (tag == "units") return check_units(inject_fault);
    if (tag == "quartic") return check_quartic(inject_fault);
    if (tag == "pell") return check_pell(inject_fault);
    throw InputError("unknown identity tag \"" + tag + "\"");
}

}  // namespace hit
