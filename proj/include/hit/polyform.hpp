#pragma once

#include <gmpxx.h>
#include <string>
#include <vector>

#include "hit/factor.hpp"
#include "hit/poly.hpp"
#include "hit/verdict.hpp"

namespace hit {

bool is_homogeneous(const RationalBivarPoly& h);
int total_degree(const RationalBivarPoly& h);
bool divisible_by_t(const RationalBivarPoly& h);
// Square-free as a polynomial in X over Q(t).  For homogeneous input this
// is decided on h(X) = H(1, X); powers of t are units over Q(t).
bool separable_in_X(const RationalBivarPoly& h);

struct PowerTest {
    bool is_power = false;
    int exponent = 1;
};
// Whether a homogeneous H not divisible by t is a proper power in Q[t, X].
PowerTest proper_power_test(const RationalBivarPoly& h);

// Fundamental solution of x^2 - d y^2 = 1 for positive non-square d.
std::pair<mpz_class, mpz_class> pell_fundamental(long d);

enum class ShapeKind { Thue, TPowerH, PMinusTQ, HMinusT, None };
std::string to_string(ShapeKind k);

struct Shape {
    ShapeKind kind = ShapeKind::None;
    RationalBivarPoly H;  // Thue: f is proportional to H - 1
    RationalUniPoly h;    // TPowerH: t^m h(X) - 1; HMinusT: h(X) - t
    int m = 0;
    RationalUniPoly P, Q;  // PMinusTQ: P(X) - t Q(X)
};
// All recognized normal forms of f, most specific first.
std::vector<Shape> detect_shapes(const RationalBivarPoly& f);

// Applies the shape theorems.  Requires deg_X f >= 2; irreducibility of f
// over Q(t) is the caller's responsibility.
Verdict shape_verdict(const RationalBivarPoly& f, FieldFlag field, RingFlag ring);

struct IdentityCheck {
    std::string tag;
    std::string label;
    bool passed = false;
    std::string diff;  // nonzero monomials of lhs - rhs after clearing denominators
};

const std::vector<std::string>& identity_tags();
// Checks one identity tag; the parametric ones are checked for d = 2, 3, 5.
// inject_fault perturbs the right-hand side so the check must fail.
std::vector<IdentityCheck> verify_identity(const std::string& tag, bool inject_fault = false);

}  // namespace hit
