#pragma once

#include <gmpxx.h>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hit {

// Dense univariate polynomial over Q, lowest degree first.  The zero
// polynomial has no coefficients and degree -1.
class RationalUniPoly {
public:
    RationalUniPoly() = default;
    explicit RationalUniPoly(std::vector<mpq_class> coeffs);
    static RationalUniPoly constant(const mpq_class& c);
    static RationalUniPoly monomial(const mpq_class& c, int degree);
    static RationalUniPoly from_integers(const std::vector<long long>& coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<mpq_class>& coeffs() const { return c_; }
    mpq_class coeff(int i) const;
    const mpq_class& leading() const;

    RationalUniPoly derivative() const;
    mpq_class eval(const mpq_class& x) const;
    RationalUniPoly monic() const;
    // Substitutes g for the variable.
    RationalUniPoly compose(const RationalUniPoly& g) const;

    // Positive rational c with this = c * (primitive integer polynomial
    // with positive leading coefficient).  Zero for the zero polynomial.
    mpq_class content() const;
    std::vector<mpz_class> primitive_integer() const;
    static RationalUniPoly from_mpz(const std::vector<mpz_class>& coeffs);

    std::string to_string(const std::string& var = "X") const;

    RationalUniPoly& operator+=(const RationalUniPoly& o);
    RationalUniPoly& operator-=(const RationalUniPoly& o);
    friend RationalUniPoly operator+(RationalUniPoly a, const RationalUniPoly& b) { return a += b; }
    friend RationalUniPoly operator-(RationalUniPoly a, const RationalUniPoly& b) { return a -= b; }
    friend RationalUniPoly operator-(const RationalUniPoly& a);
    friend RationalUniPoly operator*(const RationalUniPoly& a, const RationalUniPoly& b);
    friend RationalUniPoly operator*(const mpq_class& c, const RationalUniPoly& a);
    friend bool operator==(const RationalUniPoly&, const RationalUniPoly&) = default;

private:
    void trim();
    std::vector<mpq_class> c_;
};

// Quotient and remainder.  Throws InputError on division by zero.
std::pair<RationalUniPoly, RationalUniPoly> divmod(const RationalUniPoly& a, const RationalUniPoly& b);
// Throws InputError when b does not divide a.
RationalUniPoly exact_div(const RationalUniPoly& a, const RationalUniPoly& b);
// Monic gcd; gcd(0, 0) = 0.
RationalUniPoly gcd(const RationalUniPoly& a, const RationalUniPoly& b);
RationalUniPoly pow(const RationalUniPoly& a, int e);

// Sparse polynomial in two variables over Q.  Monomial (i, j) stands for
// t^i X^j (the first variable may also be named Z).
class RationalBivarPoly {
public:
    using Monomial = std::pair<int, int>;

    RationalBivarPoly() = default;
    static RationalBivarPoly constant(const mpq_class& c);
    static RationalBivarPoly monomial(const mpq_class& c, int i, int j);
    static RationalBivarPoly var_t() { return monomial(1, 1, 0); }
    static RationalBivarPoly var_X() { return monomial(1, 0, 1); }
    static RationalBivarPoly from_X(const RationalUniPoly& p);
    static RationalBivarPoly from_t(const RationalUniPoly& p);

    const std::map<Monomial, mpq_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    mpq_class coeff(int i, int j) const;
    void add_term(const mpq_class& c, int i, int j);

    int degree_t() const;
    int degree_X() const;
    int total_degree() const;
    bool is_homogeneous() const;
    bool is_constant() const;

    // Coefficient of X^j as a polynomial in t, and of t^i as one in X.
    RationalUniPoly coeff_X(int j) const;
    RationalUniPoly coeff_t(int i) const;

    RationalUniPoly evaluate_t(const mpq_class& t) const;
    RationalUniPoly evaluate_X(const mpq_class& x) const;
    RationalBivarPoly derivative_X() const;
    RationalBivarPoly derivative_t() const;

    std::string to_string(const std::string& tvar = "t", const std::string& xvar = "X") const;

    RationalBivarPoly& operator+=(const RationalBivarPoly& o);
    RationalBivarPoly& operator-=(const RationalBivarPoly& o);
    friend RationalBivarPoly operator+(RationalBivarPoly a, const RationalBivarPoly& b) { return a += b; }
    friend RationalBivarPoly operator-(RationalBivarPoly a, const RationalBivarPoly& b) { return a -= b; }
    friend RationalBivarPoly operator-(const RationalBivarPoly& a);
    friend RationalBivarPoly operator*(const RationalBivarPoly& a, const RationalBivarPoly& b);
    friend RationalBivarPoly operator*(const mpq_class& c, const RationalBivarPoly& a);
    friend bool operator==(const RationalBivarPoly&, const RationalBivarPoly&) = default;

private:
    std::map<Monomial, mpq_class> terms_;
};

RationalBivarPoly pow(const RationalBivarPoly& a, int e);

// Quotient of two bivariate polynomials, kept unreduced.  Equality is
// tested by cross multiplication.
struct BivarRatFun {
    RationalBivarPoly num;
    RationalBivarPoly den = RationalBivarPoly::constant(1);

    static BivarRatFun poly(RationalBivarPoly p) { return {std::move(p), RationalBivarPoly::constant(1)}; }
    bool is_polynomial() const { return den.is_constant(); }
    // The polynomial num/den; throws InputError if den is not constant.
    RationalBivarPoly as_polynomial() const;
};

BivarRatFun operator+(const BivarRatFun& a, const BivarRatFun& b);
BivarRatFun operator-(const BivarRatFun& a, const BivarRatFun& b);
BivarRatFun operator*(const BivarRatFun& a, const BivarRatFun& b);
BivarRatFun operator/(const BivarRatFun& a, const BivarRatFun& b);
BivarRatFun operator-(const BivarRatFun& a);
BivarRatFun pow(const BivarRatFun& a, int e);
bool equivalent(const BivarRatFun& a, const BivarRatFun& b);

// Parses sums, products (explicit or implicit), quotients, powers with
// integer exponents and parentheses.  Variables are single letters; the
// first name in vars is the first variable, the second name (if any) is X.
// Errors are InputError with the column of the offending character.
BivarRatFun parse_expression(const std::string& text, const std::string& first_var = "t",
                             const std::string& second_var = "X");
RationalBivarPoly parse_bivariate(const std::string& text, const std::string& first_var = "t",
                                  const std::string& second_var = "X");
RationalUniPoly parse_univariate(const std::string& text, const std::string& var = "X");

// f(g(Z), X) for f in t and X, where g = num/den is a rational function of
// Z.  The result has Z as its first variable.
BivarRatFun substitute_t(const RationalBivarPoly& f, const RationalUniPoly& num, const RationalUniPoly& den);

std::string rational_to_string(const mpq_class& q);

}  // namespace hit
