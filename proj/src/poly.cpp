#include "hit/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "hit/error.hpp"

namespace hit {

std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

// --- univariate --------------------------------------------------------------

RationalUniPoly::RationalUniPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
    for (auto& c : c_) c.canonicalize();
    trim();
}

void RationalUniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RationalUniPoly RationalUniPoly::constant(const mpq_class& c) { return RationalUniPoly(std::vector<mpq_class>{c}); }

RationalUniPoly RationalUniPoly::monomial(const mpq_class& c, int degree) {
    if (degree < 0) throw InputError("negative monomial degree");
    std::vector<mpq_class> v(static_cast<std::size_t>(degree) + 1, 0);
    v.back() = c;
    return RationalUniPoly(std::move(v));
}

RationalUniPoly RationalUniPoly::from_integers(const std::vector<long long>& coeffs) {
    std::vector<mpq_class> v;
    for (long long c : coeffs) v.emplace_back(mpz_class(static_cast<long>(c)));
    return RationalUniPoly(std::move(v));
}

RationalUniPoly RationalUniPoly::from_mpz(const std::vector<mpz_class>& coeffs) {
    std::vector<mpq_class> v;
    for (const auto& c : coeffs) v.emplace_back(c);
    return RationalUniPoly(std::move(v));
}

mpq_class RationalUniPoly::coeff(int i) const {
    if (i < 0 || i > degree()) return 0;
    return c_[static_cast<std::size_t>(i)];
}

const mpq_class& RationalUniPoly::leading() const {
    if (c_.empty()) throw InputError("zero polynomial has no leading coefficient");
    return c_.back();
}

RationalUniPoly RationalUniPoly::derivative() const {
    std::vector<mpq_class> v;
    for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * static_cast<unsigned long>(i));
    return RationalUniPoly(std::move(v));
}

mpq_class RationalUniPoly::eval(const mpq_class& x) const {
    mpq_class r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

RationalUniPoly RationalUniPoly::monic() const {
    if (is_zero()) return *this;
    mpq_class inv = 1 / leading();
    return inv * *this;
}

RationalUniPoly RationalUniPoly::compose(const RationalUniPoly& g) const {
    RationalUniPoly r;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * g + constant(c_[i]);
    return r;
}

mpq_class RationalUniPoly::content() const {
    if (is_zero()) return 0;
    mpz_class num = 0, den = 1;
    for (const auto& c : c_) {
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    }
    mpq_class r(num, den);
    r.canonicalize();
    if (leading() < 0) r = -r;
    return r;
}

std::vector<mpz_class> RationalUniPoly::primitive_integer() const {
    std::vector<mpz_class> out;
    if (is_zero()) return out;
    const mpq_class c = content();
    for (const auto& x : c_) {
        mpq_class q = x / c;
        out.push_back(q.get_num());
    }
    return out;
}

std::string RationalUniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const mpq_class& c = c_[k];
        if (c == 0) continue;
        mpq_class a = abs(c);
        if (c < 0)
            os << (first ? "-" : " - ");
        else if (!first)
            os << " + ";
        first = false;
        const bool unit = a == 1;
        if (k == 0 || !unit) os << a.get_str();
        if (k > 0) {
            if (!unit) os << '*';
            os << var;
            if (k > 1) os << '^' << k;
        }
    }
    return os.str();
}

RationalUniPoly& RationalUniPoly::operator+=(const RationalUniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

RationalUniPoly& RationalUniPoly::operator-=(const RationalUniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

RationalUniPoly operator-(const RationalUniPoly& a) {
    RationalUniPoly r = a;
    for (auto& c : r.c_) c = -c;
    return r;
}

RationalUniPoly operator*(const RationalUniPoly& a, const RationalUniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpq_class> v(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return RationalUniPoly(std::move(v));
}

RationalUniPoly operator*(const mpq_class& c, const RationalUniPoly& a) {
    if (c == 0) return {};
    RationalUniPoly r = a;
    for (auto& x : r.c_) x *= c;
    return r;
}

std::pair<RationalUniPoly, RationalUniPoly> divmod(const RationalUniPoly& a, const RationalUniPoly& b) {
    if (b.is_zero()) throw InputError("polynomial division by zero");
    if (a.degree() < b.degree()) return {RationalUniPoly(), a};
    std::vector<mpq_class> r = a.coeffs();
    const int db = b.degree();
    std::vector<mpq_class> q(static_cast<std::size_t>(a.degree() - db) + 1, 0);
    const mpq_class inv = 1 / b.leading();
    for (int k = a.degree(); k >= db; --k) {
        const mpq_class c = r[static_cast<std::size_t>(k)] * inv;
        q[static_cast<std::size_t>(k - db)] = c;
        if (c == 0) continue;
        for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(k - db + i)] -= c * b.coeffs()[static_cast<std::size_t>(i)];
    }
    r.resize(static_cast<std::size_t>(db));
    return {RationalUniPoly(std::move(q)), RationalUniPoly(std::move(r))};
}

RationalUniPoly exact_div(const RationalUniPoly& a, const RationalUniPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw InputError("inexact polynomial division");
    return q;
}

RationalUniPoly gcd(const RationalUniPoly& a, const RationalUniPoly& b) {
    RationalUniPoly x = a, y = b;
    while (!y.is_zero()) {
        RationalUniPoly r = divmod(x, y).second;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

RationalUniPoly pow(const RationalUniPoly& a, int e) {
    if (e < 0) throw InputError("negative polynomial exponent");
    RationalUniPoly r = RationalUniPoly::constant(1), b = a;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

// --- bivariate ---------------------------------------------------------------

RationalBivarPoly RationalBivarPoly::constant(const mpq_class& c) { return monomial(c, 0, 0); }

RationalBivarPoly RationalBivarPoly::monomial(const mpq_class& c, int i, int j) {
    if (i < 0 || j < 0) throw InputError("negative exponent in a polynomial");
    RationalBivarPoly p;
    p.add_term(c, i, j);
    return p;
}

RationalBivarPoly RationalBivarPoly::from_X(const RationalUniPoly& p) {
    RationalBivarPoly r;
    for (int j = 0; j <= p.degree(); ++j) r.add_term(p.coeff(j), 0, j);
    return r;
}

RationalBivarPoly RationalBivarPoly::from_t(const RationalUniPoly& p) {
    RationalBivarPoly r;
    for (int i = 0; i <= p.degree(); ++i) r.add_term(p.coeff(i), i, 0);
    return r;
}

void RationalBivarPoly::add_term(const mpq_class& c, int i, int j) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace({i, j}, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

mpq_class RationalBivarPoly::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? mpq_class(0) : it->second;
}

int RationalBivarPoly::degree_t() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.first);
    return d;
}

int RationalBivarPoly::degree_X() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.second);
    return d;
}

int RationalBivarPoly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.first + m.second);
    return d;
}

bool RationalBivarPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = terms_.begin()->first.first + terms_.begin()->first.second;
    for (const auto& [m, c] : terms_)
        if (m.first + m.second != d) return false;
    return true;
}

bool RationalBivarPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
}

RationalUniPoly RationalBivarPoly::coeff_X(int j) const {
    std::vector<mpq_class> v(static_cast<std::size_t>(std::max(degree_t(), 0)) + 1, 0);
    for (const auto& [m, c] : terms_)
        if (m.second == j) v[static_cast<std::size_t>(m.first)] = c;
    return RationalUniPoly(std::move(v));
}

RationalUniPoly RationalBivarPoly::coeff_t(int i) const {
    std::vector<mpq_class> v(static_cast<std::size_t>(std::max(degree_X(), 0)) + 1, 0);
    for (const auto& [m, c] : terms_)
        if (m.first == i) v[static_cast<std::size_t>(m.second)] = c;
    return RationalUniPoly(std::move(v));
}

RationalUniPoly RationalBivarPoly::evaluate_t(const mpq_class& t) const {
    std::vector<mpq_class> v(static_cast<std::size_t>(std::max(degree_X(), 0)) + 1, 0);
    std::vector<mpq_class> powers{1};
    for (int i = 1; i <= degree_t(); ++i) powers.push_back(powers.back() * t);
    for (const auto& [m, c] : terms_) v[static_cast<std::size_t>(m.second)] += c * powers[static_cast<std::size_t>(m.first)];
    return RationalUniPoly(std::move(v));
}

RationalUniPoly RationalBivarPoly::evaluate_X(const mpq_class& x) const {
    std::vector<mpq_class> v(static_cast<std::size_t>(std::max(degree_t(), 0)) + 1, 0);
    std::vector<mpq_class> powers{1};
    for (int j = 1; j <= degree_X(); ++j) powers.push_back(powers.back() * x);
    for (const auto& [m, c] : terms_) v[static_cast<std::size_t>(m.first)] += c * powers[static_cast<std::size_t>(m.second)];
    return RationalUniPoly(std::move(v));
}

RationalBivarPoly RationalBivarPoly::derivative_X() const {
    RationalBivarPoly r;
    for (const auto& [m, c] : terms_)
        if (m.second > 0) r.add_term(c * m.second, m.first, m.second - 1);
    return r;
}

RationalBivarPoly RationalBivarPoly::derivative_t() const {
    RationalBivarPoly r;
    for (const auto& [m, c] : terms_)
        if (m.first > 0) r.add_term(c * m.first, m.first - 1, m.second);
    return r;
}

std::string RationalBivarPoly::to_string(const std::string& tvar, const std::string& xvar) const {
    if (terms_.empty()) return "0";
    // Descending total degree, then descending X degree.
    std::vector<std::pair<Monomial, mpq_class>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        const int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
        if (da != db) return da > db;
        return a.first.second > b.first.second;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : v) {
        mpq_class a = abs(c);
        if (c < 0)
            os << (first ? "-" : " - ");
        else if (!first)
            os << " + ";
        first = false;
        std::string mono;
        auto var = [&](const std::string& name, int e) {
            if (e == 0) return;
            if (!mono.empty()) mono += '*';
            mono += name;
            if (e > 1) mono += '^' + std::to_string(e);
        };
        var(xvar, m.second);
        var(tvar, m.first);
        if (mono.empty())
            os << a.get_str();
        else if (a == 1)
            os << mono;
        else
            os << a.get_str() << '*' << mono;
    }
    return os.str();
}

RationalBivarPoly& RationalBivarPoly::operator+=(const RationalBivarPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(c, m.first, m.second);
    return *this;
}

RationalBivarPoly& RationalBivarPoly::operator-=(const RationalBivarPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(-c, m.first, m.second);
    return *this;
}

RationalBivarPoly operator-(const RationalBivarPoly& a) {
    RationalBivarPoly r = a;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

RationalBivarPoly operator*(const RationalBivarPoly& a, const RationalBivarPoly& b) {
    RationalBivarPoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ca * cb, ma.first + mb.first, ma.second + mb.second);
    return r;
}

RationalBivarPoly operator*(const mpq_class& c, const RationalBivarPoly& a) {
    if (c == 0) return {};
    RationalBivarPoly r = a;
    for (auto& [m, x] : r.terms_) x *= c;
    return r;
}

RationalBivarPoly pow(const RationalBivarPoly& a, int e) {
    if (e < 0) throw InputError("negative polynomial exponent");
    RationalBivarPoly r = RationalBivarPoly::constant(1), b = a;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

// --- rational functions in two variables -------------------------------------

RationalBivarPoly BivarRatFun::as_polynomial() const {
    if (!den.is_constant() || den.is_zero()) throw InputError("expression is not a polynomial");
    return mpq_class(1 / den.coeff(0, 0)) * num;
}

BivarRatFun operator+(const BivarRatFun& a, const BivarRatFun& b) {
    if (a.den == b.den) return {a.num + b.num, a.den};
    return {a.num * b.den + b.num * a.den, a.den * b.den};
}

BivarRatFun operator-(const BivarRatFun& a, const BivarRatFun& b) {
    if (a.den == b.den) return {a.num - b.num, a.den};
    return {a.num * b.den - b.num * a.den, a.den * b.den};
}

BivarRatFun operator*(const BivarRatFun& a, const BivarRatFun& b) { return {a.num * b.num, a.den * b.den}; }

BivarRatFun operator/(const BivarRatFun& a, const BivarRatFun& b) {
    if (b.num.is_zero()) throw InputError("division by zero");
    return {a.num * b.den, a.den * b.num};
}

BivarRatFun operator-(const BivarRatFun& a) { return {-a.num, a.den}; }

BivarRatFun pow(const BivarRatFun& a, int e) {
    if (e >= 0) return {pow(a.num, e), pow(a.den, e)};
    if (a.num.is_zero()) throw InputError("zero raised to a negative power");
    return {pow(a.den, -e), pow(a.num, -e)};
}

bool equivalent(const BivarRatFun& a, const BivarRatFun& b) { return a.num * b.den == b.num * a.den; }

BivarRatFun substitute_t(const RationalBivarPoly& f, const RationalUniPoly& num, const RationalUniPoly& den) {
    if (den.is_zero()) throw InputError("substitution with zero denominator");
    const int d = std::max(f.degree_t(), 0);
    const RationalBivarPoly p = RationalBivarPoly::from_t(num), q = RationalBivarPoly::from_t(den);
    std::vector<RationalBivarPoly> pp{RationalBivarPoly::constant(1)}, qq{RationalBivarPoly::constant(1)};
    for (int i = 1; i <= d; ++i) {
        pp.push_back(pp.back() * p);
        qq.push_back(qq.back() * q);
    }
    BivarRatFun out;
    out.den = qq[static_cast<std::size_t>(d)];
    for (const auto& [m, c] : f.terms())
        out.num += c * (pp[static_cast<std::size_t>(m.first)] * qq[static_cast<std::size_t>(d - m.first)] *
                        RationalBivarPoly::monomial(1, 0, m.second));
    return out;
}

// --- parser ------------------------------------------------------------------

namespace {

class Parser {
public:
    Parser(const std::string& text, std::string first, std::string second)
        : s_(text), first_(std::move(first)), second_(std::move(second)) {}

    BivarRatFun parse() {
        skip();
        if (pos_ >= s_.size()) fail("empty expression");
        BivarRatFun r = expr();
        skip();
        if (pos_ < s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw InputError("parse error at column " + std::to_string(pos_ + 1) + ": " + what);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool starts_primary() {
        skip();
        if (pos_ >= s_.size()) return false;
        const char c = s_[pos_];
        return c == '(' || std::isalpha(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) ||
               c == '.';
    }

    BivarRatFun expr() {
        BivarRatFun r = term();
        for (;;) {
            if (peek('+')) {
                ++pos_;
                r = r + term();
            } else if (peek('-')) {
                ++pos_;
                r = r - term();
            } else {
                return r;
            }
        }
    }

    BivarRatFun term() {
        BivarRatFun r = unary();
        for (;;) {
            if (peek('*') && !(pos_ + 1 < s_.size() && s_[pos_ + 1] == '*')) {
                ++pos_;
                r = r * unary();
            } else if (peek('/')) {
                ++pos_;
                const std::size_t at = pos_;
                BivarRatFun d = unary();
                if (d.num.is_zero()) {
                    pos_ = at;
                    fail("division by zero");
                }
                r = r / d;
            } else if (starts_primary()) {
                r = r * power();
            } else {
                return r;
            }
        }
    }

    BivarRatFun unary() {
        if (peek('-')) {
            ++pos_;
            return -unary();
        }
        if (peek('+')) {
            ++pos_;
            return unary();
        }
        return power();
    }

    BivarRatFun power() {
        BivarRatFun base = primary();
        skip();
        bool caret = false;
        if (peek('^')) {
            ++pos_;
            caret = true;
        } else if (pos_ + 1 < s_.size() && s_[pos_] == '*' && s_[pos_ + 1] == '*') {
            pos_ += 2;
            caret = true;
        }
        if (!caret) return base;
        skip();
        bool neg = false;
        if (peek('-')) {
            neg = true;
            ++pos_;
        }
        skip();
        bool paren = false;
        if (peek('(')) {
            paren = true;
            ++pos_;
            skip();
        }
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer exponent");
        if (pos_ - start > 4) fail("exponent too large");
        int e = std::stoi(s_.substr(start, pos_ - start));
        if (paren) {
            if (!peek(')')) fail("expected ')'");
            ++pos_;
        }
        if (neg) e = -e;
        if (e < 0 && base.num.is_zero()) fail("zero raised to a negative power");
        return pow(base, e);
    }

    BivarRatFun primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            BivarRatFun r = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::string name(1, c);
            if (name == first_) {
                ++pos_;
                return BivarRatFun::poly(RationalBivarPoly::var_t());
            }
            if (!second_.empty() && name == second_) {
                ++pos_;
                return BivarRatFun::poly(RationalBivarPoly::var_X());
            }
            fail("unknown variable '" + name + "'");
        }
        fail(std::string("unexpected '") + c + "'");
    }

    BivarRatFun number() {
        const std::size_t start = pos_;
        std::string digits, frac;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) digits += s_[pos_++];
        if (pos_ < s_.size() && s_[pos_] == '.') {
            ++pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) frac += s_[pos_++];
        }
        if (digits.empty() && frac.empty()) {
            pos_ = start;
            fail("malformed number");
        }
        mpz_class num(digits.empty() ? "0" : digits + frac);
        mpz_class den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        mpq_class q(num, den);
        q.canonicalize();
        return BivarRatFun::poly(RationalBivarPoly::constant(q));
    }

    const std::string& s_;
    std::string first_, second_;
    std::size_t pos_ = 0;
};

}  // namespace

BivarRatFun parse_expression(const std::string& text, const std::string& first_var, const std::string& second_var) {
    return Parser(text, first_var, second_var).parse();
}

RationalBivarPoly parse_bivariate(const std::string& text, const std::string& first_var,
                                  const std::string& second_var) {
    BivarRatFun r = parse_expression(text, first_var, second_var);
    if (!r.is_polynomial()) throw InputError("expression \"" + text + "\" is not a polynomial");
    return r.as_polynomial();
}

RationalUniPoly parse_univariate(const std::string& text, const std::string& var) {
    RationalBivarPoly p = parse_bivariate(text, "", var);
    return p.coeff_t(0);
}

}  // namespace hit
