#include "hit/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>

#include "hit/error.hpp"

namespace hit {

namespace {

using u64 = std::uint64_t;
using Fp = std::vector<u64>;     // coefficients mod p, lowest first
using Zv = std::vector<mpz_class>;  // integer coefficients, lowest first

// --- arithmetic mod a small prime -------------------------------------------

void trim(Fp& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 powmod(u64 b, u64 e, u64 p) {
    u64 r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

u64 inv_mod(u64 a, u64 p) { return powmod(a, p - 2, p); }

Fp fp_sub(Fp a, const Fp& b, u64 p) {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

Fp fp_mul(const Fp& a, const Fp& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    Fp r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
}

// Quotient and remainder; b must be nonzero.
std::pair<Fp, Fp> fp_divmod(Fp a, const Fp& b, u64 p) {
    if (a.size() < b.size()) return {{}, a};
    const u64 inv = inv_mod(b.back(), p);
    const std::size_t db = b.size() - 1;
    Fp q(a.size() - db, 0);
    for (std::size_t k = a.size(); k-- > db;) {
        const u64 c = a[k] * inv % p;
        q[k - db] = c;
        if (!c) continue;
        for (std::size_t i = 0; i <= db; ++i) a[k - db + i] = (a[k - db + i] + p - c * b[i] % p) % p;
    }
    a.resize(db);
    trim(a);
    trim(q);
    return {q, a};
}

Fp fp_mod(const Fp& a, const Fp& b, u64 p) { return fp_divmod(a, b, p).second; }

Fp fp_monic(Fp a, u64 p) {
    if (a.empty()) return a;
    const u64 inv = inv_mod(a.back(), p);
    for (auto& c : a) c = c * inv % p;
    return a;
}

Fp fp_gcd(Fp a, Fp b, u64 p) {
    while (!b.empty()) {
        Fp r = fp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return fp_monic(a, p);
}

// s, t with s*a + t*b = 1 for coprime a, b.
std::pair<Fp, Fp> fp_bezout(const Fp& a, const Fp& b, u64 p) {
    Fp r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        auto [q, r] = fp_divmod(r0, r1, p);
        r0 = std::move(r1);
        r1 = std::move(r);
        Fp s2 = fp_sub(s0, fp_mul(q, s1, p), p);
        Fp t2 = fp_sub(t0, fp_mul(q, t1, p), p);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.size() != 1) throw InvariantViolation("Hensel factors are not coprime mod p");
    const u64 inv = inv_mod(r0[0], p);
    for (auto& c : s0) c = c * inv % p;
    for (auto& c : t0) c = c * inv % p;
    return {s0, t0};
}

Fp fp_powmod(Fp base, const mpz_class& e, const Fp& mod, u64 p) {
    Fp r{1};
    base = fp_mod(base, mod, p);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = fp_mod(fp_mul(r, r, p), mod, p);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = fp_mod(fp_mul(r, base, p), mod, p);
    }
    return r;
}

Fp fp_derivative(const Fp& a, u64 p) {
    Fp r;
    for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * (i % p) % p);
    trim(r);
    return r;
}

Fp reduce(const Zv& f, u64 p) {
    Fp r;
    const mpz_class P = static_cast<unsigned long>(p);
    for (const auto& c : f) {
        mpz_class m;
        mpz_mod(m.get_mpz_t(), c.get_mpz_t(), P.get_mpz_t());
        r.push_back(m.get_ui());
    }
    trim(r);
    return r;
}

// Distinct-degree factorization of a monic square-free polynomial.
std::vector<std::pair<Fp, int>> ddf(Fp f, u64 p) {
    std::vector<std::pair<Fp, int>> out;
    const Fp x{0, 1};
    Fp h = x;
    for (int d = 1; 2 * d <= static_cast<int>(f.size()) - 1; ++d) {
        h = fp_powmod(h, mpz_class(static_cast<unsigned long>(p)), f, p);
        Fp g = fp_gcd(fp_sub(h, x, p), f, p);
        if (g.size() > 1) {
            f = fp_divmod(f, g, p).first;
            h = fp_mod(h, f, p);
            out.emplace_back(std::move(g), d);
        }
    }
    if (f.size() > 1) {
        const int d = static_cast<int>(f.size()) - 1;
        out.emplace_back(std::move(f), d);
    }
    return out;
}

// Equal-degree splitting of a monic product of degree-d irreducibles.
void edf(const Fp& g, int d, u64 p, std::mt19937_64& rng, std::vector<Fp>& out) {
    const int n = static_cast<int>(g.size()) - 1;
    if (n == d) {
        out.push_back(g);
        return;
    }
    mpz_class e;
    mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    std::uniform_int_distribution<u64> coin(0, p - 1);
    for (;;) {
        Fp a(static_cast<std::size_t>(n));
        for (auto& c : a) c = coin(rng);
        trim(a);
        if (a.size() < 2) continue;
        Fp b = fp_sub(fp_powmod(a, e, g, p), Fp{1}, p);
        Fp h = fp_gcd(b, g, p);
        if (h.size() > 1 && h.size() < g.size()) {
            edf(h, d, p, rng, out);
            edf(fp_divmod(g, h, p).first, d, p, rng, out);
            return;
        }
    }
}

// --- arithmetic mod m for Hensel lifting ------------------------------------

void ztrim(Zv& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Zv zmod(Zv a, const mpz_class& m) {
    for (auto& c : a) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    ztrim(a);
    return a;
}

Zv zadd(Zv a, const Zv& b, const mpz_class& m) {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return zmod(std::move(a), m);
}

Zv zsub(Zv a, const Zv& b, const mpz_class& m) {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return zmod(std::move(a), m);
}

Zv zmul(const Zv& a, const Zv& b, const mpz_class& m) {
    if (a.empty() || b.empty()) return {};
    Zv r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return zmod(std::move(r), m);
}

// Division by a monic polynomial mod m.
std::pair<Zv, Zv> zdivmod_monic(Zv a, const Zv& b, const mpz_class& m) {
    if (a.size() < b.size()) return {{}, a};
    const std::size_t db = b.size() - 1;
    Zv q(a.size() - db, 0);
    for (std::size_t k = a.size(); k-- > db;) {
        mpz_class c = a[k];
        mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        q[k - db] = c;
        if (c == 0) continue;
        for (std::size_t i = 0; i <= db; ++i) a[k - db + i] -= c * b[i];
    }
    a.resize(db);
    return {zmod(std::move(q), m), zmod(std::move(a), m)};
}

Zv to_zv(const Fp& a) {
    Zv r;
    for (u64 c : a) r.emplace_back(static_cast<unsigned long>(c));
    return r;
}

// Lifts f = g*h (mod p), with h monic and g carrying the leading
// coefficient, to a factorization mod modulus.
std::pair<Zv, Zv> hensel_lift(const Zv& f, const Fp& g0, const Fp& h0, u64 p, const mpz_class& modulus) {
    auto [s0, t0] = fp_bezout(g0, h0, p);
    Zv g = to_zv(g0), h = to_zv(h0), s = to_zv(s0), t = to_zv(t0);
    mpz_class m = static_cast<unsigned long>(p);
    while (m < modulus) {
        const mpz_class m2 = m * m;
        const Zv fm = zmod(f, m2);
        const Zv e = zsub(fm, zmul(g, h, m2), m2);
        auto [q, r] = zdivmod_monic(zmul(s, e, m2), h, m2);
        Zv g1 = zadd(g, zadd(zmul(t, e, m2), zmul(q, g, m2), m2), m2);
        Zv h1 = zadd(h, r, m2);
        Zv b = zsub(zadd(zmul(s, g1, m2), zmul(t, h1, m2), m2), Zv{1}, m2);
        auto [c, d] = zdivmod_monic(zmul(s, b, m2), h1, m2);
        s = zsub(s, d, m2);
        t = zsub(t, zadd(zmul(t, b, m2), zmul(c, g1, m2), m2), m2);
        g = std::move(g1);
        h = std::move(h1);
        m = m2;
    }
    return {zmod(g, modulus), zmod(h, modulus)};
}

Zv symmetric(Zv a, const mpz_class& m) {
    const mpz_class half = m / 2;
    for (auto& c : a) {
        mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        if (c > half) c -= m;
    }
    ztrim(a);
    return a;
}

Zv primitive(Zv a) {
    mpz_class g = 0;
    for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 0) return a;
    if (a.back() < 0) g = -g;
    for (auto& c : a) c /= g;
    return a;
}

// Exact division in Z[X]; returns false if b does not divide a.
bool zdivides(const Zv& a, const Zv& b, Zv& quotient) {
    if (a.size() < b.size()) return false;
    Zv r = a;
    const std::size_t db = b.size() - 1;
    Zv q(a.size() - db, 0);
    for (std::size_t k = r.size(); k-- > db;) {
        if (r[k] == 0) continue;
        if (!mpz_divisible_p(r[k].get_mpz_t(), b.back().get_mpz_t())) return false;
        const mpz_class c = r[k] / b.back();
        q[k - db] = c;
        for (std::size_t i = 0; i <= db; ++i) r[k - db + i] -= c * b[i];
    }
    for (std::size_t i = 0; i < db; ++i)
        if (r[i] != 0) return false;
    ztrim(q);
    quotient = std::move(q);
    return true;
}

bool is_prime_small(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Factors a primitive square-free polynomial with positive leading
// coefficient and f(0) != 0.
std::vector<Zv> zassenhaus(const Zv& f) {
    const std::size_t n = f.size() - 1;
    if (n <= 1) return {f};
    const mpz_class lc = f.back();

    // Choose among a few good primes the one with fewest modular factors.
    u64 best_p = 0;
    std::vector<std::pair<Fp, int>> best_ddf;
    std::size_t best_count = 0;
    int tried = 0;
    for (u64 p = 3; tried < 5 && p < 100000; p += 2) {
        if (!is_prime_small(p)) continue;
        if (mpz_divisible_ui_p(lc.get_mpz_t(), static_cast<unsigned long>(p))) continue;
        Fp fb = reduce(f, p);
        if (fp_gcd(fb, fp_derivative(fb, p), p).size() != 1) continue;
        ++tried;
        auto dd = ddf(fp_monic(fb, p), p);
        std::size_t count = 0;
        for (const auto& [g, d] : dd) count += (g.size() - 1) / static_cast<std::size_t>(d);
        if (best_p == 0 || count < best_count) {
            best_p = p;
            best_ddf = std::move(dd);
            best_count = count;
        }
        if (count == 1) break;
    }
    if (best_p == 0) throw InvariantViolation("no good prime found for factorization");
    if (best_count == 1) return {f};
    const u64 p = best_p;

    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ n);
    std::vector<Fp> modular;
    for (const auto& [g, d] : best_ddf) edf(g, d, p, rng, modular);

    // Coefficients of lc * (true factor) are bounded by |lc| 2^n |f|_2.
    mpz_class norm2 = 0;
    for (const auto& c : f) norm2 += c * c;
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
    root += 1;
    mpz_class bound = abs(lc) * root;
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n);
    const mpz_class needed = 2 * bound + 1;
    mpz_class modulus = static_cast<unsigned long>(p);
    while (modulus <= needed) modulus *= modulus;

    // Sequential two-factor lifting.
    std::vector<Zv> lifted;
    Zv rest = zmod(f, modulus);
    const mpz_class P = static_cast<unsigned long>(p);
    for (std::size_t i = 0; i + 1 < modular.size(); ++i) {
        Fp g0 = reduce(rest, p);
        Fp h0 = modular[i];
        g0 = fp_divmod(g0, h0, p).first;
        auto [g, h] = hensel_lift(rest, g0, h0, p, modulus);
        lifted.push_back(std::move(h));
        rest = std::move(g);
    }
    {
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t());
        Zv last = rest;
        for (auto& c : last) c *= inv;
        lifted.push_back(zmod(std::move(last), modulus));
    }

    // Recombination by increasing subset size.
    std::vector<Zv> out;
    std::vector<std::size_t> remaining(lifted.size());
    for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
    Zv cur = f;
    std::size_t s = 1;
    while (2 * s <= remaining.size()) {
        bool found = false;
        const std::size_t r = remaining.size();
        std::vector<bool> pick(r, false);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(s), true);
        const mpz_class b = cur.back();
        do {
            Zv prod{b};
            for (std::size_t i = 0; i < r; ++i)
                if (pick[i]) prod = zmul(prod, lifted[remaining[i]], modulus);
            Zv cand = symmetric(prod, modulus);
            if (cand.size() < 2) continue;
            if (cur[0] != 0 && cand[0] != 0 && !mpz_divisible_p(mpz_class(b * cur[0]).get_mpz_t(), cand[0].get_mpz_t()))
                continue;
            Zv g = primitive(cand);
            Zv q;
            if (!zdivides(cur, g, q)) continue;
            out.push_back(std::move(g));
            cur = std::move(q);
            std::vector<std::size_t> keep;
            for (std::size_t i = 0; i < r; ++i)
                if (!pick[i]) keep.push_back(remaining[i]);
            remaining = std::move(keep);
            found = true;
            break;
        } while (std::prev_permutation(pick.begin(), pick.end()));
        if (!found) ++s;
    }
    if (cur.size() > 1) out.push_back(primitive(cur));
    return out;
}

Zv to_integer(const RationalUniPoly& p) { return p.primitive_integer(); }

bool factor_less(const FactorPower& a, const FactorPower& b) {
    if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
    for (int i = a.factor.degree(); i >= 0; --i)
        if (a.factor.coeff(i) != b.factor.coeff(i)) return a.factor.coeff(i) < b.factor.coeff(i);
    return a.multiplicity < b.multiplicity;
}

}  // namespace

int Factorization::total_multiplicity() const {
    int t = 0;
    for (const auto& f : factors) t += f.multiplicity;
    return t;
}

RationalUniPoly Factorization::expand() const {
    RationalUniPoly r = RationalUniPoly::constant(unit);
    for (const auto& f : factors) r = r * pow(f.factor, f.multiplicity);
    return r;
}

std::string Factorization::to_string(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    if (unit != 1 || factors.empty()) {
        os << unit.get_str();
        first = false;
    }
    for (const auto& f : factors) {
        if (!first) os << " * ";
        first = false;
        os << '(' << f.factor.to_string(var) << ')';
        if (f.multiplicity > 1) os << '^' << f.multiplicity;
    }
    return os.str();
}

std::vector<FactorPower> squarefree_decomposition(const RationalUniPoly& p) {
    std::vector<FactorPower> out;
    if (p.degree() < 1) return out;
    const RationalUniPoly f = p.monic();
    const RationalUniPoly fd = f.derivative();
    const RationalUniPoly a0 = gcd(f, fd);
    RationalUniPoly b = exact_div(f, a0);
    RationalUniPoly c = exact_div(fd, a0);
    RationalUniPoly d = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        const RationalUniPoly a = gcd(b, d);
        if (a.degree() > 0) out.push_back({RationalUniPoly::from_mpz(to_integer(a)), i});
        b = exact_div(b, a);
        c = exact_div(d, a);
        d = c - b.derivative();
    }
    return out;
}

Factorization factor_Q(const RationalUniPoly& p) {
    if (p.is_zero()) throw InputError("cannot factor the zero polynomial");
    Factorization out;
    if (p.degree() == 0) {
        out.unit = p.coeff(0);
        return out;
    }
    out.unit = p.content();
    for (const auto& part : squarefree_decomposition(p)) {
        Zv f = to_integer(part.factor);
        if (f[0] == 0) {
            out.factors.push_back({RationalUniPoly::from_integers({0, 1}), part.multiplicity});
            f.erase(f.begin());
        }
        if (f.size() < 2) continue;
        for (const auto& g : zassenhaus(f)) out.factors.push_back({RationalUniPoly::from_mpz(g), part.multiplicity});
    }
    std::sort(out.factors.begin(), out.factors.end(), factor_less);
    if (!(out.expand() == p)) throw InvariantViolation("factorization does not reconstruct " + p.to_string());
    return out;
}

bool is_irreducible_Q(const RationalUniPoly& p) {
    if (p.degree() < 1) return false;
    const Factorization f = factor_Q(p);
    return f.factors.size() == 1 && f.factors[0].multiplicity == 1;
}

}  // namespace hit
