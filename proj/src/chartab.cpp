#include "hit/chartab.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "hit/error.hpp"
#include "hit/group.hpp"

namespace hit {

// --- class data --------------------------------------------------------------

std::size_t ClassData::class_of(const Permutation& p) const {
    const std::size_t idx = group.elements().find(p);
    if (idx == ElementSet::npos) throw InputError("permutation " + p.to_string() + " is not in the group");
    return group.classes().class_of[idx];
}

std::size_t ClassData::power_class(std::size_t i, long long k) const { return class_of(reps[i].pow(k)); }

ClassData conjugacy_classes(const PermGroup& g) {
    ClassData cd;
    cd.group = g;
    const ElementSet& el = g.elements();
    const ConjugacyClasses& cc = g.classes();
    cd.order = el.size();
    for (std::size_t i = 0; i < cc.reps.size(); ++i) {
        cd.reps.push_back(el[cc.reps[i]]);
        cd.sizes.push_back(cc.sizes[i]);
        cd.rep_orders.push_back(el[cc.reps[i]].order());
        cd.exponent = std::lcm(cd.exponent, cd.rep_orders.back());
    }
    for (const auto& r : cd.reps) cd.inverse.push_back(cd.class_of(r.inverse()));
    return cd;
}

// --- class functions ---------------------------------------------------------

namespace {

void check_len(const ClassFunction& a, const ClassFunction& b) {
    if (a.values.size() != b.values.size())
        throw InputError("class functions belong to different class data");
}

}  // namespace

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
    check_len(a, b);
    ClassFunction r = a;
    for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] += b.values[i];
    return r;
}

ClassFunction operator-(const ClassFunction& a, const ClassFunction& b) {
    check_len(a, b);
    ClassFunction r = a;
    for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] -= b.values[i];
    return r;
}

ClassFunction operator*(long long c, const ClassFunction& a) {
    ClassFunction r = a;
    for (auto& v : r.values) v *= c;
    return r;
}

ClassFunction principal_character(const ClassData& cd) { return {std::vector<long long>(cd.num_classes(), 1)}; }

ClassFunction permutation_character(const ClassData& cd, const Action& action) {
    if (action.source_degree() != cd.group.degree())
        throw InputError("action degree does not match the group degree");
    ClassFunction f;
    for (const auto& r : cd.reps) f.values.push_back(action.apply(r).num_fixed_points());
    return f;
}

ClassFunction permutation_character(const ClassData& cd) {
    return permutation_character(cd, Action::natural(cd.group.degree()));
}

mpq_class inner_product(const ClassData& cd, const ClassFunction& a, const ClassFunction& b) {
    if (a.values.size() != cd.num_classes() || b.values.size() != cd.num_classes())
        throw InputError("class function length does not match the class data");
    mpz_class sum = 0;
    for (std::size_t i = 0; i < cd.num_classes(); ++i)
        sum += mpz_class(static_cast<unsigned long>(cd.sizes[i])) * static_cast<long>(a.values[i]) * static_cast<long>(b.values[i]);
    mpq_class r(sum, mpz_class(static_cast<unsigned long>(cd.order)));
    r.canonicalize();
    return r;
}

// --- cyclotomics -------------------------------------------------------------

namespace {

std::vector<long long> exact_divide(std::vector<long long> num, const std::vector<long long>& den) {
    // den is monic.
    const std::size_t dd = den.size() - 1;
    std::vector<long long> q(num.size() - dd, 0);
    for (std::size_t k = num.size(); k-- > dd;) {
        const long long c = num[k];
        q[k - dd] = c;
        if (c == 0) continue;
        for (std::size_t t = 0; t <= dd; ++t) num[k - dd + t] -= c * den[t];
    }
    for (long long r : num)
        if (r != 0) throw InvariantViolation("cyclotomic polynomial division left a remainder");
    return q;
}

Cyclotomic lift_to(const Cyclotomic& x, int e) {
    const int b = x.base();
    if (b == e) return x;
    const int step = e / b;
    const auto& c = x.coefficients();
    Cyclotomic out(e, 0);
    for (int a = 0; a < b; ++a)
        if (c[static_cast<std::size_t>(a)] != 0) out += c[static_cast<std::size_t>(a)] * Cyclotomic::zeta_power(e, a * step);
    return out;
}

int common_base(const Cyclotomic& a, const Cyclotomic& b) { return std::lcm(a.base(), b.base()); }

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(int e) {
    if (e < 1) throw InputError("cyclotomic polynomial needs e >= 1");
    static std::mutex mu;
    static std::map<int, std::vector<long long>> memo;
    {
        std::lock_guard lock(mu);
        auto it = memo.find(e);
        if (it != memo.end()) return it->second;
    }
    std::vector<long long> p(static_cast<std::size_t>(e) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(e)] = 1;
    for (int d = 1; d < e; ++d)
        if (e % d == 0) p = exact_divide(p, cyclotomic_polynomial(d));
    std::lock_guard lock(mu);
    return memo.emplace(e, std::move(p)).first->second;
}

Cyclotomic::Cyclotomic(int e, long long value) {
    if (e < 1) throw InputError("cyclotomic base must be positive");
    c_.assign(static_cast<std::size_t>(e), 0);
    c_[0] = value;
}

Cyclotomic Cyclotomic::zeta_power(int e, long long a) {
    Cyclotomic z(e, 0);
    const long long r = ((a % e) + e) % e;
    z.c_[static_cast<std::size_t>(r)] = 1;
    return z;
}

Cyclotomic Cyclotomic::conj() const {
    const int e = base();
    Cyclotomic r(e, 0);
    for (int a = 0; a < e; ++a) r.c_[static_cast<std::size_t>((e - a) % e)] = c_[static_cast<std::size_t>(a)];
    return r;
}

std::vector<long long> Cyclotomic::reduced() const {
    const auto& phi = cyclotomic_polynomial(base());
    const std::size_t deg = phi.size() - 1;
    std::vector<long long> r = c_;
    for (std::size_t k = r.size(); k-- > deg;) {
        const long long c = r[k];
        if (c == 0) continue;
        for (std::size_t t = 0; t <= deg; ++t) r[k - deg + t] -= c * phi[t];
    }
    r.resize(deg);
    return r;
}

std::optional<long long> Cyclotomic::as_integer() const {
    auto r = reduced();
    for (std::size_t i = 1; i < r.size(); ++i)
        if (r[i] != 0) return std::nullopt;
    return r[0];
}

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> z = 0;
    const double e = base();
    for (int a = 0; a < base(); ++a)
        if (c_[static_cast<std::size_t>(a)] != 0)
            z += static_cast<double>(c_[static_cast<std::size_t>(a)]) * std::polar(1.0, 2.0 * M_PI * a / e);
    return z;
}

std::string Cyclotomic::to_string() const {
    if (auto v = as_integer()) return std::to_string(*v);
    auto r = reduced();
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < r.size(); ++i) {
        const long long c = r[i];
        if (c == 0) continue;
        if (c < 0)
            os << '-';
        else if (!first)
            os << '+';
        first = false;
        const long long a = c < 0 ? -c : c;
        if (i == 0) {
            os << a;
            continue;
        }
        if (a != 1) os << a << '*';
        os << "E(" << base() << ')';
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    const int e = common_base(*this, o);
    if (base() != e) *this = lift_to(*this, e);
    const Cyclotomic other = lift_to(o, e);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += other.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += (-1) * o; }

Cyclotomic operator*(const Cyclotomic& x, const Cyclotomic& y) {
    const int e = common_base(x, y);
    const Cyclotomic a = lift_to(x, e), b = lift_to(y, e);
    std::vector<int> nz;
    for (int j = 0; j < e; ++j)
        if (b.c_[static_cast<std::size_t>(j)] != 0) nz.push_back(j);
    Cyclotomic r(e, 0);
    for (int i = 0; i < e; ++i) {
        const long long ai = a.c_[static_cast<std::size_t>(i)];
        if (ai == 0) continue;
        for (int j : nz) r.c_[static_cast<std::size_t>((i + j) % e)] += ai * b.c_[static_cast<std::size_t>(j)];
    }
    return r;
}

Cyclotomic operator*(long long k, const Cyclotomic& a) {
    Cyclotomic r = a;
    for (auto& c : r.c_) c *= k;
    return r;
}

bool operator==(const Cyclotomic& x, const Cyclotomic& y) {
    const int e = common_base(x, y);
    return lift_to(x, e).reduced() == lift_to(y, e).reduced();
}

// --- Dixon-Burnside ----------------------------------------------------------

namespace {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;

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

u64 invmod(u64 a, u64 p) {
    if (a % p == 0) throw InvariantViolation("inverting zero modulo p");
    return powmod(a, p - 2, p);
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

u64 primitive_root_mod(u64 p) {
    std::vector<u64> factors;
    u64 m = p - 1;
    for (u64 d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) factors.push_back(m);
    for (u64 g = 2; g < p; ++g) {
        bool ok = true;
        for (u64 f : factors)
            if (powmod(g, (p - 1) / f, p) == 1) ok = false;
        if (ok) return g;
    }
    throw InvariantViolation("no primitive root modulo p");
}

// Characteristic polynomial via reduction to upper Hessenberg form.
// Coefficients lowest degree first, monic.
Vec charpoly(Mat h, u64 p) {
    const std::size_t n = h.size();
    for (std::size_t c = 0; c + 2 < n; ++c) {
        std::size_t r = c + 1;
        while (r < n && h[r][c] == 0) ++r;
        if (r == n) continue;
        if (r != c + 1) {
            std::swap(h[r], h[c + 1]);
            for (auto& row : h) std::swap(row[r], row[c + 1]);
        }
        const u64 inv = invmod(h[c + 1][c], p);
        for (std::size_t i = c + 2; i < n; ++i) {
            if (h[i][c] == 0) continue;
            const u64 u = h[i][c] * inv % p;
            for (std::size_t t = 0; t < n; ++t) h[i][t] = (h[i][t] + p - u * h[c + 1][t] % p) % p;
            for (std::size_t t = 0; t < n; ++t) h[t][c + 1] = (h[t][c + 1] + u * h[t][i]) % p;
        }
    }
    std::vector<Vec> polys(n + 1);
    polys[0] = {1};
    for (std::size_t m = 0; m < n; ++m) {
        // (x - h[m][m]) * polys[m]
        Vec next(m + 2, 0);
        for (std::size_t t = 0; t <= m; ++t) {
            next[t + 1] = (next[t + 1] + polys[m][t]) % p;
            next[t] = (next[t] + p - h[m][m] * polys[m][t] % p) % p;
        }
        u64 prod = 1;
        for (std::size_t i = m; i-- > 0;) {
            prod = prod * h[i + 1][i] % p;
            if (prod == 0) break;
            const u64 coef = h[i][m] * prod % p;
            for (std::size_t t = 0; t < polys[i].size(); ++t)
                next[t] = (next[t] + p - coef * polys[i][t] % p) % p;
        }
        polys[m + 1] = std::move(next);
    }
    return polys[n];
}

std::vector<u64> roots_mod(const Vec& poly, u64 p) {
    std::vector<u64> out;
    for (u64 x = 0; x < p; ++x) {
        u64 v = 0;
        for (std::size_t k = poly.size(); k-- > 0;) v = (v * x + poly[k]) % p;
        if (v == 0) out.push_back(x);
    }
    return out;
}

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(Mat& a, u64 p) {
    std::vector<std::size_t> pivots;
    if (a.empty()) return pivots;
    const std::size_t cols = a[0].size();
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
        std::size_t r = row;
        while (r < a.size() && a[r][c] == 0) ++r;
        if (r == a.size()) continue;
        std::swap(a[r], a[row]);
        const u64 inv = invmod(a[row][c], p);
        for (auto& x : a[row]) x = x * inv % p;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == row || a[i][c] == 0) continue;
            const u64 u = a[i][c];
            for (std::size_t t = 0; t < cols; ++t) a[i][t] = (a[i][t] + p - u * a[row][t] % p) % p;
        }
        pivots.push_back(c);
        ++row;
    }
    a.resize(row);
    return pivots;
}

Mat kernel(Mat a, u64 p) {
    const std::size_t n = a[0].size();
    auto piv = rref(a, p);
    std::vector<char> is_pivot(n, 0);
    for (auto c : piv) is_pivot[c] = 1;
    Mat out;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vec v(n, 0);
        v[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = (p - a[r][f]) % p;
        out.push_back(std::move(v));
    }
    return out;
}

struct Space {
    Mat basis;
    std::vector<std::size_t> pivots;
};

// Structure constants c_{ijk}: number of x in C_i with x^-1 g_k in C_j.
// Stored as m[j][i][k] mod p, so that m[j] has the central character
// values as a right eigenvector.
std::vector<Mat> structure_matrices(const ClassData& cd, u64 p) {
    const std::size_t k = cd.num_classes();
    const ElementSet& el = cd.group.elements();
    const auto& class_of = cd.group.classes().class_of;
    std::vector<std::size_t> inv_idx(el.size());
    for (std::size_t x = 0; x < el.size(); ++x) inv_idx[x] = el.find(el[x].inverse());
    std::vector<std::vector<std::vector<u64>>> m(k, Mat(k, Vec(k, 0)));
    for (std::size_t kk = 0; kk < k; ++kk) {
        const Permutation& g = cd.reps[kk];
        for (std::size_t x = 0; x < el.size(); ++x) {
            const std::size_t i = class_of[x];
            const std::size_t j = class_of[el.find(el[inv_idx[x]] * g)];
            m[j][i][kk] += 1;
        }
    }
    for (auto& mj : m)
        for (auto& row : mj)
            for (auto& v : row) v %= p;
    return m;
}

std::vector<Vec> central_characters(const std::vector<Mat>& m, std::size_t k, u64 p) {
    Space whole;
    for (std::size_t i = 0; i < k; ++i) {
        Vec v(k, 0);
        v[i] = 1;
        whole.basis.push_back(v);
        whole.pivots.push_back(i);
    }
    std::vector<Space> spaces{whole};
    for (std::size_t j = 1; j < k; ++j) {
        std::vector<Space> next;
        for (auto& s : spaces) {
            const std::size_t dim = s.basis.size();
            if (dim == 1) {
                next.push_back(std::move(s));
                continue;
            }
            Mat r(dim, Vec(dim, 0));
            for (std::size_t col = 0; col < dim; ++col) {
                Vec u(k, 0);
                for (std::size_t i = 0; i < k; ++i) {
                    u64 acc = 0;
                    for (std::size_t t = 0; t < k; ++t) acc = (acc + m[j][i][t] * s.basis[col][t]) % p;
                    u[i] = acc;
                }
                for (std::size_t row = 0; row < dim; ++row) r[row][col] = u[s.pivots[row]];
            }
            auto lambdas = roots_mod(charpoly(r, p), p);
            if (lambdas.size() == 1) {
                next.push_back(std::move(s));
                continue;
            }
            std::size_t total = 0;
            for (u64 lam : lambdas) {
                Mat shifted = r;
                for (std::size_t i = 0; i < dim; ++i) shifted[i][i] = (shifted[i][i] + p - lam) % p;
                Space sub;
                for (const auto& x : kernel(shifted, p)) {
                    Vec v(k, 0);
                    for (std::size_t c = 0; c < dim; ++c)
                        for (std::size_t t = 0; t < k; ++t) v[t] = (v[t] + x[c] * s.basis[c][t]) % p;
                    sub.basis.push_back(std::move(v));
                }
                sub.pivots = rref(sub.basis, p);
                total += sub.basis.size();
                next.push_back(std::move(sub));
            }
            if (total != dim) throw InvariantViolation("class algebra is not diagonalizable over GF(p)");
        }
        spaces = std::move(next);
    }
    std::vector<Vec> out;
    for (auto& s : spaces) {
        if (s.basis.size() != 1) throw InvariantViolation("central characters were not separated");
        Vec v = s.basis[0];
        const u64 inv = invmod(v[0], p);
        for (auto& x : v) x = x * inv % p;
        out.push_back(std::move(v));
    }
    return out;
}

void verify_table(const CharacterTable& t) {
    const ClassData& cd = t.classes;
    const std::size_t k = cd.num_classes();
    const int e = static_cast<int>(cd.exponent);
    if (t.rows.size() != k) throw InvariantViolation("character table is not square");
    u64 sum_sq = 0;
    for (u64 d : t.degrees) sum_sq += d * d;
    if (sum_sq != cd.order) throw InvariantViolation("sum of squared degrees differs from the group order");
    auto pair_sum = [&](auto value_a, auto value_b, auto weight, std::size_t n) {
        Cyclotomic acc(e, 0);
        for (std::size_t i = 0; i < n; ++i) acc += static_cast<long long>(weight(i)) * (value_a(i) * value_b(i).conj());
        return acc.as_integer();
    };
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a; b < k; ++b) {
            auto v = pair_sum([&](std::size_t i) { return t.rows[a][i]; }, [&](std::size_t i) { return t.rows[b][i]; },
                              [&](std::size_t i) { return cd.sizes[i]; }, k);
            const long long want = a == b ? static_cast<long long>(cd.order) : 0;
            if (!v || *v != want) throw InvariantViolation("row orthogonality failed");
        }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
            auto v = pair_sum([&](std::size_t r) { return t.rows[r][i]; }, [&](std::size_t r) { return t.rows[r][j]; },
                              [](std::size_t) { return 1; }, k);
            const long long want = i == j ? static_cast<long long>(cd.order / cd.sizes[i]) : 0;
            if (!v || *v != want) throw InvariantViolation("column orthogonality failed");
        }
}

CharacterTable compute_table(const PermGroup& g) {
    if (g.order() > limits().table_cap)
        throw CapExceeded("group order " + std::to_string(g.order()) + " exceeds the character table cap");
    CharacterTable t;
    t.classes = conjugacy_classes(g);
    const ClassData& cd = t.classes;
    const std::size_t k = cd.num_classes();
    if (k > limits().table_classes)
        throw CapExceeded(std::to_string(k) + " classes exceed the character table cap");
    if (!cd.reps[0].is_identity()) throw InvariantViolation("first class is not the identity class");

    const u64 e = cd.exponent;
    u64 p = e + 1;
    while (!(p * p > 4 * cd.order && is_prime_u64(p))) p += e;
    t.prime = p;
    const u64 w = powmod(primitive_root_mod(p), (p - 1) / e, p);

    auto omegas = central_characters(structure_matrices(cd, p), k, p);

    // Powers of each class representative, for the eigenvalue lift.
    std::vector<std::vector<std::size_t>> powers(k);
    for (std::size_t i = 0; i < k; ++i)
        for (u64 l = 0; l < cd.rep_orders[i]; ++l) powers[i].push_back(cd.power_class(i, static_cast<long long>(l)));

    const u64 bound = static_cast<u64>(std::sqrt(static_cast<double>(cd.order))) + 1;
    for (const auto& om : omegas) {
        u64 s = 0;
        for (std::size_t i = 0; i < k; ++i)
            s = (s + om[i] * om[cd.inverse[i]] % p * invmod(cd.sizes[i] % p, p)) % p;
        const u64 d2 = cd.order % p * invmod(s, p) % p;
        u64 d = 0;
        for (u64 c = 1; c <= bound && d == 0; ++c)
            if (c * c % p == d2) d = c;
        if (d == 0) throw InvariantViolation("no character degree matches the central character");
        Vec chi(k);
        for (std::size_t i = 0; i < k; ++i) chi[i] = om[i] * d % p * invmod(cd.sizes[i] % p, p) % p;

        std::vector<Cyclotomic> row;
        for (std::size_t i = 0; i < k; ++i) {
            const u64 o = cd.rep_orders[i];
            const u64 step = e / o;
            const u64 inv_o = invmod(o % p, p);
            Cyclotomic value(static_cast<int>(e), 0);
            u64 total = 0, check = 0;
            for (u64 a = 0; a < o; ++a) {
                u64 acc = 0;
                for (u64 l = 0; l < o; ++l) {
                    const u64 expo = (e - (step * a * l) % e) % e;
                    acc = (acc + chi[powers[i][l]] * powmod(w, expo, p)) % p;
                }
                const u64 mult = acc * inv_o % p;
                if (mult > d) throw InvariantViolation("eigenvalue multiplicity out of range");
                total += mult;
                check = (check + mult * powmod(w, step * a, p)) % p;
                if (mult) value += static_cast<long long>(mult) * Cyclotomic::zeta_power(static_cast<int>(e), static_cast<long long>(step * a));
            }
            if (total != d || check != chi[i]) throw InvariantViolation("lifted character value is inconsistent");
            row.push_back(std::move(value));
        }
        t.rows.push_back(std::move(row));
        t.degrees.push_back(d);
    }

    // Trivial character first, then by degree and values.
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::vector<std::vector<long long>>> keys(k);
    std::vector<bool> trivial(k);
    for (std::size_t r = 0; r < k; ++r) {
        bool triv = true;
        for (const auto& v : t.rows[r]) {
            keys[r].push_back(v.reduced());
            if (v.as_integer() != 1) triv = false;
        }
        trivial[r] = triv;
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (trivial[a] != trivial[b]) return static_cast<bool>(trivial[a]);
        if (t.degrees[a] != t.degrees[b]) return t.degrees[a] < t.degrees[b];
        return keys[a] > keys[b];
    });
    CharacterTable sorted;
    sorted.classes = t.classes;
    sorted.prime = t.prime;
    for (auto r : order) {
        sorted.rows.push_back(t.rows[r]);
        sorted.degrees.push_back(t.degrees[r]);
    }
    verify_table(sorted);
    return sorted;
}

std::string group_key(const PermGroup& g) {
    std::string key = std::to_string(g.degree());
    for (const auto& x : g.generators()) key += ";" + x.to_string();
    return key;
}

}  // namespace

CharacterTable character_table(const PermGroup& g) {
    static std::mutex mu;
    static std::map<std::string, std::shared_ptr<const CharacterTable>> cache;
    const std::string key = group_key(g);
    {
        std::lock_guard lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return *it->second;
    }
    auto t = std::make_shared<const CharacterTable>(compute_table(g));
    std::lock_guard lock(mu);
    cache.emplace(key, t);
    return *t;
}

// --- character tests ---------------------------------------------------------

const char* to_string(CharStatus s) {
    switch (s) {
        case CharStatus::Character: return "character";
        case CharStatus::NotCharacter: return "not a character";
        case CharStatus::Undecided: return "undecided";
    }
    return "?";
}

CharacterCheck is_character(const ClassFunction& f, const CharacterTable& table) {
    const ClassData& cd = table.classes;
    if (f.values.size() != cd.num_classes()) throw InputError("class function length does not match the table");
    CharacterCheck out;
    out.method = "table";
    out.status = CharStatus::Character;
    const int e = static_cast<int>(cd.exponent);
    for (const auto& row : table.rows) {
        Cyclotomic acc(e, 0);
        for (std::size_t i = 0; i < cd.num_classes(); ++i)
            acc += static_cast<long long>(cd.sizes[i]) * f.values[i] * row[i].conj();
        auto v = acc.as_integer();
        if (!v) throw InvariantViolation("inner product of an integer class function is irrational");
        mpq_class m(mpz_class(static_cast<long>(*v)), mpz_class(static_cast<unsigned long>(cd.order)));
        m.canonicalize();
        if (m.get_den() != 1 || m < 0) out.status = CharStatus::NotCharacter;
        out.multiplicities.push_back(m);
    }
    return out;
}

CharacterCheck difference_is_character(const PermGroup& g, const Action& e, const Action& f,
                                       const CharacterTable* table, bool allow_table) {
    if (e.source_degree() != g.degree() || f.source_degree() != g.degree())
        throw InputError("action degree does not match the group degree");
    std::optional<CharacterTable> own;
    if (!table && allow_table && g.order() <= limits().table_cap) {
        try {
            own = character_table(g);
            table = &*own;
        } catch (const CapExceeded&) {
        }
    }
    if (table) {
        const ClassData& cd = table->classes;
        return is_character(permutation_character(cd, f) - permutation_character(cd, e), *table);
    }
    CharacterCheck out;
    const PermGroup ge = e.image(g), gf = f.image(g);
    if (is_transitive(ge) && is_transitive(gf) && is_2transitive(ge)) {
        out.method = "2-transitive";
        out.status = orbits_on_product(e.apply_all(g.generators()), f.apply_all(g.generators())) >= 2
                         ? CharStatus::Character
                         : CharStatus::NotCharacter;
        return out;
    }
    out.method = "undecided-general";
    return out;
}

}  // namespace hit
