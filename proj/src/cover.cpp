#include "hit/cover.hpp"

#include <numeric>

#include "hit/error.hpp"
#include "hit/group.hpp"

namespace hit {

namespace {

Permutation product(int degree, const std::vector<Permutation>& cycles) {
    Permutation p = Permutation::identity(degree);
    for (const auto& c : cycles) p = p * c;
    return p;
}

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long long ipow(long long b, long long e) {
    long long r = 1;
    for (long long i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace

BranchCycleDescription BranchCycleDescription::make(int degree, std::vector<Permutation> cycles,
                                                    std::optional<std::size_t> infinity_index,
                                                    const std::optional<PermGroup>& claimed) {
    if (degree < 1) throw InputError("branch data needs degree >= 1");
    for (const auto& c : cycles)
        if (c.degree() != degree)
            throw InputError("branch cycle " + c.to_string() + " has degree " + std::to_string(c.degree()) +
                             ", expected " + std::to_string(degree));
    if (!product(degree, cycles).is_identity()) throw InputError("branch cycles do not multiply to identity");
    if (infinity_index && *infinity_index >= cycles.size())
        throw InputError("infinity index " + std::to_string(*infinity_index) + " is out of range");
    BranchCycleDescription b;
    b.group = PermGroup(degree, cycles);
    if (!is_transitive(b.group)) throw InputError("branch cycles generate an intransitive group");
    if (claimed) {
        if (claimed->degree() != degree) throw InputError("claimed monodromy group has the wrong degree");
        if (!same_group(b.group, *claimed)) throw InputError("branch cycles do not generate the given group");
        b.group = *claimed;
    }
    b.cycles = std::move(cycles);
    b.infinity_index = infinity_index;
    return b;
}

BranchCycleDescription zm_minus_z(int m) {
    if (m < 2) throw InputError("Z^m - Z data needs m >= 2");
    std::vector<Permutation> cycles;
    for (int i = 0; i + 1 < m; ++i) cycles.push_back(Permutation::from_cycles(m, {{i, i + 1}}));
    cycles.push_back(product(m, cycles).inverse());
    const std::size_t inf = cycles.size() - 1;
    return BranchCycleDescription::make(m, std::move(cycles), inf);
}

int ind(const Permutation& p) { return p.degree() - p.num_cycles(); }

long long rh_genus(const BranchCycleDescription& b, const Action& action) {
    if (action.source_degree() != b.degree()) throw InputError("action degree does not match the branch data");
    if (!is_transitive(action.image(b.group))) throw InputError("induced action is not transitive");
    long long sum = 0;
    for (const auto& c : b.cycles) sum += ind(action.apply(c));
    const long long n = action.degree();
    if (sum % 2 != 0) throw InputError("inconsistent branch data: index sum " + std::to_string(sum) + " is odd");
    const long long g = sum / 2 - n + 1;
    if (g < 0) throw InputError("inconsistent branch data: negative genus " + std::to_string(g));
    return g;
}

long long rh_genus(const BranchCycleDescription& b) { return rh_genus(b, Action::natural(b.degree())); }

ScottReport scott_check(const std::vector<Permutation>& cycles, const Action& action) {
    const int src = action.source_degree();
    for (const auto& c : cycles)
        if (c.degree() != src) throw InputError("tuple degree does not match the action");
    if (!product(src, cycles).is_identity()) throw InputError("branch cycles do not multiply to identity");
    const auto imgs = action.apply_all(cycles);
    const long long n = action.degree();
    ScottReport r;
    r.lhs = 2 * (n - static_cast<long long>(orbits(static_cast<int>(n), imgs).size()));
    for (const auto& x : imgs) r.rhs += n - x.num_cycles();
    r.holds = r.lhs <= r.rhs;
    return r;
}

GenusComparison genus_compare(const BranchCycleDescription& b, const Action& e, const Action& f,
                              const CharacterTable* table, bool allow_table) {
    GenusComparison out;
    out.g_e = rh_genus(b, e);
    out.g_f = rh_genus(b, f);
    out.difference = difference_is_character(b.group, e, f, table, allow_table);
    for (std::size_t i = 0; i < b.cycles.size(); ++i)
        out.orbit_comparisons.push_back({i, e.apply(b.cycles[i]).num_cycles(), f.apply(b.cycles[i]).num_cycles()});
    if (out.difference.status == CharStatus::Character) {
        if (out.g_e > out.g_f)
            throw InvariantViolation("genus comparison violated: g_E = " + std::to_string(out.g_e) +
                                     " > g_F = " + std::to_string(out.g_f));
        for (const auto& oc : out.orbit_comparisons)
            if (oc.orbits_e > oc.orbits_f)
                throw InvariantViolation("orbit comparison violated at branch cycle " + std::to_string(oc.index));
    }
    return out;
}

PlacesAtInfinity places_above_infinity(const BranchCycleDescription& b, const Action& action) {
    if (!b.infinity_index) throw InputError("infinity index is not set");
    const Permutation s = action.apply(b.cycles[*b.infinity_index]);
    return {s.num_cycles(), s.cycle_type()};
}

PlacesAtInfinity places_above_infinity(const BranchCycleDescription& b) {
    return places_above_infinity(b, Action::natural(b.degree()));
}

WreathGenus wreath_genus_formula(long long n, long long p) {
    if (n < 2) throw InputError("wreath genus needs n >= 2");
    if (!is_prime(p)) throw InputError("wreath genus needs a prime p");
    if (p > 20 || n > 1000) throw InputError("wreath genus arguments too large");
    const long long np1 = ipow(n, p - 1);
    const long long num = (np1 - 1) * (n * p - n - p);
    if (num % p != 0) throw InvariantViolation("wreath genus numerator is not divisible by p");
    WreathGenus w;
    w.genus = num / p;
    w.ind_sigma = (np1 * n - n) / p * (p - 1);
    w.sum_ind_tau = 2 * np1 * (n - 1);
    return w;
}

BranchCycleDescription wreath_branch_data(int n, int p) {
    if (n < 2 || p < 2) throw InputError("wreath branch data needs n, p >= 2");
    const Action power = Action::cartesian_power(n, p);
    const int deg = power.degree();
    // Coordinate shift: (x_0, ..., x_{p-1}) -> (x_{p-1}, x_0, ..., x_{p-2}).
    std::vector<int> img(static_cast<std::size_t>(deg));
    std::vector<int> pw(static_cast<std::size_t>(p), 1);
    for (int j = 1; j < p; ++j) pw[static_cast<std::size_t>(j)] = pw[static_cast<std::size_t>(j - 1)] * n;
    for (int idx = 0; idx < deg; ++idx) {
        int rest = idx, out = 0;
        for (int j = 0; j < p; ++j) {
            out += (rest % n) * pw[static_cast<std::size_t>((j + 1) % p)];
            rest /= n;
        }
        img[static_cast<std::size_t>(idx)] = out;
    }
    const Permutation shift(img);
    std::vector<Permutation> cycles{shift, shift.inverse()};
    for (int j = 0; j + 1 < n; ++j) {
        // A transposition of S_n acting in coordinate 0 only.
        std::vector<int> t(static_cast<std::size_t>(deg));
        for (int idx = 0; idx < deg; ++idx) {
            const int x = idx % n;
            const int y = x == j ? j + 1 : x == j + 1 ? j : x;
            t[static_cast<std::size_t>(idx)] = idx - x + y;
        }
        const Permutation tau(t);
        cycles.push_back(tau);
        cycles.push_back(tau);
    }
    return BranchCycleDescription::make(deg, std::move(cycles), 0);
}

long long kset_genus_formula(int m, int k) {
    if (m < 2 || k < 1 || k >= m) throw InputError("k-set genus needs 1 <= k < m");
    long long c = 1;
    for (int i = 1; i <= k; ++i) c = c * (m - k + i) / i;
    const long long num = c * (static_cast<long long>(m) * k - static_cast<long long>(k) * k - m - 1);
    if (num % (2 * m) != 0) throw InputError("k-set genus formula is not integral for these m, k");
    return 1 + num / (2 * m);
}

std::vector<Permutation> random_product_one_tuple(const PermGroup& g, int r, std::mt19937_64& rng) {
    if (r < 1) throw InputError("tuple length must be positive");
    const int n = g.degree();
    auto random_element = [&]() {
        if (g.is_materialized() || g.order() <= limits().group_cap) {
            const auto& el = g.elements();
            return el[std::uniform_int_distribution<std::size_t>(0, el.size() - 1)(rng)];
        }
        Permutation x = Permutation::identity(n);
        const auto& gens = g.generators();
        if (gens.empty()) return x;
        for (int s = 0; s < 40; ++s) x = x * gens[std::uniform_int_distribution<std::size_t>(0, gens.size() - 1)(rng)];
        return x;
    };
    std::vector<Permutation> out;
    Permutation prod = Permutation::identity(n);
    for (int i = 0; i + 1 < r; ++i) {
        out.push_back(random_element());
        prod = prod * out.back();
    }
    out.push_back(prod.inverse());
    return out;
}

}  // namespace hit
