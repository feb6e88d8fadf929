#include <doctest.h>

#include <random>

#include "hit/action.hpp"
#include "hit/catalog.hpp"
#include "hit/cover.hpp"
#include "hit/error.hpp"
#include "hit/group.hpp"
#include "oracle.hpp"

using namespace hit;

namespace {

Permutation P(const char* s, int n) { return Permutation::parse(s, n); }

// Induced permutation on k-subsets computed without the library.
oracle::Img on_subsets(const oracle::Img& p, int k) {
    const int n = static_cast<int>(p.size());
    std::vector<std::vector<int>> subsets;
    std::vector<int> mask(static_cast<std::size_t>(n), 0);
    std::fill(mask.end() - k, mask.end(), 1);
    do {
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (mask[static_cast<std::size_t>(i)]) s.push_back(i);
        subsets.push_back(s);
    } while (std::next_permutation(mask.begin(), mask.end()));
    std::sort(subsets.begin(), subsets.end());
    oracle::Img out;
    for (const auto& s : subsets) {
        std::vector<int> t;
        for (int x : s) t.push_back(p[static_cast<std::size_t>(x)]);
        std::sort(t.begin(), t.end());
        out.push_back(static_cast<int>(std::lower_bound(subsets.begin(), subsets.end(), t) - subsets.begin()));
    }
    return out;
}

// Branch data made of a group's generators and the element closing them.
BranchCycleDescription generator_tuple(const PermGroup& g) {
    std::vector<Permutation> cycles = g.generators();
    Permutation p = Permutation::identity(g.degree());
    for (const auto& c : cycles) p = p * c;
    cycles.push_back(p.inverse());
    return BranchCycleDescription::make(g.degree(), cycles, cycles.size() - 1);
}

}  // namespace

TEST_CASE("ind") {
    CHECK(ind(Permutation::identity(4)) == 0);
    CHECK(ind(P("(0 1 2 3 4)", 5)) == 4);
    const Permutation t = P("(0 1)", 5);
    const oracle::Img sub = on_subsets(t.images(), 2);
    CHECK(10 - oracle::count_cycles(sub) == 3);
    CHECK(ind(Action::k_subsets(5, 2).apply(t)) == 3);
}

TEST_CASE("Riemann-Hurwitz genus") {
    BranchCycleDescription b = zm_minus_z(5);
    CHECK(b.cycles.size() == 5);
    CHECK(b.cycles.back().cycle_type() == std::vector<int>{5});
    CHECK(rh_genus(b) == 0);
    CHECK(rh_genus(b, Action::k_subsets(5, 2)) == 1);
    // The index sum on 2-subsets is 4*3 + 8 = 20.
    long long sum = 0;
    for (const auto& c : b.cycles) sum += 10 - oracle::count_cycles(on_subsets(c.images(), 2));
    CHECK(sum == 20);

    const Permutation s = P("(0 1 2 3 4 5)", 6);
    CHECK(rh_genus(BranchCycleDescription::make(6, {s, s.inverse()})) == 0);
}

TEST_CASE("branch data validation") {
    CHECK_THROWS_WITH_AS(BranchCycleDescription::make(3, {P("(0 1)", 3), P("(1 2)", 3)}),
                         "branch cycles do not multiply to identity", InputError);
    CHECK_THROWS_AS(BranchCycleDescription::make(3, {P("(0 1)", 3), P("(0 1)", 3)}), InputError);
    CHECK_THROWS_AS(BranchCycleDescription::make(3, {P("(0 1)", 3), P("(0 1)", 2)}), InputError);
    CHECK_THROWS_AS(BranchCycleDescription::make(3, {P("(0 1 2)", 3), P("(0 2 1)", 3)}, 5), InputError);
    const PermGroup c3 = named_group("C3");
    CHECK_NOTHROW(BranchCycleDescription::make(3, {P("(0 1 2)", 3), P("(0 2 1)", 3)}, 0, c3));
    CHECK_THROWS_AS(BranchCycleDescription::make(3, {P("(0 1 2)", 3), P("(0 2 1)", 3)}, 0, named_group("S3")),
                    InputError);
    // C4 has two orbits on the 2-subsets of 4 points.
    const Permutation c = P("(0 1 2 3)", 4);
    BranchCycleDescription cyc = BranchCycleDescription::make(4, {c, c.inverse()});
    CHECK_THROWS_WITH_AS(rh_genus(cyc, Action::k_subsets(4, 2)), "induced action is not transitive", InputError);
}

TEST_CASE("Scott inequality") {
    // Left to right, (0 1)(1 2) = (0 2 1), so the closing element is (0 1 2).
    ScottReport r = scott_check({P("(0 1)", 3), P("(1 2)", 3), P("(0 1 2)", 3)}, Action::natural(3));
    CHECK(r.lhs == 4);
    CHECK(r.rhs == 4);
    CHECK(r.holds);
    ScottReport id = scott_check({Permutation::identity(4)}, Action::natural(4));
    CHECK(id.lhs == 0);
    CHECK(id.rhs == 0);
    CHECK_THROWS_AS(scott_check({P("(0 1)", 3)}, Action::natural(3)), InputError);

    std::mt19937_64 rng(11);
    int checked = 0;
    for (const auto& gid : catalog_ids()) {
        PermGroup g = named_group(gid);
        if (g.degree() < 2) continue;
        for (int trial = 0; trial < 20; ++trial) {
            const int r = 2 + static_cast<int>(rng() % 4);
            auto tuple = random_product_one_tuple(g, r, rng);
            CHECK(scott_check(tuple, Action::natural(g.degree())).holds);
            if (g.degree() >= 4 && g.degree() <= 9) CHECK(scott_check(tuple, Action::k_subsets(g.degree(), 2)).holds);
            ++checked;
        }
    }
    CHECK(checked > 500);
}

TEST_CASE("genus comparison") {
    BranchCycleDescription b = zm_minus_z(5);
    GenusComparison c = genus_compare(b, Action::natural(5), Action::k_subsets(5, 2));
    CHECK(c.g_e == 0);
    CHECK(c.g_f == 1);
    CHECK(c.difference.status == CharStatus::Character);
    CHECK(c.orbit_comparisons.back().orbits_e == 1);
    CHECK(c.orbit_comparisons.back().orbits_f == 2);

    GenusComparison same = genus_compare(b, Action::natural(5), Action::natural(5));
    CHECK(same.g_e == same.g_f);
    CHECK(same.difference.status == CharStatus::Character);
    for (const auto& m : same.difference.multiplicities) CHECK(m == 0);
}

TEST_CASE("places above infinity") {
    BranchCycleDescription b = zm_minus_z(6);
    PlacesAtInfinity p = places_above_infinity(b);
    CHECK(p.count == 1);
    CHECK(p.lengths == std::vector<int>{6});

    const Permutation two = P("(0 1 2)(3 4 5)", 6);
    const Permutation link = P("(2 3)", 6);
    BranchCycleDescription t = BranchCycleDescription::make(6, {two, link, (two * link).inverse()}, 0);
    CHECK(places_above_infinity(t).count == 2);
    CHECK(places_above_infinity(t).lengths == std::vector<int>{3, 3});

    BranchCycleDescription u =
        BranchCycleDescription::make(3, {Permutation::identity(3), P("(0 1 2)", 3), P("(0 2 1)", 3)}, 0);
    CHECK(places_above_infinity(u).count == 3);
    BranchCycleDescription none = BranchCycleDescription::make(3, {P("(0 1 2)", 3), P("(0 2 1)", 3)});
    CHECK_THROWS_AS(places_above_infinity(none), InputError);
}

TEST_CASE("wreath genus") {
    CHECK(wreath_genus_formula(3, 3).genus == 8);
    CHECK(wreath_genus_formula(3, 3).ind_sigma == 16);
    CHECK(wreath_genus_formula(3, 3).sum_ind_tau == 36);
    CHECK(wreath_genus_formula(2, 3).genus == 1);
    CHECK(wreath_genus_formula(3, 2).genus == 1);
    CHECK_THROWS_AS(wreath_genus_formula(1, 3), InputError);
    CHECK_THROWS_AS(wreath_genus_formula(3, 4), InputError);

    for (int n = 2; n <= 4; ++n)
        for (int p : {2, 3, 5}) {
            INFO(n << " " << p);
            WreathGenus w = wreath_genus_formula(n, p);
            BranchCycleDescription b = wreath_branch_data(n, p);
            CHECK(ind(b.cycles[0]) == w.ind_sigma);
            CHECK(ind(b.cycles[1]) == w.ind_sigma);
            long long tau = 0;
            for (std::size_t i = 2; i < b.cycles.size(); ++i) tau += ind(b.cycles[i]);
            CHECK(tau == w.sum_ind_tau);
            CHECK(rh_genus(b) == w.genus);
            if (p % 2 == 1) CHECK(w.genus > 0);
        }
}

TEST_CASE("k-set genus formula") {
    CHECK(kset_genus_formula(5, 2) == 1);
    for (int m : {5, 7}) {
        BranchCycleDescription b = zm_minus_z(m);
        for (int k = 2; k <= m - 2; ++k) {
            INFO(m << " " << k);
            CHECK(rh_genus(b, Action::k_subsets(m, k)) == kset_genus_formula(m, k));
            // Direct count of the index sum without the library's action.
            long long sum = 0;
            const long long deg = oracle::binom(m, k);
            for (const auto& c : b.cycles) sum += deg - oracle::count_cycles(on_subsets(c.images(), k));
            CHECK(sum / 2 - deg + 1 == kset_genus_formula(m, k));
        }
    }
}

TEST_CASE("genus comparison property across the catalog") {
    int certified = 0;
    for (const auto& gid : catalog_ids()) {
        PermGroup g = named_group(gid);
        if (g.degree() < 4 || g.order() > 20000 || !is_transitive(g)) continue;
        INFO(gid.to_string());
        BranchCycleDescription b = generator_tuple(g);
        if (!is_transitive(Action::k_subsets(g.degree(), 2).image(g))) continue;
        GenusComparison c = genus_compare(b, Action::natural(g.degree()), Action::k_subsets(g.degree(), 2));
        if (c.difference.status == CharStatus::Character) {
            ++certified;
            CHECK(c.g_e <= c.g_f);
            for (const auto& oc : c.orbit_comparisons) CHECK(oc.orbits_e <= oc.orbits_f);
        }
    }
    CHECK(certified > 5);
}
