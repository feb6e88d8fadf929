#include <doctest.h>

#include <random>

#include "hit/catalog.hpp"
#include "hit/error.hpp"
#include "hit/group.hpp"
#include "hit/ratfun.hpp"

using namespace hit;

namespace {

RationalFunction R(const char* s) { return RationalFunction::parse(s); }

Permutation P(const char* s, int n) { return Permutation::parse(s, n); }

}  // namespace

TEST_CASE("rational function normalization") {
    RationalFunction g = R("(Z^2 - 1)/(2*Z - 2)");
    CHECK(g.numerator() == parse_univariate("Z/2 + 1/2", "Z"));
    CHECK(g.denominator() == parse_univariate("1", "Z"));
    CHECK(g.degree() == 1);
    CHECK(R("1/(Z^2 - 2)").degree() == 2);
    CHECK(R("3").is_constant());
    CHECK_THROWS_AS(R("Z/(Z - Z)"), InputError);
    CHECK_THROWS_AS(R("X + 1"), InputError);
    CHECK(R("(Z^2+1)/Z").to_string() == "(Z^2 + 1) / (Z)");
}

TEST_CASE("fiber profiles") {
    // h(Z)/(Z^2 - d)^m with deg h <= 2m: two conjugate poles of multiplicity m.
    FiberProfile a = fiber_profile(R("(Z^3 + 1)/(Z^2 - 2)^2"), std::nullopt);
    REQUIRE(a.points.size() == 1);
    CHECK(a.points[0].field_degree == 2);
    CHECK(a.points[0].multiplicity == 2);
    CHECK(a.points[0].real());
    CHECK(a.geometric_count() == 2);

    FiberProfile b = fiber_profile(R("Z^3"), std::nullopt);
    REQUIRE(b.points.size() == 1);
    CHECK(b.points[0].at_infinity);
    CHECK(b.points[0].multiplicity == 3);

    FiberProfile c = fiber_profile(R("(Z^2+1)/Z"), std::nullopt);
    CHECK(c.points.size() == 2);
    CHECK(c.geometric_count() == 2);

    FiberProfile d = fiber_profile(R("Z^3 - 3*Z"), mpq_class(2));
    CHECK(d.points.size() == 2);
    CHECK(d.total_multiplicity() == 3);

    // g(infinity) = 1 for (Z^2 + Z)/(Z^2 + 1): the fiber over 1 contains infinity.
    FiberProfile e = fiber_profile(R("(Z^2 + Z)/(Z^2 + 1)"), mpq_class(1));
    bool has_inf = false;
    for (const auto& p : e.points) has_inf = has_inf || p.at_infinity;
    CHECK(has_inf);
    CHECK(e.total_multiplicity() == 2);

    CHECK_THROWS_AS(fiber_profile(R("5"), std::nullopt), InputError);
}

TEST_CASE("fiber multiplicities sum to the degree") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> c(-4, 4);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<long long> n(1 + rng() % 5), d(1 + rng() % 5);
        for (auto& x : n) x = c(rng);
        for (auto& x : d) x = c(rng);
        d.back() = 1;
        RationalUniPoly num = RationalUniPoly::from_integers(n), den = RationalUniPoly::from_integers(d);
        if (num.is_zero()) continue;
        RationalFunction g(num, den);
        if (g.is_constant()) continue;
        for (int v = -2; v <= 2; ++v) {
            CHECK(fiber_profile(g, mpq_class(v)).total_multiplicity() == g.degree());
            std::vector<int> t = inertia_cycle_type_at(g, mpq_class(v));
            CHECK(std::accumulate(t.begin(), t.end(), 0) == g.degree());
        }
        std::vector<int> inf = inertia_cycle_type_at(g, std::nullopt);
        CHECK(std::accumulate(inf.begin(), inf.end(), 0) == g.degree());
        CHECK((inf.size() <= 2) == (fiber_profile(g, std::nullopt).geometric_count() <= 2));
    }
}

TEST_CASE("Siegel admissibility") {
    CHECK(siegel_admissible(R("1/(Z^2 - 2)"), FieldFlag::Q).admissible);
    CHECK(!siegel_admissible(R("1/(Z^2 + 1)"), FieldFlag::Q).admissible);
    CHECK(siegel_admissible(R("1/(Z^2 + 1)"), FieldFlag::General).admissible);
    CHECK(siegel_admissible(R("Z^5 - Z"), FieldFlag::Q).admissible);
    CHECK(!siegel_admissible(R("(Z^2+1)/Z"), FieldFlag::Q).admissible);
    CHECK(!siegel_admissible(R("1/(Z*(Z-1))"), FieldFlag::Q).admissible);
    CHECK(!siegel_admissible(R("1/(Z^3 - 2)"), FieldFlag::General).admissible);
    CHECK(siegel_admissible(R("(Z^2 + 1)/(Z^2 - 1)^0"), FieldFlag::Q).admissible);
}

TEST_CASE("inertia cycle types") {
    CHECK(inertia_cycle_type_at(R("(Z + 1)/(Z^2 - 3)^2"), std::nullopt) == std::vector<int>{2, 2});
    CHECK(inertia_cycle_type_at(R("Z^4"), std::nullopt) == std::vector<int>{4});
    CHECK(inertia_cycle_type_at(R("Z^3 - 3*Z"), mpq_class(2)) == std::vector<int>{2, 1});
    CHECK(inertia_cycle_type_at(R("Z^3"), mpq_class(0)) == std::vector<int>{3});
    CHECK(inertia_cycle_type_at(R("Z^3"), mpq_class(1)) == std::vector<int>{1, 1, 1});
}

TEST_CASE("Sturm real root count") {
    CHECK(count_real_roots(parse_univariate("X^2 - 2")) == 2);
    CHECK(count_real_roots(parse_univariate("X^2 + 1")) == 0);
    CHECK(count_real_roots(parse_univariate("X^3 - 2")) == 1);
    CHECK(count_real_roots(parse_univariate("(X-1)*(X-2)*(X-3)*(X^2+1)")) == 3);
    CHECK(count_real_roots(parse_univariate("X^5 - X - 1")) == 1);
}

TEST_CASE("square roots in cyclotomic fields") {
    CHECK(sqrt_in_cyclotomic(5, 5));
    CHECK(sqrt_in_cyclotomic(2, 8));
    CHECK(!sqrt_in_cyclotomic(2, 5));
    CHECK(sqrt_in_cyclotomic(-1, 4));
    CHECK(!sqrt_in_cyclotomic(-1, 2));
    CHECK(sqrt_in_cyclotomic(-3, 3));
    CHECK(sqrt_in_cyclotomic(3, 12));
    CHECK(!sqrt_in_cyclotomic(3, 6));
    CHECK(sqrt_in_cyclotomic(-2, 8));
    CHECK_THROWS_AS(sqrt_in_cyclotomic(1, 5), InputError);
    CHECK_THROWS_AS(sqrt_in_cyclotomic(8, 5), InputError);
}

TEST_CASE("infinity constraints") {
    const PermGroup s6 = named_group("S6");
    const Permutation sigma = P("(0 1 2)(3 4 5)", 6);
    const PermGroup I(6, {sigma});
    const PermGroup D = normalizer(s6, I);
    ConstraintChecklist q = infinity_constraints(s6, D, I, sigma, InfinityMode::QTwoRealConjugatePoles);
    CHECK(q.all_pass());
    CHECK(q.find("c")->pass);
    CHECK(q.find("d")->pass);

    // Without the orbit swap item (c) fails.
    const PermGroup D2(6, {sigma, P("(1 2)(4 5)", 6)});
    ConstraintChecklist q2 = infinity_constraints(s6, D2, I, sigma, InfinityMode::QTwoRealConjugatePoles);
    CHECK(!q2.find("c")->pass);
    CHECK(q2.find("b")->pass);
    CHECK(q2.find("d")->pass);

    const PermGroup s5 = named_group("S5");
    const Permutation c5 = P("(0 1 2 3 4)", 5);
    const PermGroup I5(5, {c5});
    ConstraintChecklist g = infinity_constraints(s5, I5, I5, c5, InfinityMode::General);
    CHECK(g.all_pass());
    ConstraintChecklist g2 = infinity_constraints(s5, I5, I5, c5, InfinityMode::QTwoRealConjugatePoles);
    CHECK(!g2.find("a")->pass);

    const Permutation uneq = P("(0 1)(2 3 4)", 5);
    const PermGroup Iu(5, {uneq});
    ConstraintChecklist u = infinity_constraints(s5, Iu, Iu, uneq, InfinityMode::QTwoRealConjugatePoles);
    CHECK(!u.find("a")->pass);
    CHECK(!u.all_pass());

    // A = GD fails for G = A5 and D = <5-cycle> inside S5.
    ConstraintChecklist ag = infinity_constraints(s5, I5, I5, c5, InfinityMode::General, named_group("A5"));
    CHECK(!ag.find("A=GD")->pass);

    CHECK_THROWS_AS(infinity_constraints(s5, I5, Iu, c5, InfinityMode::General), InputError);
    CHECK_THROWS_AS(infinity_constraints(s5, PermGroup(5, {uneq}), I5, c5, InfinityMode::General), InputError);
    CHECK_THROWS_AS(infinity_constraints(named_group("A5"), PermGroup(5, {P("(0 1)", 5)}), PermGroup(5, {P("(0 1)", 5)}),
                                         P("(0 1)", 5), InfinityMode::General),
                    InputError);
}
