#include <doctest.h>

#include "hit/catalog.hpp"
#include "hit/criteria.hpp"
#include "hit/error.hpp"
#include "hit/group.hpp"

using namespace hit;

namespace {

Permutation P(const char* s, int n) { return Permutation::parse(s, n); }

RamificationDatum datum(PermGroup A, Permutation sigma) {
    RamificationDatum d;
    d.A = std::move(A);
    d.sigma_inf = std::move(sigma);
    return d;
}

Permutation element_of_order(const PermGroup& g, std::uint64_t k) {
    for (const auto& x : g.elements().elements())
        if (x.order() == k) return x;
    FAIL("no element of order " << k);
    return {};
}

PermGroup d4() { return PermGroup(4, {P("(0 1 2 3)", 4), P("(0 2)", 4)}); }

}  // namespace

TEST_CASE("datum validation") {
    CHECK_THROWS_AS(datum(named_group("A5"), P("(0 1)", 5)).validate(), InputError);
    RamificationDatum d = datum(named_group("S5"), P("(0 1)", 5));
    d.G = named_group("C5");
    CHECK_THROWS_AS(d.validate(), InputError);
    d.G.reset();
    d.D_inf = PermGroup(5, {P("(0 1 2)", 5)});
    CHECK_THROWS_AS(d.validate(), InputError);
    d.D_inf.reset();
    d.branch = zm_minus_z(5);
    CHECK_THROWS_AS(d.validate(), InputError);  // infinity is a 5-cycle
    d.sigma_inf = P("(0 1 2 3 4)", 5);
    CHECK_NOTHROW(d.validate());
    CHECK_THROWS_AS(datum(PermGroup(4, {P("(0 1)", 4)}), Permutation::identity(4)).validate(), InputError);
}

TEST_CASE("absolute irreducibility") {
    RamificationDatum prim = datum(named_group("S5"), P("(0 1 2 3 4)", 5));
    AbsIrrCheck c = absolute_irreducibility_check(prim);
    CHECK(c.absolutely_irreducible);
    CHECK(!c.obstructed);

    RamificationDatum quartic = datum(d4(), P("(0 2)(1 3)", 4));
    quartic.G = PermGroup(4, {P("(0 2)(1 3)", 4)});
    c = absolute_irreducibility_check(quartic);
    CHECK(!c.absolutely_irreducible);
    CHECK(!c.a_primitive);
    CHECK(!c.obstructed);

    RamificationDatum psl = datum(named_group("PSL2(7)@7"), Permutation::identity(7));
    psl.G = PermGroup::trivial(7);
    c = absolute_irreducibility_check(psl);
    CHECK(c.a_simple);
    CHECK(c.obstructed);
    CHECK(criterion_absirr(psl).fired);
}

TEST_CASE("unramified infinity") {
    CriterionResult a5 = criterion_unram(datum(named_group("A5"), Permutation::identity(5)));
    CHECK(a5.fired);
    CHECK(a5.tag == "C:unram");
    CriterionResult q = criterion_unram(datum(d4(), Permutation::identity(4)));
    CHECK(q.applicable);
    CHECK(!q.fired);
    // S5: A5 is the only index-2 subgroup and misses the point stabilizer S4.
    CriterionResult s5 = criterion_unram(datum(named_group("S5"), Permutation::identity(5)));
    CHECK(s5.fired);
    CHECK(s5.tag == "T:unram");
    CHECK(!criterion_unram(datum(named_group("S5"), P("(0 1)", 5))).applicable);
    CHECK(criterion_unram(datum(named_group("S10"), Permutation::identity(10))).fired);
}

TEST_CASE("gcd of ramification indices") {
    CHECK(criterion_gcd1(datum(named_group("S5"), P("(0 1)(2 3 4)", 5))).fired);
    CHECK(!criterion_gcd1(datum(named_group("S6"), P("(1 2 3 4 5)", 6))).applicable);
    CHECK(!criterion_gcd1(datum(named_group("S9"), P("(0 1 2)(3 4 5)(6 7 8)", 9))).fired);
    RamificationDatum gen = datum(named_group("S5"), P("(0 1)(2 3 4)", 5));
    gen.field = FieldFlag::General;
    CHECK(!criterion_gcd1(gen).applicable);
}

TEST_CASE("rational unramified place") {
    RamificationDatum d = datum(named_group("S4"), P("(0 1 2 3)", 4));
    CHECK(!criterion_rat(d).applicable);
    d.rational_unramified_place_at_infinity = true;
    CHECK(criterion_rat(d).fired);
    d.field = FieldFlag::General;
    CHECK(!criterion_rat(d).applicable);
}

TEST_CASE("prime degree") {
    CriterionResult r = criterion_prime(datum(named_group("S5"), P("(1 2)(3 4)", 5)));
    CHECK(r.fired);
    CHECK(r.tag == "T:p");
    RamificationDatum three = datum(named_group("S3"), P("(0 1 2)", 3));
    three.branch = zm_minus_z(3);
    r = criterion_prime(three);
    CHECK(r.applicable);
    CHECK(!r.fired);
    REQUIRE(!r.notes.empty());
    CHECK(r.notes[0].find("h(x')") != std::string::npos);
    r = criterion_prime(datum(named_group("S2"), P("(0 1)", 2)));
    CHECK(!r.applicable);
    CHECK(r.reason.find("p = 2") != std::string::npos);
}

TEST_CASE("doubly transitive groups") {
    RamificationDatum z5 = datum(named_group("S5"), P("(0 1 2 3 4)", 5));
    z5.branch = zm_minus_z(5);
    z5.sigma_inf = z5.branch->cycles[*z5.branch->infinity_index];
    CriterionResult r = criterion_doubly(z5);
    CHECK(r.applicable);
    CHECK(!r.fired);

    // Four 3-cycles in A4 with product one: genus 1 by Riemann-Hurwitz.
    RamificationDatum e;
    e.A = named_group("A4");
    e.branch = BranchCycleDescription::make(
        4, {P("(0 1 2)", 4), P("(0 2 1)", 4), P("(1 2 3)", 4), P("(1 3 2)", 4)}, 3);
    e.sigma_inf = P("(1 3 2)", 4);
    CHECK(rh_genus(*e.branch) == 1);
    CHECK(criterion_doubly(e).fired);
    e.rational_spec_mode = true;
    r = criterion_doubly(e);
    CHECK(r.applicable);
    CHECK(!r.fired);
    CHECK(r.tag == "T:doubly-k");

    CHECK(criterion_doubly(datum(named_group("S7"), P("(0 1)(2 3)", 7))).fired);
    CHECK(!criterion_doubly(datum(d4(), P("(0 2)(1 3)", 4))).applicable);
}

TEST_CASE("composition factor tables") {
    CHECK(in_cf_table("A5", FieldFlag::Q));
    CHECK(in_cf_table("A12", FieldFlag::Q));
    CHECK(in_cf_table("PSL2(8)", FieldFlag::Q));
    CHECK(!in_cf_table("PSL2(11)", FieldFlag::Q));
    CHECK(in_cf_table("PSL2(11)", FieldFlag::General));
    CHECK(in_cf_table("M24", FieldFlag::General));
    CHECK(!in_cf_table("PSU3(3)", FieldFlag::General));

    const PermGroup m11 = named_group("M11");
    CriterionResult r = criterion_primitive_cf(datum(m11, element_of_order(m11, 11)));
    CHECK(r.fired);
    CHECK(r.reason.find("M11") != std::string::npos);
    CHECK(!criterion_primitive_cf(datum(named_group("S5"), P("(0 1)", 5))).fired);
    const PermGroup psl11 = named_group("PSL2(11)@11");
    RamificationDatum p11 = datum(psl11, element_of_order(psl11, 11));
    CHECK(criterion_primitive_cf(p11).fired);
    p11.field = FieldFlag::General;
    CHECK(!criterion_primitive_cf(p11).fired);
}

TEST_CASE("simple Galois groups") {
    const PermGroup psl = named_group("PSL2(7)@7");
    CriterionResult r = criterion_simple_galois(datum(psl, element_of_order(psl, 7)));
    CHECK(r.fired);
    CHECK(r.tag == "C:mainQ:Galois_2");
    CHECK(!criterion_simple_galois(datum(named_group("A6"), P("(0 1 2 3 4)", 6))).applicable);
    CHECK(!criterion_simple_galois(datum(named_group("C2"), P("(0 1)", 2))).applicable);
    CHECK(!criterion_simple_galois(datum(named_group("C3"), P("(0 1 2)", 3))).applicable);
    CHECK(criterion_simple_galois(datum(named_group("C5"), P("(0 1 2 3 4)", 5))).fired);
}

TEST_CASE("aggregated verdicts") {
    const PermGroup m11 = named_group("M11");
    Verdict v = verdict(datum(m11, element_of_order(m11, 11)));
    CHECK(v.status == VerdictStatus::Finite);
    CHECK(v.cites("T:main"));
    CHECK(v.cites("C:mainQ:Galois_2"));

    // The quartic X^4 + 2(1-t)X^2 + (1+t)^2 has roots +-i +- sqrt(t).
    RamificationDatum v4 = datum(PermGroup(4, {P("(0 1)(2 3)", 4), P("(0 2)(1 3)", 4)}), P("(0 2)(1 3)", 4));
    v4.G = PermGroup(4, {P("(0 2)(1 3)", 4)});
    v = verdict(v4);
    CHECK(v.status != VerdictStatus::Finite);
    CHECK(!v.candidates.empty());
    bool survivor = false;
    for (const auto& c : v.candidates) survivor = survivor || c.survives;
    CHECK(survivor);

    RamificationDatum quartic = datum(d4(), P("(0 2)(1 3)", 4));
    quartic.G = PermGroup(4, {P("(0 2)(1 3)", 4)});
    CHECK(verdict(quartic).status != VerdictStatus::Finite);

    // Odd degree, unramified infinity and simple A.
    v = verdict(datum(named_group("A5"), Permutation::identity(5)));
    CHECK(v.status == VerdictStatus::Finite);
    CHECK(v.cites("C:unram"));

    RamificationDatum z5 = datum(named_group("S5"), P("(0 1 2 3 4)", 5));
    z5.branch = zm_minus_z(5);
    z5.sigma_inf = z5.branch->cycles[*z5.branch->infinity_index];
    v = verdict(z5);
    CHECK(v.status == VerdictStatus::Inconclusive);

    Verdict shape;
    shape.status = VerdictStatus::InfiniteWitness;
    shape.witnesses.push_back({"pell", "test", {}});
    CHECK(verdict(z5, shape).status == VerdictStatus::InfiniteWitness);
    CHECK_THROWS_AS(verdict(datum(named_group("A5"), Permutation::identity(5)), shape), InvariantViolation);
}

TEST_CASE("audit trail and monotonicity") {
    std::vector<RamificationDatum> data;
    for (const char* id : {"S5", "A5", "PSL2(7)@7", "M11", "AGL1(7)", "S6", "A4", "D5"}) {
        const PermGroup g = named_group(id);
        const ConjugacyClasses& cc = g.classes();
        for (std::size_t rep : cc.reps) data.push_back(datum(g, g.elements()[rep]));
    }
    int finite = 0;
    for (auto& d : data) {
        const Verdict before = verdict(d);
        for (const auto& f : before.fired) CHECK(reassert(d, f));
        if (before.status == VerdictStatus::Finite) ++finite;
        // More information never withdraws a finiteness verdict.
        d.rational_unramified_place_at_infinity = false;
        d.D_inf = normalizer(d.A, PermGroup(d.degree(), {d.sigma_inf}));
        const Verdict after = verdict(d);
        if (before.status == VerdictStatus::Finite) CHECK(after.status == VerdictStatus::Finite);
        CHECK(after.fired.size() >= before.fired.size());
        d.rational_unramified_place_at_infinity = true;
        CHECK(verdict(d).status == VerdictStatus::Finite);
    }
    CHECK(finite > 0);
}
