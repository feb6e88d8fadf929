#include <doctest.h>

#include "hit/catalog.hpp"
#include "hit/error.hpp"
#include "hit/group.hpp"
#include "hit/siegelgroup.hpp"

using namespace hit;

namespace {

Permutation P(const char* s, int n) { return Permutation::parse(s, n); }

}  // namespace

TEST_CASE("hypotheses and conclusion on small groups") {
    const AgdiInstance a = AgdiInstance::make(named_group("S5"), named_group("A5"), P("(0 1 2 3 4)", 5));
    const AgdiHypotheses h = agdi_hypotheses(a);
    CHECK(h.a_holds);
    CHECK(h.b_holds);
    CHECK(h.i_orbits == 1);
    CHECK(agdi_conclusion(a));

    // Two orbits: (0 1 2)(3 4) is not in A5, so use the 3-cycle with 3 orbits.
    const AgdiInstance c = AgdiInstance::make(named_group("S5"), named_group("A5"), P("(0 1 2)", 5));
    CHECK(!agdi_hypotheses(c).a_holds);
    CHECK_THROWS_AS(agdi_conclusion(c), InputError);

    const AgdiInstance t = AgdiInstance::make(named_group("S4"), named_group("S4"), Permutation::identity(4));
    CHECK(!agdi_hypotheses(t).a_holds);
    CHECK(agdi_hypotheses(t).i_orbits == 4);

    CHECK_THROWS_AS(AgdiInstance::make(named_group("S5"), named_group("A5"), P("(0 1)", 5)), InputError);
    CHECK_THROWS_AS(AgdiInstance::make(named_group("S5"), PermGroup(5, {P("(0 1 2 3 4)", 5)}), P("(0 1 2 3 4)", 5)),
                    InputError);
    CHECK_THROWS_AS(AgdiInstance::make(named_group("S5"), PermGroup::trivial(5), Permutation::identity(5)), InputError);
}

TEST_CASE("counterexample without hypothesis (b)") {
    for (int m : {3, 4}) {
        const AgdiInstance inst = build_agdi_counterexample(m);
        const int n = m * m;
        std::uint64_t f = 1;
        for (int i = 2; i <= m; ++i) f *= static_cast<std::uint64_t>(i);
        CHECK(inst.A.degree() == n);
        CHECK(inst.A.order() == 2 * f * f);
        CHECK(inst.G.order() == f * f);
        CHECK(is_primitive(inst.A));
        const AgdiHypotheses h = agdi_hypotheses(inst);
        CHECK(h.a_holds);
        CHECK(h.i_orbits == 2);
        CHECK(!h.b_holds);
        CHECK(!is_primitive(inst.G));
        std::vector<std::size_t> lens;
        for (const auto& o : orbits(inst.I)) lens.push_back(o.size());
        std::sort(lens.begin(), lens.end());
        CHECK(lens == std::vector<std::size_t>{static_cast<std::size_t>(m), static_cast<std::size_t>(m * (m - 1))});
        CHECK(block_systems(inst.G).size() == 2);
        CHECK_THROWS_AS(agdi_conclusion(inst), InputError);
        const AbsindCertificate cert = absind_transfer(inst);
        CHECK(!cert.issued);
    }
    CHECK_THROWS_AS(build_agdi_counterexample(2), InputError);
    CHECK_THROWS_AS(build_agdi_counterexample(6), CapExceeded);
}

TEST_CASE("primitivity transfer certificate") {
    const PermGroup psl = named_group("PSL2(7)@7");
    const auto& el = psl.elements().elements();
    Permutation seven;
    for (const auto& x : el)
        if (x.order() == 7) {
            seven = x;
            break;
        }
    const AbsindCertificate c = absind_transfer(AgdiInstance::make(psl, psl, seven));
    CHECK(c.issued);
    CHECK(!c.used_b);

    // Two orbits and A = G: (b) holds trivially and the certificate uses it.
    const AbsindCertificate d =
        absind_transfer(AgdiInstance::make(named_group("S5"), named_group("S5"), P("(0 1)(2 3 4)", 5)));
    CHECK(d.issued);
    CHECK(d.used_b);
}

TEST_CASE("maximal intransitive subgroups of wreath products") {
    const WreathIntransitive w2 = wreath_maximal_intransitive(named_group("S3"), 2, named_group("C2"));
    CHECK(w2.W.order() == 72);
    CHECK(w2.product_image.degree() == 9);
    CHECK(w2.product_primitive);
    CHECK(w2.V.order() == 8);
    CHECK(w2.v_orbit_lengths == std::vector<int>{2, 4});

    const WreathIntransitive w3 = wreath_maximal_intransitive(named_group("S3"), 3, named_group("C3"));
    CHECK(w3.W.order() == 648);
    CHECK(w3.product_image.degree() == 27);
    CHECK(w3.product_primitive);
    CHECK(w3.v_orbit_lengths == std::vector<int>{3, 6});

    const WreathIntransitive w3s = wreath_maximal_intransitive(named_group("S3"), 3, named_group("S3"));
    CHECK(w3s.W.order() == 1296);
    CHECK(w3s.product_primitive);

    CHECK_THROWS_AS(wreath_maximal_intransitive(named_group("C5"), 2, named_group("C2")), InputError);
    CHECK_THROWS_AS(wreath_maximal_intransitive(named_group("S3"), 4, named_group("C4")), InputError);
    CHECK_THROWS_AS(wreath_maximal_intransitive(named_group("S3"), 5, named_group("S5")), InputError);
}

TEST_CASE("decompositions from block systems") {
    const auto c4 = decompositions_via_blocks(named_group("C4"));
    REQUIRE(c4.size() == 1);
    CHECK(c4[0].block_size == 2);
    CHECK(c4[0].inner_cyclic_by_2);
    CHECK(decompositions_via_blocks(named_group("S5")).empty());
    const PermGroup w = wreath_product(named_group("S3"), named_group("C2"), WreathMode::Imprimitive);
    const auto d = decompositions_via_blocks(w);
    REQUIRE(d.size() == 1);
    CHECK(d[0].block_size == 3);
    CHECK(d[0].num_blocks == 2);
    CHECK(d[0].inner_cyclic_by_2);
    CHECK_THROWS_AS(decompositions_via_blocks(PermGroup(4, {P("(0 1)", 4)})), InputError);
}

TEST_CASE("exhaustive sweep finds no violation") {
    const AgdiSweepReport r = agdi_sweep(9, 100000, 1);
    CHECK(r.groups > 10);
    CHECK(r.hypotheses_hold > 0);
    CHECK(r.violations.empty());
}
