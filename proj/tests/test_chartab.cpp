#include <doctest.h>

#include <complex>
#include <map>

#include "hit/action.hpp"
#include "hit/catalog.hpp"
#include "hit/chartab.hpp"
#include "hit/error.hpp"
#include "hit/group.hpp"
#include "oracle.hpp"

using namespace hit;

namespace {

std::vector<std::uint64_t> sorted_degrees(const CharacterTable& t) {
    auto d = t.degrees;
    std::sort(d.begin(), d.end());
    return d;
}

// Orbits of the group generated by gens on ordered pairs from two actions,
// counted by union-find over the product set.
std::size_t pair_orbits(const std::vector<oracle::Img>& ge, const std::vector<oracle::Img>& gf, std::size_t ne,
                        std::size_t nf) {
    std::vector<std::size_t> parent(ne * nf);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t g = 0; g < ge.size(); ++g)
        for (std::size_t a = 0; a < ne; ++a)
            for (std::size_t b = 0; b < nf; ++b) {
                std::size_t u = find(a * nf + b);
                std::size_t v = find(static_cast<std::size_t>(ge[g][a]) * nf + static_cast<std::size_t>(gf[g][b]));
                parent[u] = v;
            }
    std::size_t count = 0;
    for (std::size_t x = 0; x < parent.size(); ++x) count += find(x) == x;
    return count;
}

std::vector<oracle::Img> images(const Action& a, const PermGroup& g) {
    std::vector<oracle::Img> out;
    for (const auto& x : a.apply_all(g.generators())) out.push_back(x.images());
    return out;
}

}  // namespace

TEST_CASE("conjugacy classes") {
    CHECK(conjugacy_classes(named_group("S3")).sizes == std::vector<std::uint64_t>{1, 3, 2});
    CHECK(conjugacy_classes(named_group("C4")).num_classes() == 4);

    // Brute force: conjugation orbits in A5.
    auto a5 = oracle::closure({{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}}, 5);
    std::set<oracle::Img> seen;
    int classes = 0;
    for (const auto& x : a5) {
        if (seen.count(x)) continue;
        ++classes;
        for (const auto& g : a5) seen.insert(oracle::mul(oracle::mul(oracle::inv(g), x), g));
    }
    ClassData cd = conjugacy_classes(named_group("A5"));
    CHECK(cd.num_classes() == static_cast<std::size_t>(classes));
    CHECK(cd.num_classes() == 5);
    std::uint64_t total = 0;
    for (auto s : cd.sizes) total += s;
    CHECK(total == 60);
}

TEST_CASE("permutation characters") {
    ClassData s5 = conjugacy_classes(named_group("S5"));
    CHECK(permutation_character(s5).values == std::vector<long long>{5, 3, 1, 2, 0, 1, 0});
    for (std::size_t i = 0; i < s5.num_classes(); ++i)
        CHECK(permutation_character(s5).values[i] == s5.reps[i].num_fixed_points());

    PermGroup c4 = named_group("C4");
    ClassData cc = conjugacy_classes(c4);
    auto reg = permutation_character(cc);
    CHECK(reg.values[0] == 4);
    for (std::size_t i = 1; i < reg.values.size(); ++i) CHECK(reg.values[i] == 0);

    ClassData s1 = conjugacy_classes(named_group("S1"));
    CHECK(permutation_character(s1) == principal_character(s1));
}

TEST_CASE("inner products") {
    ClassData s5 = conjugacy_classes(named_group("S5"));
    auto nat = permutation_character(s5);
    auto two = permutation_character(s5, Action::k_subsets(5, 2));
    CHECK(inner_product(s5, nat, nat) == 2);
    CHECK(inner_product(s5, two, nat) == 2);
    CHECK(inner_product(s5, principal_character(s5), principal_character(s5)) == 1);
    CHECK_THROWS_AS(inner_product(s5, nat, ClassFunction{{1, 2}}), InputError);
}

TEST_CASE("cyclotomic arithmetic") {
    CHECK(cyclotomic_polynomial(1) == std::vector<long long>{-1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<long long>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<long long>{1, -1, 1});
    // 1 + z + ... + z^4 = 0 for z a primitive 5th root.
    Cyclotomic s(5, 0);
    for (int a = 0; a < 5; ++a) s += Cyclotomic::zeta_power(5, a);
    CHECK(s.as_integer() == 0);
    Cyclotomic i = Cyclotomic::zeta_power(4, 1);
    CHECK((i * i).as_integer() == -1);
    CHECK((i * i.conj()).as_integer() == 1);
    // Mixed bases lift to the lcm.
    CHECK(Cyclotomic::zeta_power(6, 2) == Cyclotomic::zeta_power(3, 1));
    CHECK(std::abs(Cyclotomic::zeta_power(8, 1).to_complex() - std::polar(1.0, M_PI / 4)) < 1e-12);
    CHECK(Cyclotomic(3, 7).to_string() == "7");
}

TEST_CASE("character tables of small groups") {
    CHECK(sorted_degrees(character_table(named_group("S3"))) == std::vector<std::uint64_t>{1, 1, 2});
    CHECK(sorted_degrees(character_table(named_group("C2"))) == std::vector<std::uint64_t>{1, 1});
    CHECK(sorted_degrees(character_table(named_group("A5"))) == std::vector<std::uint64_t>{1, 3, 3, 4, 5});
    CHECK(sorted_degrees(character_table(named_group("S4"))) == std::vector<std::uint64_t>{1, 1, 2, 3, 3});
    CHECK(sorted_degrees(character_table(named_group("PSL2(7)@7"))) ==
          std::vector<std::uint64_t>{1, 3, 3, 6, 7, 8});
    CHECK(sorted_degrees(character_table(named_group("C5"))) == std::vector<std::uint64_t>{1, 1, 1, 1, 1});

    // The degree-3 characters of A5 take (1 +- sqrt 5)/2 on 5-cycles.
    CharacterTable a5 = character_table(named_group("A5"));
    const double golden = (1 + std::sqrt(5.0)) / 2;
    int hits = 0;
    for (std::size_t r = 0; r < a5.rows.size(); ++r) {
        if (a5.degrees[r] != 3) continue;
        for (std::size_t i = 0; i < a5.classes.num_classes(); ++i) {
            if (a5.classes.rep_orders[i] != 5) continue;
            const double v = a5.rows[r][i].to_complex().real();
            hits += std::abs(v - golden) < 1e-9 || std::abs(v - (1 - golden)) < 1e-9;
        }
    }
    CHECK(hits == 4);
    CHECK(a5.rows[0][0].as_integer() == 1);
}

TEST_CASE("table orthogonality checked in floating point") {
    for (const char* id : {"S3", "S4", "A5", "PSL2(7)@7", "D6", "AGL1(7)", "C7", "A6"}) {
        INFO(id);
        CharacterTable t = character_table(named_group(id));
        const ClassData& cd = t.classes;
        const std::size_t k = cd.num_classes();
        std::uint64_t sq = 0;
        for (auto d : t.degrees) sq += d * d;
        CHECK(sq == cd.order);
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) {
                std::complex<double> s = 0;
                for (std::size_t i = 0; i < k; ++i)
                    s += static_cast<double>(cd.sizes[i]) * t.rows[a][i].to_complex() *
                         std::conj(t.rows[b][i].to_complex());
                CHECK(std::abs(s - (a == b ? static_cast<double>(cd.order) : 0.0)) < 1e-6);
            }
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                std::complex<double> s = 0;
                for (std::size_t r = 0; r < k; ++r) s += t.rows[r][i].to_complex() * std::conj(t.rows[r][j].to_complex());
                CHECK(std::abs(s - (i == j ? static_cast<double>(cd.order / cd.sizes[i]) : 0.0)) < 1e-6);
            }
    }
}

TEST_CASE("table caps") {
    limits().table_cap = 100;
    CHECK_THROWS_AS(character_table(named_group("S6")), CapExceeded);
    limits().table_cap = 100000;
}

TEST_CASE("is_character") {
    CharacterTable s5 = character_table(named_group("S5"));
    const ClassData& cd = s5.classes;
    auto f = permutation_character(cd, Action::k_subsets(5, 2)) - permutation_character(cd);
    CharacterCheck c = is_character(f, s5);
    CHECK(c.status == CharStatus::Character);
    int constituents = 0;
    for (std::size_t r = 0; r < c.multiplicities.size(); ++r)
        if (c.multiplicities[r] != 0) {
            ++constituents;
            CHECK(c.multiplicities[r] == 1);
            CHECK(s5.degrees[r] == 5);
        }
    CHECK(constituents == 1);

    CharacterTable s3 = character_table(named_group("S3"));
    auto g = permutation_character(s3.classes) - 2 * principal_character(s3.classes);
    CharacterCheck n = is_character(g, s3);
    CHECK(n.status == CharStatus::NotCharacter);
    CHECK(n.multiplicities[0] == -1);

    CHECK(is_character(ClassFunction{std::vector<long long>(cd.num_classes(), 0)}, s5).status ==
          CharStatus::Character);
}

TEST_CASE("difference test without a table") {
    PermGroup s5 = named_group("S5");
    auto nat = Action::natural(5), two = Action::k_subsets(5, 2);
    CharacterCheck fallback = difference_is_character(s5, nat, two, nullptr, false);
    CHECK(fallback.method == "2-transitive");
    CHECK(fallback.status == CharStatus::Character);
    CHECK(difference_is_character(s5, nat, two).method == "table");

    // C5 on 5 points is not 2-transitive; without a table nothing is decided.
    PermGroup c5 = named_group("C5");
    CharacterCheck u = difference_is_character(c5, nat, nat, nullptr, false);
    CHECK(u.status == CharStatus::Undecided);
    CHECK(u.method == "undecided-general");
}

TEST_CASE("Burnside cross-check across the catalog") {
    for (const auto& id : catalog_ids()) {
        PermGroup g = named_group(id);
        if (g.order() > 20000 || g.degree() > 12 || g.degree() < 2) continue;
        INFO(id.to_string());
        ClassData cd = conjugacy_classes(g);
        std::vector<Action> actions{Action::natural(g.degree())};
        if (g.degree() >= 4) actions.push_back(Action::k_subsets(g.degree(), 2));
        for (const auto& e : actions) {
            auto pe = permutation_character(cd, e);
            CHECK(inner_product(cd, pe, principal_character(cd)) == orbits(e.image(g)).size());
            for (const auto& f : actions) {
                auto pf = permutation_character(cd, f);
                CHECK(inner_product(cd, pe, pf) == pair_orbits(images(e, g), images(f, g), static_cast<std::size_t>(e.degree()),
                                                             static_cast<std::size_t>(f.degree())));
            }
        }
        if (is_transitive(g) && is_2transitive(g)) {
            auto p = permutation_character(cd);
            CHECK(inner_product(cd, p, p) == 2);
        }
    }
}

TEST_CASE("2-transitive shortcut agrees with tables") {
    for (const auto& id : catalog_ids()) {
        PermGroup g = named_group(id);
        if (g.order() > 20000 || g.degree() < 4 || !is_transitive(g) || !is_2transitive(g)) continue;
        INFO(id.to_string());
        auto nat = Action::natural(g.degree()), two = Action::k_subsets(g.degree(), 2);
        CharacterCheck quick = difference_is_character(g, nat, two, nullptr, false);
        CharacterCheck full = difference_is_character(g, nat, two);
        CHECK(quick.status == full.status);
        CHECK(full.method == "table");
    }
}

TEST_CASE("tables of larger groups") {
    CHECK(sorted_degrees(character_table(named_group("M11"))) ==
          std::vector<std::uint64_t>{1, 10, 10, 10, 11, 16, 16, 44, 45, 55});
    CharacterTable m12 = character_table(named_group("M12"));
    CHECK(m12.degrees.size() == 15);
    CHECK(sorted_degrees(m12).back() == 176);
    CHECK(character_table(named_group("S7")).degrees.size() == 15);
}
