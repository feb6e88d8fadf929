#include <doctest.h>

#include <cmath>

#include "hit/error.hpp"
#include "hit/polyform.hpp"
#include "hit/scanner.hpp"

using namespace hit;

namespace {

bool is_square(long v) {
    if (v < 0) return false;
    long r = std::lround(std::sqrt(static_cast<double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r * r == v;
}

bool is_cube(long v) {
    long r = std::lround(std::cbrt(static_cast<double>(v)));
    for (long c = r - 1; c <= r + 1; ++c)
        if (c * c * c == v) return true;
    return false;
}

std::vector<long> brute(long bound, bool (*pred)(long)) {
    std::vector<long> out;
    for (long t = -bound; t <= bound; ++t)
        if (pred(t)) out.push_back(t);
    return out;
}

Verdict finite_verdict() {
    Verdict v;
    v.status = VerdictStatus::Finite;
    v.fired.push_back({"test", "T:test", "constructed"});
    return v;
}

}  // namespace

TEST_CASE("Pell specializations") {
    const ScanReport r = scan(parse_bivariate("X^2 - 2*t^2 - 1"), 100, 2);
    CHECK(r.reducible_points == std::vector<long>{-70, -12, -2, 0, 2, 12, 70});
    CHECK(r.reducible_points == brute(100, [](long t) { return is_square(2 * t * t + 1); }));
    CHECK(r.undefined_points.empty());
    CHECK(r.factorizations.at(12).to_string() == "(X - 17) * (X + 17)");
}

TEST_CASE("Thue cubic specializations") {
    const ScanReport r = scan(parse_bivariate("X^3 + t^3 - 1"), 50);
    CHECK(r.reducible_points == std::vector<long>{0, 1});
    CHECK(r.reducible_points == brute(50, [](long t) { return is_cube(1 - t * t * t); }));
}

TEST_CASE("quadratic with a linear term") {
    const ScanReport r = scan(parse_bivariate("X^2 + X - 2*t^2"), 20, 3);
    CHECK(r.reducible_points == brute(20, [](long t) { return is_square(1 + 8 * t * t); }));
    CHECK(r.is_reducible_at(6));
    CHECK(r.is_reducible_at(-1));
}

TEST_CASE("degree drop is undefined") {
    const ScanReport r = scan(parse_bivariate("(t - 3)*X^2 + X + t"), 5);
    CHECK(r.undefined_points == std::vector<long>{3});
    CHECK(!r.is_reducible_at(3));
    CHECK_THROWS_AS(scan(parse_bivariate("X + t"), 5), InputError);
    CHECK_THROWS_AS(scan(RationalBivarPoly(), 5), InputError);
}

TEST_CASE("scan properties") {
    const RationalBivarPoly f = parse_bivariate("X^4 - t*X^2 + 2*t - 4");
    const ScanReport small = scan(f, 15, 1);
    const ScanReport large = scan(f, 30, 4);
    for (long t : small.reducible_points) CHECK(large.is_reducible_at(t));
    for (long t : large.reducible_points) {
        CHECK(std::labs(t) <= 30);
        CHECK(!std::binary_search(large.undefined_points.begin(), large.undefined_points.end(), t));
        const Factorization again = specialize_and_factor(f, t);
        CHECK(again.to_string() == large.factorizations.at(t).to_string());
        CHECK(again.reducible());
    }
    CHECK(scan(f, 30, 1).reducible_points == large.reducible_points);
}

TEST_CASE("reconciliation") {
    Verdict incon;
    const ScanReport pell = scan(parse_bivariate("X^2 - 2*t^2 - 1"), 100);
    CHECK(!reconcile(pell, incon).contradiction);

    const ScanReport cubic = scan(parse_bivariate("X^3 + t^3 - 1"), 50);
    const Reconciliation c = reconcile(cubic, finite_verdict(), 2);
    CHECK(!c.contradiction);
    CHECK(c.small_count == 2);
    CHECK(c.threshold == 4);

    const ScanReport grow = scan(parse_bivariate("X^2 - t^2"), 20);
    const Reconciliation g = reconcile(grow, finite_verdict());
    CHECK(g.contradiction);
    CHECK(g.new_count == 20);
    CHECK(!reconcile(grow, incon).contradiction);
}
