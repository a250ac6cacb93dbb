#include "isoext/laguerre.hpp"
#include "isoext/poly.hpp"
#include "isoext/ratfunc.hpp"
#include "isoext/sturm.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace isoext;
using isoext::testing::random_poly;
using isoext::testing::random_rat;

namespace {
Poly make_poly(std::initializer_list<long> coeffs) {
    std::vector<Rat> c;
    for (long v : coeffs) c.emplace_back(v);
    return Poly(std::move(c));
}

// independent root-count oracle: sign changes of p sampled on a fine rational
// grid over (lo, hi); exact hits count as roots
int sampled_sign_changes(const Poly& p, const Rat& lo, const Rat& hi, int cells = 4096) {
    Rat step = (hi - lo) / cells;
    int changes = 0, prev = 0;
    for (int i = 0; i <= cells; ++i) {
        int s = sign(p.eval(lo + Rat(i) * step));
        if (s == 0) {
            ++changes;
            prev = 0;
            continue;
        }
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}
}  // namespace

TEST_CASE("rational parsing and formatting") {
    CHECK(rat_str(rat_parse("3/4")) == "3/4");
    CHECK(rat_str(rat_parse("-6/4")) == "-3/2");
    CHECK(rat_str(rat_parse("7")) == "7");
    CHECK(rat_parse("0/5") == 0);
    CHECK_THROWS(rat_parse("1/0"));
    CHECK_THROWS(rat_parse("x"));
    CHECK(rat_floor(rat(-3, 2)) == -2);
    CHECK(rat_floor(rat(3, 2)) == 1);
}

TEST_CASE("polynomial arithmetic basics") {
    Poly p = make_poly({0, -3, 1});  // xi^2 - 3 xi
    CHECK(p.derive() == make_poly({-3, 2}));

    CHECK(make_poly({1, 1}) * make_poly({-1, 1}) == make_poly({-1, 0, 1}));
    CHECK((Rat(0) * Poly::monomial(Rat(1), 1)).is_zero());

    Poly q = make_poly({2, 0, 5});
    CHECK(poly_divmod(q * p + make_poly({1}), p).second == make_poly({1}));
}

TEST_CASE("polynomial gcd examples") {
    CHECK(poly_gcd(make_poly({-1, 0, 1}), make_poly({-1, 1})) == make_poly({-1, 1}));
    CHECK(poly_gcd(make_poly({0, 1}), make_poly({1, 1})) == Poly::one());
    Poly p = make_poly({2, 4});
    CHECK(poly_gcd(p, Poly::zero()) == p.monic());
    CHECK_THROWS(poly_gcd(Poly::zero(), Poly::zero()));
}

TEST_CASE("gcd divides both arguments exactly") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        Poly p = random_poly(rng, 8), q = random_poly(rng, 8);
        if (p.is_zero() && q.is_zero()) continue;
        Poly g = poly_gcd(p, q);
        if (!p.is_zero()) CHECK(poly_divmod(p, g).second.is_zero());
        if (!q.is_zero()) CHECK(poly_divmod(q, g).second.is_zero());
    }
}

TEST_CASE("derivative is linear and satisfies the product rule") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 40; ++trial) {
        Poly p = random_poly(rng, 6), q = random_poly(rng, 6);
        Rat c = random_rat(rng);
        CHECK((p + q).derive() == p.derive() + q.derive());
        CHECK((c * p).derive() == c * p.derive());
        CHECK((p * q).derive() == p.derive() * q + p * q.derive());
    }
}

TEST_CASE("ratfunc canonicalization") {
    RatFunc f(make_poly({-1, 0, 1}), make_poly({-1, 1}));
    CHECK(f.num() == make_poly({1, 1}));
    CHECK(f.den() == Poly::one());

    CHECK(RatFunc(Poly::zero(), make_poly({3, 1})) == RatFunc::zero());

    RatFunc g(make_poly({0, 2}), make_poly({4}));
    CHECK(g.num() == Poly(std::vector<Rat>{rat(0), rat(1, 2)}));
    CHECK(g.den() == Poly::one());

    CHECK_THROWS(RatFunc(Poly::one(), Poly::zero()));
}

TEST_CASE("ratfunc equality is a congruence") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 40; ++trial) {
        Poly n = random_poly(rng, 5), d = random_poly(rng, 5, true);
        Poly m = random_poly(rng, 3, true);
        RatFunc f(n, d), g(n * m, d * m);
        CHECK(f == g);
        // canonical equality iff the cross product vanishes
        CHECK((f.num() * g.den() - g.num() * f.den()).is_zero());
    }
}

TEST_CASE("ratfunc evaluation and poles") {
    RatFunc f(make_poly({1, 1}), Poly::one());
    CHECK(f.eval(rat(1)) == 2);
    RatFunc inv_xi(Poly::one(), Poly::monomial(Rat(1), 1));
    CHECK_THROWS_AS((void)inv_xi.eval(rat(0)), pole_error);

    // isotonic value: omega*xi/2 + a(a-1)*omega/(2 xi) - omega(a+1/2)
    // at omega=2, a=2, x=1 (xi = 1)
    RatFunc pot = RatFunc(Poly::monomial(rat(1), 1)) +
                  RatFunc(make_poly({4}), Rat(2) * Poly::monomial(Rat(1), 1)) -
                  RatFunc(rat(5));
    CHECK(pot.eval(rat(1)) == -2);
}

TEST_CASE("sturm counting examples") {
    CHECK(sturm_count(make_poly({2, -3, 1}), Bound::at(rat(0)), Bound::pos_inf()) == 2);
    CHECK(sturm_count_all(make_poly({1, 0, 1})) == 0);

    // cube of a linear factor: distinct-root counting sees one root
    Poly cubed = make_poly({-1, 1}) * make_poly({-1, 1}) * make_poly({-1, 1});
    CHECK(sturm_count_all(cubed) == 1);

    Poly lag = glp_build(3, rat(3, 2)).poly;
    int oracle = sampled_sign_changes(lag, rat(0), cauchy_bound(lag));
    CHECK(oracle == 3);
    CHECK(sturm_count(lag, Bound::at(rat(0)), Bound::pos_inf()) == oracle);
}

TEST_CASE("sturm count bounded by degree, exact for split polynomials") {
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 30; ++trial) {
        Poly p = random_poly(rng, 8, true);
        if (p.degree() == 0) continue;
        CHECK(sturm_count_all(p) <= p.degree());
    }
    // distinct rational roots -1, 1/2, 2, 7
    Poly split = make_poly({1, 1});
    split = split * Poly(std::vector<Rat>{rat(-1, 2), rat(1)});
    split = split * make_poly({-2, 1}) * make_poly({-7, 1});
    CHECK(sturm_count_all(split) == 4);
    CHECK(sturm_count(split, Bound::at(rat(0)), Bound::pos_inf()) == 3);
    CHECK(sturm_count(split, Bound::at(rat(1, 2)), Bound::at(rat(7))) == 1);
}

TEST_CASE("root isolation") {
    Poly p = make_poly({2, -3, 1});  // roots 1, 2
    auto intervals = isolate_positive_roots(p);
    REQUIRE(intervals.size() == 2);
    for (const auto& [lo, hi] : intervals) {
        if (lo == hi) {
            CHECK(p.eval(lo) == 0);
        } else {
            CHECK(sturm_count(p, Bound::at(lo), Bound::at(hi)) == 1);
        }
    }
    CHECK_THROWS(sturm_count(Poly::zero(), Bound::neg_inf(), Bound::pos_inf()));
}
