#include "isoext/shape.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace isoext;
using isoext::testing::random_params;

namespace {
OddField minus_omega_x(const Rat& omega) { return OddField(RatFunc(Rat(-1) * omega), omega); }
}

TEST_CASE("delta computations collapse to -omega x") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 10; ++t) {
        Params p = random_params(rng);
        CHECK(delta1(0, p) == minus_omega_x(p.omega));
        CHECK(delta1(1, p) == minus_omega_x(p.omega));
        CHECK(delta2(1, p) == minus_omega_x(p.omega));
        CHECK(delta2(2, p) == minus_omega_x(p.omega));
        for (int n = 2; n <= 8; ++n) {
            CHECK(delta1(n, p) == minus_omega_x(p.omega));
            CHECK(delta2(n, p) == minus_omega_x(p.omega));
        }
    }
}

TEST_CASE("degenerate parameter values are reported, not crashed") {
    // a = n + 1/2 collapses u_n onto w_0 and the Delta denominator vanishes
    CHECK_THROWS_AS(delta2(2, Params(rat(2), rat(5, 2))), degenerate_parameter);
    CHECK_THROWS_AS(delta2(3, Params(rat(1), rat(7, 2))), degenerate_parameter);
    // delta1 has no such point
    CHECK(delta1(2, Params(rat(2), rat(5, 2))) == minus_omega_x(rat(2)));
}

TEST_CASE("susy partner of the L3 tower is the isotonic potential") {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 5; ++t) {
        Params p = random_params(rng);
        for (int l = 0; l <= 4; ++l) {
            ExtendedPotential ep = extend(Series::L3, 2 * l, p);
            CHECK(susy_partner(ep) == isotonic_potential(p));
        }
    }
}

TEST_CASE("shape invariance reports") {
    Params p(rat(2), rat(2));

    ShapeReport base = shape_check(Series::L1, 0, p);
    CHECK(base.delta_is_minus_omega_x);
    CHECK(base.partner_identity_holds);

    ShapeReport l1 = shape_check(Series::L1, 1, p);
    CHECK(l1.delta_is_minus_omega_x);
    CHECK(l1.partner_identity_holds);

    ShapeReport l2 = shape_check(Series::L2, 2, Params(rat(2), rat(10, 3)));
    CHECK(l2.delta_is_minus_omega_x);
    CHECK(l2.partner_identity_holds);

    CHECK_THROWS(shape_check(Series::L0, 1, p));
    CHECK_THROWS(shape_check(Series::L3, 2, p));

    std::mt19937_64 rng(43);
    for (int t = 0; t < 3; ++t) {
        Params q = random_params(rng);
        for (Series s : {Series::L1, Series::L2}) {
            for (int n = 0; n <= 6; ++n) {
                ShapeReport rep = shape_check(s, n, q);
                CHECK(rep.delta_is_minus_omega_x);
                CHECK(rep.partner_identity_holds);
            }
        }
    }
}

TEST_CASE("direct partner identity for L1") {
    // Vtilde^(1)(a) = V^(1)(a_1) + 2 omega, the worked n = 1 case
    Params p(rat(2), rat(2));
    ExtendedPotential ep = extend(Series::L1, 1, p);
    EvenField partner = susy_partner(ep);
    EvenField rhs = extend(Series::L1, 1, p.shifted_a(1)).field + Rat(2) * p.omega;
    CHECK(partner == rhs);
}
