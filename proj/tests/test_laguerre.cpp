#include "isoext/laguerre.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace isoext;
using isoext::testing::random_rat;

namespace {
// straight from the terminating series, computed term by term
Rat series_coeff(int n, const Rat& alpha, int k) {
    Rat fact(1);
    for (int j = 2; j <= k; ++j) fact *= j;
    Rat c = binomial(alpha + n, n - k) / fact;
    return k % 2 == 0 ? c : -c;
}
}  // namespace

TEST_CASE("glp_build low orders") {
    CHECK(glp_build(0, rat(7, 3)).poly == Poly::one());

    Glp l1 = glp_build(1, rat(-4, 5));
    CHECK(l1.poly.coeff(0) == series_coeff(1, rat(-4, 5), 0));
    CHECK(l1.poly.coeff(0) == rat(1, 5));  // alpha + 1
    CHECK(l1.poly.coeff(1) == rat(-1));

    Glp l2 = glp_build(2, rat(1, 2));
    CHECK(l2.poly.coeff(0) == rat(15, 8));
    CHECK(l2.poly.coeff(1) == rat(-5, 2));
    CHECK(l2.poly.coeff(2) == rat(1, 2));
}

TEST_CASE("series construction agrees with the three-term recurrence") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Rat alpha = random_rat(rng, 12, 5);
        for (int n = 0; n <= 8; ++n) CHECK(glp_build(n, alpha).poly == glp_recurrence(n, alpha));
    }
}

TEST_CASE("leading coefficient and value at zero") {
    std::mt19937_64 rng(12);
    Rat factorial(1);
    for (int n = 1; n <= 8; ++n) {
        factorial *= n;
        Rat alpha = random_rat(rng, 10, 7);
        Glp g = glp_build(n, alpha);
        Rat expected_lead = (n % 2 == 0 ? Rat(1) : Rat(-1)) / factorial;
        CHECK(g.poly.leading() == expected_lead);
        CHECK(g.poly.eval(rat(0)) == binomial(alpha + n, n));
    }
}

TEST_CASE("recurrence identities have zero residual") {
    // the worked instance: sum identity at n=2, alpha=0, z=1
    Rat at_one = glp_build(2, rat(0)).poly.eval(rat(1)) + glp_build(1, rat(1)).poly.eval(rat(1)) -
                 glp_build(2, rat(1)).poly.eval(rat(1));
    CHECK(glp_build(2, rat(0)).poly.eval(rat(1)) == rat(-1, 2));
    CHECK(at_one == 0);

    CHECK(verify_identity(GlpIdentity::ThreeTerm, 1, rat(0)).is_zero());

    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        Rat alpha = random_rat(rng, 9, 4);
        for (int n = 1; n <= 8; ++n) {
            CHECK(verify_identity(GlpIdentity::Sum, n, alpha).is_zero());
            CHECK(verify_identity(GlpIdentity::ThreeTerm, n, alpha).is_zero());
            CHECK(verify_identity(GlpIdentity::Contiguous, n, alpha).is_zero());
        }
    }
}

TEST_CASE("KLH predictions") {
    KlhPrediction p = klh_predict(3, rat(1, 2));
    CHECK(p.pos_zeros == 3);
    CHECK(p.neg_zeros == 0);

    p = klh_predict(2, rat(-5, 2));
    CHECK(p.pos_zeros == 0);
    CHECK(p.neg_zeros == 0);

    // resolves the floor reading of the bracket: floor(-3/2) = -2
    p = klh_predict(3, rat(-3, 2));
    CHECK(p.pos_zeros == 2);
    CHECK(p.neg_zeros == 1);

    CHECK_THROWS(klh_predict(3, rat(-1)));
    CHECK_THROWS(klh_predict(3, rat(-2)));
}

TEST_CASE("KLH verified against Sturm counts") {
    CHECK(klh_verify(3, rat(1, 2)));
    CHECK(klh_verify(2, rat(-5, 2)));
    CHECK(klh_verify(3, rat(-3, 2)));
    for (int n = 0; n <= 8; ++n) {
        for (int num = 1; num <= 17; num += 2) {
            CHECK(klh_verify(n, rat(num, 2)));
            CHECK(klh_verify(n, rat(-num, 2)));
        }
    }
    // a few non-half-integer parameters across the three regimes
    for (const char* s : {"8/3", "-4/3", "-7/3", "-31/3", "22/7", "-9/7"})
        for (int n = 1; n <= 6; ++n) CHECK(klh_verify(n, rat_parse(s)));
}
