#include "isoext/json_io.hpp"

#include "support.hpp"

#include <algorithm>
#include <doctest.h>

using namespace isoext;
using isoext::testing::random_poly;

TEST_CASE("rational wire format") {
    CHECK(to_json(rat(3, 4)) == "3/4");
    CHECK(to_json(rat(5)) == "5");
    CHECK(rat_from_json(json("-7/2")) == rat(-7, 2));
    CHECK_THROWS(rat_from_json(json("3/0")));
}

TEST_CASE("poly and ratfunc round trip") {
    std::mt19937_64 rng(51);
    for (int t = 0; t < 20; ++t) {
        Poly p = random_poly(rng, 7);
        CHECK(poly_from_json(to_json(p)) == p);
        Poly d = random_poly(rng, 4, true);
        RatFunc f(p, d);
        CHECK(ratfunc_from_json(to_json(f)) == f);
    }
    // ascending powers, rational strings
    json j = to_json(Poly(std::vector<Rat>{rat(1, 2), rat(0), rat(-3)}));
    CHECK(j.dump() == R"(["1/2","0","-3"])");
}

TEST_CASE("glp payload") {
    json j = to_json(glp_build(2, rat(1, 2)));
    CHECK(j["n"] == 2);
    CHECK(j["alpha"] == "1/2");
    CHECK(j["coeffs"][0] == "15/8");
}

TEST_CASE("field payload carries parity, chart and energy") {
    Params p(rat(2), rat(5, 2));
    json j = to_json(rs_v(1, p), p.a);
    CHECK(j["parity"] == "odd");
    CHECK(j["omega"] == "2");
    CHECK(j["a"] == "5/2");
    CHECK(j["energy"] == rat_str(seed_energy(Series::L1, 1, p)));
    CHECK(ratfunc_from_json(j["ratfunc"]) == rs_v(1, p).R());

    json e = to_json(isotonic_potential(p), p.a);
    CHECK(e["parity"] == "even");
}

TEST_CASE("extended potential round trip") {
    Params p(rat(2), rat(5, 2));
    ExtendedPotential ep = extend(Series::L1, 2, p);
    json j = to_json(ep);
    ExtendedPotential back = extended_from_json(j);
    CHECK(back.field == ep.field);
    CHECK(back.seed == ep.seed);
    CHECK(back.seed_energy == ep.seed_energy);

    // tampered payloads are rejected
    json bad = j;
    bad["field"]["ratfunc"]["num"][0] = "41/40";
    CHECK_THROWS(extended_from_json(bad));
}

TEST_CASE("spectrum csv rows") {
    Params p(rat(2), rat(2));
    Grid g = default_grid(2.0, 8.0, 800);
    SpectrumReport rep = spectrum_check(std::nullopt, 0, p, 3, g);
    std::string csv = spectrum_csv(rep);
    CHECK(csv.rfind("k,predicted,computed,abs_error,nodes\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
}
