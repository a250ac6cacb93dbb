#pragma once

// shared helpers for the test suites

#include "isoext/fields.hpp"
#include "isoext/poly.hpp"

#include <random>

namespace isoext::testing {

inline Rat random_rat(std::mt19937_64& rng, int num_range = 9, int den_range = 5) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    return rat(num(rng), den(rng));
}

inline Poly random_poly(std::mt19937_64& rng, int max_deg, bool nonzero = false) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    int d = deg(rng);
    std::vector<Rat> c(static_cast<size_t>(d) + 1);
    for (auto& x : c) x = random_rat(rng);
    Poly p{std::move(c)};
    if (nonzero && p.is_zero()) return Poly::one();
    return p;
}

// omega > 0; a = k/3 keeps clear of the integer and half-integer degeneracies
inline Params random_params(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> wnum(1, 6), wden(1, 4), anum(4, 25);
    int na = anum(rng);
    while (na % 3 == 0) na = anum(rng);
    return Params(rat(wnum(rng), wden(rng)), rat(na, 3));
}

}  // namespace isoext::testing
