#pragma once

// Sturm-sequence counting of distinct real roots. Counting is done on the
// square-free part, so multiple roots are seen once.

#include "isoext/poly.hpp"

#include <optional>
#include <vector>

namespace isoext {

// An interval endpoint: a finite rational or +/- infinity.
struct Bound {
    enum Kind { NegInf, Finite, PosInf } kind = Finite;
    Rat value;

    static Bound neg_inf() { return {NegInf, Rat(0)}; }
    static Bound pos_inf() { return {PosInf, Rat(0)}; }
    static Bound at(Rat v) { return {Finite, std::move(v)}; }
};

// Number of distinct real roots of p in the open interval (lo, hi).
int sturm_count(const Poly& p, const Bound& lo, const Bound& hi);

inline int sturm_count_all(const Poly& p) {
    return sturm_count(p, Bound::neg_inf(), Bound::pos_inf());
}

// 1 + max |c_k / c_deg|; every real root lies in (-B, B)
Rat cauchy_bound(const Poly& p);

// Disjoint rational intervals, each isolating exactly one distinct root of p
// inside (lo, hi). A degenerate [r, r] interval marks an exact rational root.
std::vector<std::pair<Rat, Rat>> isolate_roots(const Poly& p, const Rat& lo, const Rat& hi);

// Roots in (0, +inf), bounded internally via the Cauchy bound.
std::vector<std::pair<Rat, Rat>> isolate_positive_roots(const Poly& p);

}  // namespace isoext
