#pragma once

// Exact shape-invariance verification for the L1/L2 series and the L3
// partner identity.

#include "isoext/dbt.hpp"

namespace isoext {

// raised when an isolated parameter value makes an intermediate denominator
// vanish identically (e.g. a = n + 1/2 collapses u_n onto w_0)
struct degenerate_parameter : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShapeReport {
    Series series = Series::L1;
    int n = 0;
    OddField delta_field;
    bool delta_is_minus_omega_x = false;
    bool partner_identity_holds = false;
};

// ep.field + 2 * (ground-level RS function)'. For L1/L2 the ground RS
// function is dbt_apply(seed, w_0); for L3 it is -r_n, so the partner
// collapses to the original isotonic potential.
EvenField susy_partner(const ExtendedPotential& ep);

// E_{-(n+a+1/2)}/(v_n - w_0) + v_0(a) + v_n(a_1); equals -omega*x
OddField delta1(int n, const Params& p);
// E_{n+1/2-a}/(u_n - w_0) + v_0(a) + u_n(a_1); equals -omega*x
OddField delta2(int n, const Params& p);

// verifies both routes for L1/L2: the Delta identity and the direct
// partner identity  Vtilde^(n)(a) = V^(n)(a_1) + 2 omega
ShapeReport shape_check(Series s, int n, const Params& p);

}  // namespace isoext
