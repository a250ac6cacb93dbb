#include "isoext/shape.hpp"

namespace isoext {

namespace {

OddField minus_omega_x(const Rat& omega) {
    return OddField(RatFunc(Rat(-1) * omega), omega);
}

OddField delta_common(const OddField& seed, const OddField& seed_shifted, const Params& p,
                      const char* label) {
    OddField w0 = rs_w(0, p);
    OddField diff = seed - w0;
    if (diff.is_zero())
        throw degenerate_parameter(std::string(label) +
                                   ": seed coincides with w_0 at this parameter value (a = n + 1/2)");
    return *seed.energy() * odd_invert(diff) + rs_v(0, p) + seed_shifted;
}

}  // namespace

EvenField susy_partner(const ExtendedPotential& ep) {
    if (ep.series == Series::L3)
        return ep.field + Rat(2) * derive(-ep.seed);
    OddField ground = dbt_apply(ep.seed, rs_w(0, ep.params));
    return ep.field + Rat(2) * derive(ground);
}

OddField delta1(int n, const Params& p) {
    if (n < 0) throw std::invalid_argument("delta1: negative index");
    return delta_common(rs_v(n, p), rs_v(n, p.shifted_a(1)), p, "delta1");
}

OddField delta2(int n, const Params& p) {
    if (n < 0) throw std::invalid_argument("delta2: negative index");
    return delta_common(rs_u(n, p), rs_u(n, p.shifted_a(1)), p, "delta2");
}

ShapeReport shape_check(Series s, int n, const Params& p) {
    if (s != Series::L1 && s != Series::L2)
        throw std::invalid_argument("shape_check: only the L1 and L2 series are shape invariant");
    OddField delta = s == Series::L1 ? delta1(n, p) : delta2(n, p);
    bool delta_ok = delta == minus_omega_x(p.omega);

    EvenField partner = susy_partner(extend(s, n, p));
    EvenField shifted = extend(s, n, Params(p.omega, p.a + 1)).field;
    bool direct_ok = (partner - shifted - Rat(2) * p.omega).is_zero();
    // the Delta route must reproduce the same partner: Vtilde = V^(n)(a_1) - 2 Delta'
    bool routes_agree = partner == shifted - Rat(2) * derive(delta);

    return ShapeReport{s, n, std::move(delta), delta_ok, direct_ok && routes_agree};
}

}  // namespace isoext
