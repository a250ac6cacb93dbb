#include "isoext/dbt.hpp"

namespace isoext {

OddField dbt_apply(const OddField& seed, const OddField& target) {
    if (!seed.energy() || !target.energy())
        throw std::invalid_argument("dbt_apply: both fields need energy labels");
    Rat delta = *target.energy() - *seed.energy();
    if (delta == 0) throw std::invalid_argument("dbt_apply: seed and target energies coincide");
    OddField diff = seed - target;
    if (diff.is_zero()) throw std::invalid_argument("dbt_apply: seed and target fields coincide");
    return ((-seed) + delta * odd_invert(diff)).with_energy(*target.energy());
}

ExtendedPotential extend(Series s, int n, const Params& p) {
    if (n < 0) throw std::invalid_argument("extend: negative index");
    OddField seed = rs_seed(s, n, p);
    EvenField field = isotonic_potential(p) + Rat(2) * derive(seed);
    return ExtendedPotential{s, n, p, std::move(field), std::move(seed), seed_energy(s, n, p)};
}

RatFunc riccati_residual(const OddField& f, const EvenField& V, const Rat& E) {
    if (f.omega() != V.omega()) throw chart_mismatch();
    EvenField res = odd_mul(f, f) - derive(f) - V;
    return res.S() + RatFunc(E);
}

TransformedWave transformed_wave(Series s, int n, int k, const Params& p) {
    if (k < 0) throw std::invalid_argument("transformed_wave: negative level");
    OddField seed = rs_seed(s, n, p);
    OddField wk = rs_w(k, p);
    OddField diff = seed - wk;
    QuasiRationalWave psi = sector_wave(1, k, p);
    // (x * D(xi)) * x^a e^{-omega x^2/4} L_k(xi)
    QuasiRationalWave out{psi.xpow + 1, -1, diff.R() * psi.rat, psi.energy, p.omega};
    return {std::move(out), *wk.energy() - seed_energy(s, n, p)};
}

QuasiRationalWave l3_extra_state(int n, const Params& p) {
    // exp(-int r_n) = x^(a-1) e^{-omega x^2/4} / L_n^{-(a-1/2)}(-xi)
    Poly lag = glp_build(n, -(p.a - Rat(1, 2))).poly.compose_scaled(Rat(-1));
    return {p.a - 1, -1, RatFunc(Poly::one(), lag), Rat(-2 * (n + 1)) * p.omega, p.omega};
}

RegularityReport regularity(const ExtendedPotential& ep) {
    Poly den = ep.field.S().den();
    // strip the intrinsic xi = 0 factor
    const Poly xi = Poly::monomial(Rat(1), 1);
    while (!den.is_zero() && den.coeff(0) == 0) den = poly_div_exact(den, xi);
    RegularityReport rep;
    if (den.degree() > 0) {
        rep.pole_count_positive_axis = sturm_count(den, Bound::at(Rat(0)), Bound::pos_inf());
        rep.pole_locations = isolate_positive_roots(den);
    }
    rep.regular = rep.pole_count_positive_axis == 0;
    return rep;
}

bool coincidence_check(Coincidence which, const Params& p) {
    Params shifted(p.omega, p.a - 2);
    if (which == Coincidence::P1Q1)
        return rs_correction(Series::L2, 1, p) == rs_correction(Series::L1, 1, shifted);
    return rs_correction(Series::L3, 1, p) == rs_correction(Series::L0, 1, shifted);
}

}  // namespace isoext
