#include "isoext/rs.hpp"

#include <cmath>

namespace isoext {

namespace {

const Poly kXi = Poly::monomial(Rat(1), 1);

// w_0 for effective parameters (omega_eff, a_eff) expressed in the chart of
// omega: (omega_eff/2) x - a_eff/x = x * (omega_eff*xi - a_eff*omega)/(2 xi)
OddField w0_eff(const Rat& omega_chart, const Rat& omega_eff, const Rat& a_eff) {
    Poly num = Poly::monomial(omega_eff, 1) - Poly(Rat(a_eff * omega_chart));
    return OddField(RatFunc(num, Rat(2) * kXi), omega_chart);
}

// bottom-up continued fraction: w_k(a) = w_0(a) - 2k*omega_eff / (w_0(a) + w_{k-1}(a+1))
OddField ladder_cf(int n, const Rat& omega_chart, const Rat& omega_eff, const Rat& a_eff) {
    OddField f = w0_eff(omega_chart, omega_eff, a_eff + n);
    for (int k = 1; k <= n; ++k) {
        Rat ak = a_eff + (n - k);
        OddField w0 = w0_eff(omega_chart, omega_eff, ak);
        Rat ek = Rat(2 * k) * omega_eff;
        f = w0 - ek * odd_invert(w0 + f);
    }
    return f;
}

// -(log P(xi))' as an odd field: x * (-omega P'(xi) / P(xi))
OddField neg_log_derive(const Poly& p, const Rat& omega_chart) {
    if (p.is_zero()) throw std::domain_error("neg_log_derive: zero polynomial");
    return OddField(RatFunc(Rat(-1) * omega_chart * p.derive(), p), omega_chart);
}

// closed form: w_0(a_eff) - (log L_n^(a_eff-1/2)(omega_eff x^2/2))'
OddField ladder_log(int n, const Rat& omega_chart, const Rat& omega_eff, const Rat& a_eff) {
    OddField base = w0_eff(omega_chart, omega_eff, a_eff);
    if (n == 0) return base;
    Rat sigma = omega_eff / omega_chart;
    Poly lag = glp_build(n, a_eff - Rat(1, 2)).poly.compose_scaled(sigma);
    return base + neg_log_derive(lag, omega_chart);
}

OddField ladder(int n, RsMethod m, const Rat& omega_chart, const Rat& omega_eff,
                const Rat& a_eff) {
    if (n < 0) throw std::invalid_argument("rs ladder: negative index");
    return m == RsMethod::Cf ? ladder_cf(n, omega_chart, omega_eff, a_eff)
                             : ladder_log(n, omega_chart, omega_eff, a_eff);
}

}  // namespace

const char* series_name(Series s) {
    switch (s) {
        case Series::L0: return "L0";
        case Series::L1: return "L1";
        case Series::L2: return "L2";
        case Series::L3: default: return "L3";
    }
}

Series series_parse(std::string_view name) {
    if (name == "L0") return Series::L0;
    if (name == "L1") return Series::L1;
    if (name == "L2") return Series::L2;
    if (name == "L3") return Series::L3;
    throw std::invalid_argument("unknown series '" + std::string(name) + "'");
}

EvenField isotonic_potential(const Params& p) {
    RatFunc s = RatFunc(Poly::monomial(p.omega / 2, 1)) +
                RatFunc(Poly(Rat(p.a * (p.a - 1) * p.omega / 2)), kXi) -
                RatFunc(Rat(p.omega * (p.a + Rat(1, 2))));
    return EvenField(s, p.omega);
}

OddField rs_w(int n, const Params& p, RsMethod m) {
    return ladder(n, m, p.omega, p.omega, p.a).with_energy(Rat(2 * n) * p.omega);
}

OddField rs_v(int n, const Params& p, RsMethod m) {
    Rat e = Rat(-2) * (n + p.a + Rat(1, 2)) * p.omega;
    return ladder(n, m, p.omega, -p.omega, p.a).with_energy(e);
}

OddField rs_u(int n, const Params& p, RsMethod m) {
    Rat e = Rat(2) * (n + Rat(1, 2) - p.a) * p.omega;
    return ladder(n, m, p.omega, p.omega, 1 - p.a).with_energy(e);
}

OddField rs_r(int n, const Params& p, RsMethod m) {
    Rat e = Rat(-2 * (n + 1)) * p.omega;
    return ladder(n, m, p.omega, -p.omega, 1 - p.a).with_energy(e);
}

OddField rs_seed(Series s, int n, const Params& p, RsMethod m) {
    switch (s) {
        case Series::L0: return rs_w(n, p, m);
        case Series::L1: return rs_v(n, p, m);
        case Series::L2: return rs_u(n, p, m);
        case Series::L3: default: return rs_r(n, p, m);
    }
}

Rat seed_energy(Series s, int n, const Params& p) {
    switch (s) {
        case Series::L0: return Rat(2 * n) * p.omega;
        case Series::L1: return Rat(-2) * (n + p.a + Rat(1, 2)) * p.omega;
        case Series::L2: return Rat(2) * (n + Rat(1, 2) - p.a) * p.omega;
        case Series::L3: default: return Rat(-2 * (n + 1)) * p.omega;
    }
}

OddField rs_correction(Series s, int n, const Params& p) {
    return rs_seed(s, n, p) - rs_seed(s, 0, p);
}

bool wick_check(int n, const Params& p) {
    RatFunc rv = rs_v(n, p).R();
    RatFunc rw_flipped = -rs_w(n, p).R().compose_scaled(Rat(-1));
    return rv == rw_flipped;
}

bool QuasiRationalWave::square_integrable() const {
    if (gauss_sign >= 0) return false;
    // xi-power of a polynomial: multiplicity of the root at 0
    auto xi_mult = [](const Poly& q) {
        int m = 0;
        while (q.coeff(m) == 0 && m <= q.degree()) ++m;
        return m;
    };
    int mden = xi_mult(rat.den());
    int mnum = xi_mult(rat.num());
    // each xi factor is an x^2
    Rat effective = xpow + 2 * (mnum - mden);
    if (!(effective > Rat(-1, 2))) return false;
    Poly den_core = rat.den();
    for (int i = 0; i < mden; ++i) den_core = poly_div_exact(den_core, kXi);
    if (den_core.degree() > 0 && sturm_count(den_core, Bound::at(Rat(0)), Bound::pos_inf()) > 0)
        return false;
    return true;
}

OddField QuasiRationalWave::rs_function() const {
    // -psi'/psi = x * [ -xpow*omega/(2 xi) - gauss_sign*omega/2 - omega rat'/rat ]
    RatFunc r = RatFunc(Poly(Rat(-xpow * omega / 2)), kXi) +
                RatFunc(Rat(-gauss_sign) * omega / 2) +
                Rat(-1) * omega * (rat.derive() / rat);
    return OddField(r, omega, energy);
}

double QuasiRationalWave::eval(double x) const {
    double xi = to_double(omega) * x * x / 2;
    auto horner = [xi](const Poly& p) {
        double acc = 0;
        for (int k = p.degree(); k >= 0; --k) acc = acc * xi + to_double(p.coeff(k));
        return acc;
    };
    double denom = horner(rat.den());
    double ratio = horner(rat.num()) / denom;
    return std::pow(x, to_double(xpow)) * std::exp(gauss_sign * xi / 2) * ratio;
}

QuasiRationalWave sector_wave(int sector, int n, const Params& p) {
    if (n < 0) throw std::invalid_argument("sector_wave: negative index");
    const Rat half(1, 2);
    const Rat alpha = p.a - half;
    switch (sector) {
        case 1:
            return {p.a, -1, RatFunc(glp_build(n, alpha).poly), Rat(2 * n) * p.omega, p.omega};
        case 2:
            return {p.a, +1, RatFunc(glp_build(n, alpha).poly.compose_scaled(Rat(-1))),
                    Rat(-2) * (n + p.a + half) * p.omega, p.omega};
        case 3:
            return {1 - p.a, -1, RatFunc(glp_build(n, -alpha).poly),
                    Rat(2) * (n + half - p.a) * p.omega, p.omega};
        case 4:
            return {1 - p.a, +1, RatFunc(glp_build(n, -alpha).poly.compose_scaled(Rat(-1))),
                    Rat(-2 * (n + 1)) * p.omega, p.omega};
        default:
            throw std::invalid_argument("sector_wave: sector must be 1..4");
    }
}

Prepotential prepotential(PrepotentialSeed seed, int n, const Params& p) {
    if (n < 0) throw std::invalid_argument("prepotential: negative index");
    if (seed == PrepotentialSeed::V) {
        Poly lag = glp_build(n, p.a - Rat(1, 2)).poly.compose_scaled(Rat(-1));
        return {-p.omega / 4, p.a, lag, p.omega};
    }
    Rat arel = p.a + n;
    Poly lag = glp_build(n, -(arel - Rat(1, 2))).poly;
    return {-p.omega / 4, -(arel - 1), lag, p.omega};
}

OddField prepotential_gradient(const Prepotential& w) {
    // W' = x * [ 2*gauss + xlog*omega/(2 xi) + omega P'/P ]
    RatFunc r = RatFunc(Rat(2) * w.gauss) + RatFunc(Poly(Rat(w.xlog * w.omega / 2)), kXi) +
                w.omega * RatFunc(w.logpoly.derive(), w.logpoly);
    return OddField(r, w.omega);
}

}  // namespace isoext
