#pragma once

// The isotonic oscillator, its Riccati-Schroedinger functions w_n, and the
// three parameter-inversion images v_n (omega -> -omega), u_n (a -> 1-a),
// r_n (both). Each is built two independent ways: bottom-up evaluation of
// the terminating continued fraction, and the Laguerre log-derivative closed
// form. Both land in the same canonical field, which the tests exploit.

#include "isoext/fields.hpp"
#include "isoext/laguerre.hpp"

namespace isoext {

enum class Series { L0, L1, L2, L3 };

const char* series_name(Series s);
Series series_parse(std::string_view name);

enum class RsMethod { Cf, Log };

// V(x; omega, a) = omega^2 x^2/4 + a(a-1)/x^2 - omega(a + 1/2), so E_0 = 0.
EvenField isotonic_potential(const Params& p);

// w_n, energy 2 n omega
OddField rs_w(int n, const Params& p, RsMethod m = RsMethod::Log);
// v_n = w_n(omega -> -omega), energy -2(n + a + 1/2) omega
OddField rs_v(int n, const Params& p, RsMethod m = RsMethod::Log);
// u_n = w_n(a -> 1-a), energy 2(n + 1/2 - a) omega
OddField rs_u(int n, const Params& p, RsMethod m = RsMethod::Log);
// r_n = w_n(omega -> -omega, a -> 1-a), energy -2(n + 1) omega
OddField rs_r(int n, const Params& p, RsMethod m = RsMethod::Log);

// seed of the given series: w_n, v_n, u_n, r_n for L0..L3
OddField rs_seed(Series s, int n, const Params& p, RsMethod m = RsMethod::Log);
Rat seed_energy(Series s, int n, const Params& p);

// the pure correction terms: R_n = w_n - w_0, Q_n = v_n - v_0, etc.
OddField rs_correction(Series s, int n, const Params& p);

// true iff R_v(xi) = -R_w(-xi) in canonical form, i.e. v_n(x) = i w_n(ix)
bool wick_check(int n, const Params& p);

// Quasi-rational eigenfunction shape x^xpow * exp(gauss_sign*omega*x^2/4) * rat(xi).
struct QuasiRationalWave {
    Rat xpow;
    int gauss_sign = -1;  // -1 or +1
    RatFunc rat;
    Rat energy;
    Rat omega;  // chart of rat's xi

    // gauss decay, xpow integrable at 0, and rat pole-free on (0, inf)
    bool square_integrable() const;
    // -psi'/psi as an odd field carrying this wave's energy
    OddField rs_function() const;
    double eval(double x) const;
};

// the four quasi-rational sectors of the isotonic problem
QuasiRationalWave sector_wave(int sector, int n, const Params& p);

// W = gauss*x^2 + xlog*log(x) + log(logpoly(xi))
struct Prepotential {
    Rat gauss;
    Rat xlog;
    Poly logpoly;
    Rat omega;
};

enum class PrepotentialSeed { V, U };

// V-branch: (-omega/4, a, L_n^(a-1/2)(-xi)).
// U-branch, with the a -> a+n relabeling: (-omega/4, -(a+n-1), L_n^(-(a+n-1/2))(xi)).
Prepotential prepotential(PrepotentialSeed seed, int n, const Params& p);

// dW/dx as an odd field
OddField prepotential_gradient(const Prepotential& w);

}  // namespace isoext
