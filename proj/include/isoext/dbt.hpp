#pragma once

// Darboux-Baecklund transformations and the four towers of extended
// potentials built from the regularized seeds.

#include "isoext/rs.hpp"

#include <vector>

namespace isoext {

struct ExtendedPotential {
    Series series = Series::L0;
    int n = 0;
    Params params;
    EvenField field;   // V + 2 * seed'
    OddField seed;     // w_n, v_n, u_n or r_n
    Rat seed_energy;
};

// w_k -> -phi + (E_k - E_phi)/(phi - w_k). Both fields must carry energy
// labels; equal energies or identical fields are rejected.
OddField dbt_apply(const OddField& seed, const OddField& target);

ExtendedPotential extend(Series s, int n, const Params& p);

// canonical even part of -f' + f^2 - V + E; identically zero iff f solves
// the RS equation of V at energy E
RatFunc riccati_residual(const OddField& f, const EvenField& V, const Rat& E);

// psi_k^(n) ~ (seed - w_k) psi_k; `normalization_sq` carries E_k - E_seed so
// the symbolic layer never needs a square root
struct TransformedWave {
    QuasiRationalWave wave;
    Rat normalization_sq;
};
TransformedWave transformed_wave(Series s, int n, int k, const Params& p);

// the additional bound state of the (even-n) L3 series: exp(-int r_n),
// energy -2(n+1) omega
QuasiRationalWave l3_extra_state(int n, const Params& p);

struct RegularityReport {
    int pole_count_positive_axis = 0;
    bool regular = true;
    // isolating intervals in xi; [r, r] marks an exact rational pole
    std::vector<std::pair<Rat, Rat>> pole_locations;
};

// distinct poles of the potential on xi > 0; the intrinsic centrifugal
// singularity at xi = 0 is excluded
RegularityReport regularity(const ExtendedPotential& ep);

enum class Coincidence { P1Q1, T1R1 };

// P_1(x; w, a) = Q_1(x; w, a-2) and T_1(x; w, a) = R_1(x; w, a-2)
bool coincidence_check(Coincidence which, const Params& p);

}  // namespace isoext
