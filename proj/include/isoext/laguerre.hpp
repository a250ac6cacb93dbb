#pragma once

// Generalized Laguerre polynomials L_n^(alpha) with arbitrary rational
// parameter, their recurrence identities, and the Kienast-Lawton-Hahn
// classification of real zeros.

#include "isoext/poly.hpp"
#include "isoext/sturm.hpp"

#include <string>

namespace isoext {

struct Glp {
    int n = 0;
    Rat alpha;
    Poly poly;  // in the argument variable z, degree n, leading (-1)^n/n!
};

// Terminating series: sum_{k=0..n} (-1)^k C(n+alpha, n-k) z^k / k!.
// Valid for every rational alpha.
Glp glp_build(int n, const Rat& alpha);

// Same polynomial from the three-term recurrence
//   n L_n = (2n-1+alpha-z) L_{n-1} - (n-1+alpha) L_{n-2},
// kept as an independent construction route for cross-checks.
Poly glp_recurrence(int n, const Rat& alpha);

// Generalized binomial C(alpha, k) for rational alpha.
Rat binomial(const Rat& alpha, int k);

enum class GlpIdentity { Sum, ThreeTerm, Contiguous };

// Residual polynomial; identically zero when the identity holds.
//   Sum:        L_n^(a) + L_{n-1}^(a+1) - L_n^(a+1)
//   ThreeTerm:  (n+a) L_{n-1}^(a) - z L_n^(a+1) - (n-z) L_n^(a)
//   Contiguous: z L_{n-1}^(a+1) - (n+a) L_{n-1}^(a) + n L_n^(a)
Poly verify_identity(GlpIdentity id, int n, const Rat& alpha);

struct KlhPrediction {
    int pos_zeros = 0;
    int neg_zeros = 0;  // always 0 or 1
};

// Zero counts of L_n^(alpha) per the Kienast-Lawton-Hahn theorem.
// Requires alpha not a negative integer. [alpha] is read as floor.
KlhPrediction klh_predict(int n, const Rat& alpha);

// true iff Sturm counts of L_n^(alpha) on (0,inf) and (-inf,0) match the
// theorem's prediction
bool klh_verify(int n, const Rat& alpha);

}  // namespace isoext
