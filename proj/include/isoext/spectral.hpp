#pragma once

// Independent numerical check: central finite differences on (0, inf) with
// Dirichlet walls, eigenvalues by bisection on the tridiagonal Sturm count,
// eigenvectors by inverse iteration. Exact rationals cross into floating
// point only here.

#include "isoext/dbt.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace isoext {

struct pole_in_window : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Grid {
    double x_min = 0;
    double x_max = 0;
    int npoints = 0;

    Grid(double lo, double hi, int n) : x_min(lo), x_max(hi), npoints(n) {
        if (!(0 < lo && lo < hi) || n < 3) throw std::invalid_argument("Grid: need 0 < x_min < x_max and npoints >= 3");
    }
    double h() const { return (x_max - x_min) / (npoints - 1); }
    // same window, half the spacing
    Grid refined() const { return Grid(x_min, x_max, 2 * (npoints - 1) + 1); }
};

// x_min = 1e-3 sqrt(2/omega), x_max past the classical turning point of
// e_max + 20*omega, npoints = 4000
Grid default_grid(double omega, double e_max, int npoints = 4000);

struct Tridiag {
    std::vector<double> diag;
    std::vector<double> off;  // size diag.size() - 1
    int size() const { return static_cast<int>(diag.size()); }
};

// pointwise double evaluation of an even field; poles surface as inf/nan
std::function<double(double)> potential_evaluator(const EvenField& field);

// Dirichlet second-difference Hamiltonian on the interior nodes
Tridiag discretize(const std::function<double(double)>& V, const Grid& g);

// number of eigenvalues of T strictly below lambda
int eigen_count_below(const Tridiag& T, double lambda);

// the `count` smallest eigenvalues, ascending, each bracketed by bisection
// to width <= 1e-10 * max(1, |lambda|)
std::vector<double> eigen_lowest(const Tridiag& T, int count);

// inverse-iteration eigenvector for an eigenvalue estimate, normalized
std::vector<double> eigenvector(const Tridiag& T, double lambda);

// strict sign changes, ignoring entries below a noise floor
int node_count(const std::vector<double>& v);

struct SpectrumReport {
    std::optional<Series> series;  // nullopt = the isotonic base
    int n = 0;
    std::vector<double> energies;
    std::vector<Rat> predicted;
    double max_abs_error = 0;
    std::vector<int> node_counts;
};

// Computes the lowest `levels` eigenvalues of the extended potential (or the
// base isotonic when series is nullopt) and compares with the exact spectrum.
// Refuses singular-on-window potentials and a < 1.
SpectrumReport spectrum_check(std::optional<Series> series, int n, const Params& p, int levels,
                              const Grid& g);

struct WaveChecksReport {
    std::vector<double> rayleigh;        // Rayleigh quotient per level 0..k_max
    std::vector<double> rayleigh_error;  // |rayleigh - E_k|
    std::vector<int> node_counts;
    double max_overlap = 0;  // worst normalized pairwise overlap
    bool has_extra_state = false;
    double extra_rayleigh_error = 0;
    int extra_node_count = 0;
};

// Samples the exact quasi-rational eigenfunctions of the extension on the
// grid and checks Rayleigh quotients, quadrature orthogonality and node
// counts; for even-n L3 also the nodeless extra ground state.
WaveChecksReport wave_checks(Series s, int n, const Params& p, int k_max, const Grid& g);

}  // namespace isoext
