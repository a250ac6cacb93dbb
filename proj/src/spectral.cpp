#include "isoext/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace isoext {

Grid default_grid(double omega, double e_max, int npoints) {
    double x_min = 1e-3 * std::sqrt(2.0 / omega);
    // Dirichlet wall at the classical turning point of e_max + 20*omega,
    // where omega^2 x^2 / 4 crosses that energy; beyond it the states of
    // interest decay fast enough that truncation is far below the h^2 error
    double x_max = 2.0 * std::sqrt(e_max + 20.0 * omega) / omega;
    return Grid(x_min, x_max, npoints);
}

std::function<double(double)> potential_evaluator(const EvenField& field) {
    std::vector<double> num, den;
    for (const Rat& c : field.S().num().coeffs()) num.push_back(to_double(c));
    for (const Rat& c : field.S().den().coeffs()) den.push_back(to_double(c));
    double omega = to_double(field.omega());
    auto horner = [](const std::vector<double>& c, double x) {
        double acc = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    };
    return [num = std::move(num), den = std::move(den), omega, horner](double x) {
        double xi = omega * x * x / 2;
        return horner(num, xi) / horner(den, xi);
    };
}

Tridiag discretize(const std::function<double(double)>& V, const Grid& g) {
    const double h = g.h();
    const double inv_h2 = 1.0 / (h * h);
    const int m = g.npoints - 2;
    Tridiag T;
    T.diag.resize(m);
    T.off.assign(m > 0 ? m - 1 : 0, -inv_h2);
    for (int i = 0; i < m; ++i) {
        double x = g.x_min + (i + 1) * h;
        double v = V(x);
        if (!std::isfinite(v))
            throw pole_in_window("potential is not finite at x = " + std::to_string(x));
        T.diag[i] = 2.0 * inv_h2 + v;
    }
    return T;
}

int eigen_count_below(const Tridiag& T, double lambda) {
    int count = 0;
    double q = 1.0;
    for (int i = 0; i < T.size(); ++i) {
        double e2 = i > 0 ? T.off[i - 1] * T.off[i - 1] : 0.0;
        q = T.diag[i] - lambda - (i > 0 ? e2 / q : 0.0);
        if (q == 0.0) q = 1e-300;
        if (q < 0) ++count;
    }
    return count;
}

std::vector<double> eigen_lowest(const Tridiag& T, int count) {
    if (count < 1) throw std::invalid_argument("eigen_lowest: count must be >= 1");
    // Gershgorin bounds
    double lo = T.diag[0], hi = T.diag[0];
    for (int i = 0; i < T.size(); ++i) {
        double r = (i > 0 ? std::abs(T.off[i - 1]) : 0.0) +
                   (i + 1 < T.size() ? std::abs(T.off[i]) : 0.0);
        lo = std::min(lo, T.diag[i] - r);
        hi = std::max(hi, T.diag[i] + r);
    }
    std::vector<double> out;
    out.reserve(count);
    for (int k = 0; k < count; ++k) {
        double a = lo, b = hi;
        while (b - a > 1e-10 * std::max(1.0, std::abs(a) + std::abs(b))) {
            double mid = 0.5 * (a + b);
            if (eigen_count_below(T, mid) >= k + 1) b = mid;
            else a = mid;
        }
        out.push_back(0.5 * (a + b));
    }
    return out;
}

std::vector<double> eigenvector(const Tridiag& T, double lambda) {
    const int m = T.size();
    // tridiagonal solve with partial pivoting; fill-in needs one extra band
    std::vector<double> v(m);
    for (int i = 0; i < m; ++i) v[i] = 1.0 / (1.0 + i % 3);  // generic start
    for (int iter = 0; iter < 3; ++iter) {
        std::vector<double> d(m), u1(m, 0.0), u2(m, 0.0), rhs = v;
        for (int i = 0; i < m; ++i) {
            d[i] = T.diag[i] - lambda;
            if (i + 1 < m) u1[i] = T.off[i];
        }
        std::vector<double> l(m > 0 ? m - 1 : 0);
        for (int i = 0; i + 1 < m; ++i) l[i] = T.off[i];
        for (int i = 0; i + 1 < m; ++i) {
            if (std::abs(l[i]) > std::abs(d[i])) {
                std::swap(d[i], l[i]);
                std::swap(u1[i], d[i + 1]);
                std::swap(u2[i], u1[i + 1]);
                std::swap(rhs[i], rhs[i + 1]);
            }
            if (d[i] == 0.0) d[i] = 1e-300;
            double f = l[i] / d[i];
            d[i + 1] -= f * u1[i];
            u1[i + 1] -= f * u2[i];
            rhs[i + 1] -= f * rhs[i];
        }
        if (d[m - 1] == 0.0) d[m - 1] = 1e-300;
        for (int i = m - 1; i >= 0; --i) {
            double s = rhs[i];
            if (i + 1 < m) s -= u1[i] * rhs[i + 1];
            if (i + 2 < m) s -= u2[i] * rhs[i + 2];
            rhs[i] = s / d[i];
        }
        double norm = 0;
        for (double x : rhs) norm += x * x;
        norm = std::sqrt(norm);
        for (int i = 0; i < m; ++i) v[i] = rhs[i] / norm;
    }
    return v;
}

int node_count(const std::vector<double>& v) {
    double peak = 0;
    for (double x : v) peak = std::max(peak, std::abs(x));
    const double floor = 1e-8 * peak;
    int nodes = 0, prev = 0;
    for (double x : v) {
        if (std::abs(x) <= floor) continue;
        int s = x > 0 ? 1 : -1;
        if (prev != 0 && s != prev) ++nodes;
        prev = s;
    }
    return nodes;
}

namespace {

void check_window_free_of_poles(const EvenField& field, const Grid& g) {
    Poly den = field.S().den();
    const Poly xi_poly = Poly::monomial(Rat(1), 1);
    while (!den.is_zero() && den.coeff(0) == 0) den = poly_div_exact(den, xi_poly);
    if (den.degree() <= 0) return;
    Rat omega = field.omega();
    Rat xi_lo = omega * Rat(g.x_min) * Rat(g.x_min) / 2;
    Rat xi_hi = omega * Rat(g.x_max) * Rat(g.x_max) / 2;
    if (sturm_count(den, Bound::at(xi_lo), Bound::at(xi_hi)) > 0 || den.eval(xi_lo) == 0 ||
        den.eval(xi_hi) == 0)
        throw pole_in_window("extended potential has a pole inside the grid window");
}

}  // namespace

SpectrumReport spectrum_check(std::optional<Series> series, int n, const Params& p, int levels,
                              const Grid& g) {
    if (levels < 1) throw std::invalid_argument("spectrum_check: levels must be >= 1");
    if (p.a < 1)
        throw std::invalid_argument(
            "spectrum_check: Dirichlet wall at x_min is only valid for a >= 1");

    EvenField field = series ? extend(*series, n, p).field : isotonic_potential(p);
    check_window_free_of_poles(field, g);

    std::vector<Rat> predicted;
    predicted.reserve(levels);
    if (series && *series == Series::L3) {
        predicted.push_back(Rat(-2 * (n + 1)) * p.omega);
        for (int k = 0; k + 1 < levels; ++k) predicted.push_back(Rat(2 * k) * p.omega);
    } else if (series && *series == Series::L0) {
        // n = 0 is the plain SUSY partner: the ground level is stripped
        for (int k = 0; k < levels; ++k) predicted.push_back(Rat(2 * (k + 1)) * p.omega);
    } else {
        for (int k = 0; k < levels; ++k) predicted.push_back(Rat(2 * k) * p.omega);
    }

    Tridiag T = discretize(potential_evaluator(field), g);
    SpectrumReport rep;
    rep.series = series;
    rep.n = n;
    rep.energies = eigen_lowest(T, levels);
    rep.predicted = predicted;
    for (int k = 0; k < levels; ++k) {
        double err = std::abs(rep.energies[k] - to_double(predicted[k]));
        rep.max_abs_error = std::max(rep.max_abs_error, err);
        rep.node_counts.push_back(node_count(eigenvector(T, rep.energies[k])));
    }
    return rep;
}

namespace {

std::vector<double> sample_wave(const QuasiRationalWave& w, const Grid& g) {
    const int m = g.npoints - 2;
    std::vector<double> v(m);
    double norm = 0;
    for (int i = 0; i < m; ++i) {
        v[i] = w.eval(g.x_min + (i + 1) * g.h());
        norm += v[i] * v[i];
    }
    norm = std::sqrt(norm);
    for (auto& x : v) x /= norm;
    return v;
}

double rayleigh_quotient(const Tridiag& T, const std::vector<double>& v) {
    const int m = T.size();
    double num = 0, den = 0;
    for (int i = 0; i < m; ++i) {
        double tv = T.diag[i] * v[i];
        if (i > 0) tv += T.off[i - 1] * v[i - 1];
        if (i + 1 < m) tv += T.off[i] * v[i + 1];
        num += v[i] * tv;
        den += v[i] * v[i];
    }
    return num / den;
}

double overlap(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0, na = 0, nb = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
        na += a[i] * a[i];
        nb += b[i] * b[i];
    }
    return std::abs(s) / std::sqrt(na * nb);
}

}  // namespace

WaveChecksReport wave_checks(Series s, int n, const Params& p, int k_max, const Grid& g) {
    ExtendedPotential ep = extend(s, n, p);
    check_window_free_of_poles(ep.field, g);
    Tridiag T = discretize(potential_evaluator(ep.field), g);

    WaveChecksReport rep;
    std::vector<std::vector<double>> waves;
    for (int k = 0; k <= k_max; ++k) {
        TransformedWave tw = transformed_wave(s, n, k, p);
        std::vector<double> v = sample_wave(tw.wave, g);
        double rq = rayleigh_quotient(T, v);
        rep.rayleigh.push_back(rq);
        rep.rayleigh_error.push_back(std::abs(rq - to_double(tw.wave.energy)));
        rep.node_counts.push_back(node_count(v));
        waves.push_back(std::move(v));
    }
    if (s == Series::L3 && n % 2 == 0) {
        QuasiRationalWave extra = l3_extra_state(n, p);
        std::vector<double> v = sample_wave(extra, g);
        rep.has_extra_state = true;
        rep.extra_rayleigh_error = std::abs(rayleigh_quotient(T, v) - to_double(extra.energy));
        rep.extra_node_count = node_count(v);
        waves.push_back(std::move(v));
    }
    for (size_t i = 0; i < waves.size(); ++i)
        for (size_t j = i + 1; j < waves.size(); ++j)
            rep.max_overlap = std::max(rep.max_overlap, overlap(waves[i], waves[j]));
    return rep;
}

}  // namespace isoext
