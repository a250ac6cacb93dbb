#include "isoext/suite.hpp"

#include "isoext/json_io.hpp"
#include "isoext/shape.hpp"
#include "isoext/spectral.hpp"

#include <chrono>
#include <cmath>
#include <ostream>
#include <random>
#include <sstream>

namespace isoext {

namespace {

using clock_type = std::chrono::steady_clock;

const Poly kXi = Poly::monomial(Rat(1), 1);

std::vector<Params> parameter_grid() {
    std::vector<Rat> omegas = {rat(1), rat(2), rat(5, 2)};
    std::vector<Rat> as = {rat(1), rat(2), rat(7, 2)};
    std::vector<Params> grid;
    for (const Rat& w : omegas)
        for (const Rat& a : as) grid.emplace_back(w, a);
    return grid;
}

// Deterministic "random" rationals. Denominator-3 values of a stay clear of
// the degenerate half-integer and integer points.
std::vector<Params> random_params(int count, unsigned seed = 20110405) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> wnum(1, 6), wden(1, 4), anum(4, 25);
    std::vector<Params> out;
    while (static_cast<int>(out.size()) < count) {
        int na = anum(rng);
        if (na % 3 == 0) continue;
        out.emplace_back(rat(wnum(rng), wden(rng)), rat(na, 3));
    }
    return out;
}

struct Failure {
    std::ostringstream msg;
};

class CriterionRun {
  public:
    CriterionRun(int id, std::string title) : result_{id, std::move(title), true, 0, {}} {
        start_ = clock_type::now();
    }

    void require(bool ok, const std::string& what) {
        if (!ok) {
            result_.passed = false;
            result_.notes.push_back("FAILED: " + what);
        }
    }
    void note(const std::string& s) { result_.notes.push_back(s); }

    CriterionResult finish(double time_limit_s = 0) {
        result_.seconds =
            std::chrono::duration<double>(clock_type::now() - start_).count();
        if (time_limit_s > 0 && result_.seconds > time_limit_s) {
            result_.passed = false;
            result_.notes.push_back("FAILED: runtime " + std::to_string(result_.seconds) +
                                    " s exceeds " + std::to_string(time_limit_s) + " s");
        }
        return result_;
    }

  private:
    CriterionResult result_;
    clock_type::time_point start_;
};

std::string subcase(Series s, int n, const Params& p, int k = -1) {
    std::ostringstream out;
    out << series_name(s) << " n=" << n << " omega=" << rat_str(p.omega)
        << " a=" << rat_str(p.a);
    if (k >= 0) out << " k=" << k;
    return out.str();
}

// ---- criterion 1: exact Riccati closure ------------------------------------

CriterionResult criterion1() {
    CriterionRun run(1, "exact Riccati closure for all four series");
    int checked = 0, skipped = 0;
    for (const Params& p : parameter_grid()) {
        EvenField V = isotonic_potential(p);
        std::vector<OddField> targets;
        for (int k = 0; k <= 5; ++k) targets.push_back(rs_w(k, p));
        for (Series s : {Series::L0, Series::L1, Series::L2, Series::L3}) {
            for (int n = 0; n <= 8; ++n) {
                ExtendedPotential ep = extend(s, n, p);
                run.require(riccati_residual(ep.seed, V, ep.seed_energy).is_zero(),
                            "seed RS residual nonzero: " + subcase(s, n, p));
                for (int k = 0; k <= 5; ++k) {
                    if (*targets[k].energy() == ep.seed_energy) {
                        // the DBT needs distinct energies; such pairs are
                        // outside its domain (L0 k=n; L2 at a=7/2, k=n-3)
                        ++skipped;
                        continue;
                    }
                    OddField transformed = dbt_apply(ep.seed, targets[k]);
                    run.require(
                        riccati_residual(transformed, ep.field, *targets[k].energy()).is_zero(),
                        "transformed RS residual nonzero: " + subcase(s, n, p, k));
                    ++checked;
                }
            }
        }
    }
    run.note(std::to_string(checked) + " transformed residuals identically zero; " +
             std::to_string(skipped) + " (seed,target) pairs excluded by the E_k != E_seed precondition");
    return run.finish(30.0);
}

// ---- criterion 2: closed-form reproduction ---------------------------------

RatFunc quesne_v1_correction(const Params& p) {
    // 4w/(2xi+2a+1) - 8w(2a+1)/(2xi+2a+1)^2
    Poly d = Rat(2) * kXi + Poly(Rat(2 * p.a + 1));
    return RatFunc(Poly(Rat(4 * p.omega)), d) - RatFunc(Poly(Rat(8 * p.omega * (2 * p.a + 1))), d * d);
}

RatFunc p2_display(const Params& p, const Rat& shift) {
    // -4w x (2xi+d) / ((2xi+d)^2 + 2d), as the R-part of an odd field
    Poly t = Rat(2) * kXi + Poly(shift);
    return RatFunc(Rat(-4) * p.omega * t, t * t + Poly(Rat(2) * shift));
}

RatFunc t2_display(const Params& p, const Rat& shift) {
    // -4w x (2xi-e) / ((2xi-e)^2 + 2e)
    Poly t = Rat(2) * kXi - Poly(shift);
    return RatFunc(Rat(-4) * p.omega * t, t * t + Poly(Rat(2) * shift));
}

RatFunc quesne_superpotential_v2(const Params& p) {
    // w/2 + (a-1) w/(2 xi) + 4w(2xi+2a+1)/((2xi+2a+1)^2 - 2(2a+1))
    Rat c = 2 * p.a + 1;
    Poly t = Rat(2) * kXi + Poly(c);
    return RatFunc(Rat(p.omega / 2)) + RatFunc(Poly(Rat((p.a - 1) * p.omega / 2)), kXi) +
           RatFunc(Rat(4) * p.omega * t, t * t - Poly(Rat(2) * c));
}

CriterionResult criterion2() {
    CriterionRun run(2, "closed-form reproduction of the published expressions");
    for (const Params& p : std::vector<Params>{{rat(2), rat(2)}, {rat(1), rat(3)},
                                               {rat(5, 2), rat(7, 2)}, {rat(3), rat(13, 3)}}) {
        // first L1 potential
        EvenField v1 = extend(Series::L1, 1, p).field;
        EvenField shown = isotonic_potential(Params(p.omega, p.a + 1)) +
                          EvenField(quesne_v1_correction(p), p.omega);
        run.require(v1 == shown, "L1 n=1 potential differs from the published form at " +
                                     subcase(Series::L1, 1, p));

        // second L2 correction
        run.require(rs_correction(Series::L2, 2, p).R() == p2_display(p, Rat(2 * p.a - 5)),
                    "P_2 differs from the published form at " + subcase(Series::L2, 2, p));

        // second L3 correction: the published display carries an off-by-one
        // in a (its own n=1 case and Laguerre form both give 2a-5, not 2a-3)
        RatFunc t2 = rs_correction(Series::L3, 2, p).R();
        run.require(t2 == t2_display(p, Rat(2 * p.a - 5)),
                    "T_2 differs from the corrected closed form at " + subcase(Series::L3, 2, p));
        run.require(t2_display(p, Rat(2 * p.a - 3)) ==
                        rs_correction(Series::L3, 2, Params(p.omega, p.a + 1)).R(),
                    "published T_2 display does not equal T_2(a+1) at " +
                        subcase(Series::L3, 2, p));

        // superpotential of the second L1 extension
        run.require((-rs_v(2, Params(p.omega, p.a - 1))).R() == quesne_superpotential_v2(p),
                    "-v_2(a-1) differs from the published superpotential at " +
                        subcase(Series::L1, 2, p));
    }
    run.note("T_2 display check uses the documented correction 2a-3 -> 2a-5; the literal display"
             " equals T_2 at a+1 (verified exactly), consistent with the series' own n=1 case");
    return run.finish();
}

// ---- criterion 3: shape invariance of L1 and L2 ----------------------------

CriterionResult criterion3() {
    CriterionRun run(3, "shape invariance of the L1 and L2 towers");
    for (const Params& p : random_params(10)) {
        for (Series s : {Series::L1, Series::L2}) {
            for (int n = 0; n <= 8; ++n) {
                ShapeReport rep = shape_check(s, n, p);
                run.require(rep.delta_is_minus_omega_x,
                            "Delta != -omega*x at " + subcase(s, n, p));
                run.require(rep.partner_identity_holds,
                            "partner identity fails at " + subcase(s, n, p));
            }
        }
    }
    run.note("Delta_n = -omega*x and Vtilde(a) = V(a_1) + 2 omega for n <= 8, 10 parameter sets");
    return run.finish(10.0);
}

// ---- criterion 4: L3 partner identity ---------------------------------------

CriterionResult criterion4() {
    CriterionRun run(4, "L3 partner collapses to the isotonic potential");
    for (const Params& p : parameter_grid()) {
        for (int l = 0; l <= 4; ++l) {
            ExtendedPotential ep = extend(Series::L3, 2 * l, p);
            run.require(susy_partner(ep) == isotonic_potential(p),
                        "L3 partner identity fails at " + subcase(Series::L3, 2 * l, p));
        }
    }
    return run.finish();
}

// ---- criterion 5: Kienast-Lawton-Hahn ---------------------------------------

CriterionResult criterion5() {
    CriterionRun run(5, "KLH zero counts and L0 pole counts");
    for (int n = 0; n <= 8; ++n) {
        for (int num = 1; num <= 17; num += 2) {
            for (int s : {1, -1}) {
                Rat alpha = rat(s * num, 2);
                run.require(klh_verify(n, alpha), "KLH mismatch at n=" + std::to_string(n) +
                                                      " alpha=" + rat_str(alpha));
            }
        }
    }
    for (long a = 1; a <= 3; ++a) {
        Params p(rat(2), rat(a));
        for (int n = 0; n <= 8; ++n) {
            RegularityReport rep = regularity(extend(Series::L0, n, p));
            run.require(rep.pole_count_positive_axis == n,
                        "L0 pole count != n at " + subcase(Series::L0, n, p));
        }
    }
    return run.finish();
}

// ---- criterion 6: coincidence and Wick identities ---------------------------

CriterionResult criterion6() {
    CriterionRun run(6, "P1=Q1(a-2), T1=R1(a-2) and the Wick identity");
    for (const Params& p : random_params(10)) {
        run.require(coincidence_check(Coincidence::P1Q1, p),
                    "P1 != Q1(a-2) at omega=" + rat_str(p.omega) + " a=" + rat_str(p.a));
        run.require(coincidence_check(Coincidence::T1R1, p),
                    "T1 != R1(a-2) at omega=" + rat_str(p.omega) + " a=" + rat_str(p.a));
        for (int n = 0; n <= 8; ++n)
            run.require(wick_check(n, p), "Wick identity fails at n=" + std::to_string(n) +
                                              " omega=" + rat_str(p.omega) + " a=" + rat_str(p.a));
    }
    return run.finish();
}

// ---- criterion 7: numeric isospectrality ------------------------------------

void check_ladder(CriterionRun& run, const SpectrumReport& rep, const std::string& label,
                  double tol) {
    run.require(rep.max_abs_error <= tol,
                label + ": max |E_computed - E_exact| = " + std::to_string(rep.max_abs_error) +
                    " > " + std::to_string(tol));
    for (size_t k = 0; k < rep.node_counts.size(); ++k)
        run.require(rep.node_counts[k] == static_cast<int>(k),
                    label + ": eigenvector " + std::to_string(k) + " has " +
                        std::to_string(rep.node_counts[k]) + " nodes");
}

CriterionResult criterion7() {
    CriterionRun run(7, "numeric (quasi-)isospectrality on the default grid");
    const double tol = 4e-3;
    const Params p(rat(2), rat(5, 2));
    const int levels = 6;
    Grid g = default_grid(2.0, 2.0 * (levels - 1) * 2.0);

    check_ladder(run, spectrum_check(std::nullopt, 0, p, levels, g), "base isotonic", tol);
    for (int n = 0; n <= 3; ++n)
        check_ladder(run, spectrum_check(Series::L1, n, p, levels, g),
                     "L1 n=" + std::to_string(n), tol);
    for (int n = 0; n <= 1; ++n)
        check_ladder(run, spectrum_check(Series::L2, n, p, levels, g),
                     "L2 n=" + std::to_string(n), tol);

    // L2 at a = 5/2 leaves its regular domain a > n + 1/2 for n >= 2.
    // n=2 collapses exactly onto the ordinary SUSY partner (u_2 = w_0, so
    // U^(2) = V(a+1) + 2 omega, spectrum {2(k+1) omega}); n=3 is singular.
    // Both facts are verified exactly; the E_k = 2k*omega ladder is then
    // demonstrated inside the regular domain at a = 9/2.
    {
        run.require(rs_u(2, p) == rs_w(0, p), "L2 n=2 a=5/2: u_2 does not collapse onto w_0");
        EvenField u2 = extend(Series::L2, 2, p).field;
        EvenField susy = isotonic_potential(Params(rat(2), rat(7, 2))) + Rat(4);
        run.require(u2 == susy, "L2 n=2 a=5/2: U^(2) != V(a=7/2) + 2 omega");
        Tridiag T = discretize(potential_evaluator(u2), g);
        double e0 = eigen_lowest(T, 1)[0];
        run.require(std::abs(e0 - 4.0) <= tol,
                    "L2 n=2 a=5/2: lowest level of the collapsed partner is not 2*omega");
        run.note("L2 n=2 at a=5/2 sits on the boundary a = n+1/2: seed degenerates to w_0 and the"
                 " extension is the plain SUSY partner V(7/2)+2w (verified exactly; lowest level 4)");

        bool singular_refused = false;
        RegularityReport reg3 = regularity(extend(Series::L2, 3, p));
        try {
            spectrum_check(Series::L2, 3, p, levels, g);
        } catch (const pole_in_window&) {
            singular_refused = true;
        }
        run.require(reg3.pole_count_positive_axis == 1 && singular_refused,
                    "L2 n=3 a=5/2: expected exactly one pole and a pole-in-window refusal");
        run.note("L2 n=3 at a=5/2 is singular (one pole on xi>0, isolated by Sturm bisection);"
                 " the solver refuses it, as it must");

        const Params p_in(rat(2), rat(9, 2));
        for (int n = 2; n <= 3; ++n)
            check_ladder(run, spectrum_check(Series::L2, n, p_in, levels, g),
                         "L2 n=" + std::to_string(n) + " (a=9/2, inside the regular domain)", tol);
    }

    // L3 n=2 at a=7/2: one extra level at -2(n+1) omega = -12
    {
        const Params p3(rat(2), rat(7, 2));
        SpectrumReport rep = spectrum_check(Series::L3, 2, p3, levels + 1, g);
        run.require(std::abs(rep.energies[0] + 12.0) <= tol,
                    "L3 n=2: extra level is not at -12 (got " + std::to_string(rep.energies[0]) +
                        ")");
        check_ladder(run, rep, "L3 n=2", tol);
    }
    return run.finish(60.0);
}

// ---- criterion 8: second-order convergence ----------------------------------

CriterionResult criterion8() {
    CriterionRun run(8, "eigenvalue error scales as h^2 under grid refinement");
    const Params p(rat(2), rat(5, 2));
    const int levels = 6;
    Grid coarse = default_grid(2.0, 2.0 * (levels - 1) * 2.0, 1200);
    Grid fine = coarse.refined();
    SpectrumReport rc = spectrum_check(std::nullopt, 0, p, levels, coarse);
    SpectrumReport rf = spectrum_check(std::nullopt, 0, p, levels, fine);
    for (int k = 0; k < levels; ++k) {
        double exact = 4.0 * k;
        double ec = std::abs(rc.energies[k] - exact);
        double ef = std::abs(rf.energies[k] - exact);
        if (ef < 1e-11) {
            run.note("level " + std::to_string(k) + ": fine-grid error at rounding floor, skipped");
            continue;
        }
        double ratio = ec / ef;
        std::ostringstream msg;
        msg << "level " << k << ": error ratio " << ratio << " outside [3.2, 4.8]";
        run.require(ratio >= 3.2 && ratio <= 4.8, msg.str());
    }
    return run.finish();
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::ostream& out) {
    std::vector<CriterionResult> results;
    results.push_back(criterion1());
    results.push_back(criterion2());
    results.push_back(criterion3());
    results.push_back(criterion4());
    results.push_back(criterion5());
    results.push_back(criterion6());
    results.push_back(criterion7());
    results.push_back(criterion8());
    for (const CriterionResult& r : results) {
        out << (r.passed ? "[PASS]" : "[FAIL]") << " criterion " << r.id << ": " << r.title << " ("
            << r.seconds << " s)\n";
        for (const std::string& n : r.notes) out << "       - " << n << "\n";
    }
    return results;
}

int run_acceptance_main(std::ostream& out) {
    std::vector<CriterionResult> results = run_acceptance(out);
    int failed = 0;
    for (const auto& r : results)
        if (!r.passed) ++failed;
    out << (failed == 0 ? "all criteria passed\n"
                        : std::to_string(failed) + " criteria failed\n");
    return failed == 0 ? 0 : 1;
}

}  // namespace isoext
