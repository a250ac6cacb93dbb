// isoext: build, verify and sample rational extensions of the isotonic
// oscillator. Exit codes: 0 success, 1 verification/numeric failure,
// 2 usage error.

#include "isoext/json_io.hpp"
#include "isoext/shape.hpp"
#include "isoext/spectral.hpp"
#include "isoext/suite.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace {

using namespace isoext;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rat parse_rat_flag(const std::string& text, const char* flag) {
    try {
        return rat_parse(text);
    } catch (const std::exception&) {
        throw usage_error(std::string(flag) + ": expected a rational like 5/2, got '" + text + "'");
    }
}

Params make_params(const std::string& omega, const std::string& a) {
    Rat w = parse_rat_flag(omega, "--omega");
    Rat av = parse_rat_flag(a, "--a");
    if (!(w > 0)) throw usage_error("--omega must be positive");
    return Params(w, av);
}

void write_output(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    out << payload;
}

// ---- extend -----------------------------------------------------------------

struct ExtendArgs {
    std::string series, omega = "2", a = "2", output;
    int n = -1;
};

int cmd_extend(const ExtendArgs& args) {
    Series s = series_parse(args.series);
    if (args.n < 0) throw usage_error("--n must be a nonnegative integer");
    Params p = make_params(args.omega, args.a);
    ExtendedPotential ep = extend(s, args.n, p);
    RegularityReport reg = regularity(ep);
    if (!reg.regular)
        std::cerr << "warning: potential is singular on (0, inf) (" << reg.pole_count_positive_axis
                  << " pole(s))\n";
    write_output(args.output, to_json(ep).dump(2) + "\n");
    return 0;
}

// ---- check ------------------------------------------------------------------

struct CheckArgs {
    std::string series = "L1", omega = "2", a = "2", alpha = "1/2", which = "P1Q1", output;
    int n = 0;
    int k_max = 5;
};

int check_riccati(const CheckArgs& args, json& report) {
    Series s = series_parse(args.series);
    Params p = make_params(args.omega, args.a);
    ExtendedPotential ep = extend(s, args.n, p);
    EvenField V = isotonic_potential(p);
    bool all_zero = true;
    json residuals = json::array();
    RatFunc seed_res = riccati_residual(ep.seed, V, ep.seed_energy);
    all_zero &= seed_res.is_zero();
    residuals.push_back(json{{"level", "seed"}, {"residual", to_json(seed_res)}});
    for (int k = 0; k <= args.k_max; ++k) {
        OddField wk = rs_w(k, p);
        if (*wk.energy() == ep.seed_energy) continue;
        RatFunc res = riccati_residual(dbt_apply(ep.seed, wk), ep.field, *wk.energy());
        all_zero &= res.is_zero();
        residuals.push_back(json{{"level", k}, {"residual", to_json(res)}});
    }
    report["residuals"] = residuals;
    report["holds"] = all_zero;
    return all_zero ? 0 : 1;
}

int check_shape(const CheckArgs& args, json& report) {
    Series s = series_parse(args.series);
    Params p = make_params(args.omega, args.a);
    ShapeReport rep = shape_check(s, args.n, p);
    report = to_json(rep, p);
    return rep.delta_is_minus_omega_x && rep.partner_identity_holds ? 0 : 1;
}

int check_regularity(const CheckArgs& args, json& report) {
    Series s = series_parse(args.series);
    Params p = make_params(args.omega, args.a);
    report = to_json(regularity(extend(s, args.n, p)));
    return 0;
}

int check_klh(const CheckArgs& args, json& report) {
    Rat alpha = parse_rat_flag(args.alpha, "--alpha");
    KlhPrediction pred = klh_predict(args.n, alpha);
    bool ok = klh_verify(args.n, alpha);
    report = json{{"n", args.n},
                  {"alpha", rat_str(alpha)},
                  {"pos_zeros", pred.pos_zeros},
                  {"neg_zeros", pred.neg_zeros},
                  {"holds", ok}};
    return ok ? 0 : 1;
}

int check_wick(const CheckArgs& args, json& report) {
    Params p = make_params(args.omega, args.a);
    bool ok = true;
    json per_n = json::array();
    for (int n = 0; n <= args.k_max; ++n) {
        bool h = wick_check(n, p);
        ok &= h;
        per_n.push_back(json{{"n", n}, {"holds", h}});
    }
    report["levels"] = per_n;
    report["holds"] = ok;
    return ok ? 0 : 1;
}

int check_coincidence(const CheckArgs& args, json& report) {
    Params p = make_params(args.omega, args.a);
    Coincidence which;
    if (args.which == "P1Q1") which = Coincidence::P1Q1;
    else if (args.which == "T1R1") which = Coincidence::T1R1;
    else throw usage_error("--which must be P1Q1 or T1R1");
    bool ok = coincidence_check(which, p);
    report = json{{"which", args.which}, {"holds", ok}};
    return ok ? 0 : 1;
}

// ---- spectrum ---------------------------------------------------------------

struct SpectrumArgs {
    std::string series = "base", omega = "2", a = "5/2", format = "json", output, tol;
    int n = 0, levels = 6, grid_points = 4000;
    double x_max = 0;
};

int cmd_spectrum(const SpectrumArgs& args) {
    Params p = make_params(args.omega, args.a);
    std::optional<Series> s;
    if (args.series != "base") s = series_parse(args.series);
    if (args.levels < 1) throw usage_error("--levels must be >= 1");
    double w = to_double(p.omega);
    double e_max = 2.0 * (args.levels - 1) * w;
    Grid g = default_grid(w, e_max, args.grid_points);
    if (args.x_max > 0) g = Grid(g.x_min, args.x_max, args.grid_points);
    double tol = args.tol.empty() ? 1e-3 * w : std::stod(args.tol);

    SpectrumReport rep = spectrum_check(s, args.n, p, args.levels, g);
    if (args.format == "csv") write_output(args.output, spectrum_csv(rep));
    else write_output(args.output, to_json(rep, p).dump(2) + "\n");
    if (rep.max_abs_error > tol) {
        std::cerr << "spectrum error " << rep.max_abs_error << " exceeds tolerance " << tol << "\n";
        return 1;
    }
    return 0;
}

// ---- plot-data ----------------------------------------------------------------

struct PlotArgs {
    std::string series = "base", omega = "2", a = "5/2", output;
    int n = 0, samples = 500, levels = 6;
    double x_min = 0.05, x_max = 8.0;
    std::vector<int> waves;
    bool extra_state = false;
};

int cmd_plotdata(const PlotArgs& args) {
    Params p = make_params(args.omega, args.a);
    if (args.samples < 2) throw usage_error("--samples must be >= 2");
    for (int k : args.waves)
        if (k < 0 || k >= args.levels)
            throw usage_error("--k " + std::to_string(k) + " is outside the computed levels 0.." +
                              std::to_string(args.levels - 1));
    std::optional<Series> s;
    if (args.series != "base") s = series_parse(args.series);

    EvenField field = s ? extend(*s, args.n, p).field : isotonic_potential(p);
    {
        // refuse sampling across a pole
        Grid window(args.x_min, args.x_max, args.samples);
        discretize(potential_evaluator(field), window);
    }
    auto V = potential_evaluator(field);

    std::vector<QuasiRationalWave> waves;
    for (int k : args.waves)
        waves.push_back(s ? transformed_wave(*s, args.n, k, p).wave : sector_wave(1, k, p));
    if (args.extra_state) {
        if (!s || *s != Series::L3 || args.n % 2 != 0)
            throw usage_error("--extra-state only exists for the L3 series with even n");
        waves.push_back(l3_extra_state(args.n, p));
    }

    std::ostringstream out;
    out.precision(12);
    out << "x,V";
    for (int k : args.waves) out << ",psi" << k;
    if (args.extra_state) out << ",psi_minus";
    out << "\n";
    double h = (args.x_max - args.x_min) / (args.samples - 1);
    for (int i = 0; i < args.samples; ++i) {
        double x = args.x_min + i * h;
        out << x << "," << V(x);
        for (const auto& wv : waves) out << "," << wv.eval(x);
        out << "\n";
    }
    write_output(args.output, out.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rational extensions of the isotonic oscillator"};
    app.require_subcommand(1);

    ExtendArgs ext;
    CLI::App* cmd_ext = app.add_subcommand("extend", "construct an extended potential");
    cmd_ext->add_option("--series", ext.series, "L0, L1, L2 or L3")->required();
    cmd_ext->add_option("--n", ext.n, "seed index")->required();
    cmd_ext->add_option("--omega", ext.omega, "frequency (rational)");
    cmd_ext->add_option("--a", ext.a, "parameter a = l+1 (rational)");
    cmd_ext->add_option("-o,--output", ext.output, "output file (default stdout)");

    CheckArgs chk;
    CLI::App* cmd_chk = app.add_subcommand("check", "verify exact identities");
    cmd_chk->require_subcommand(1);
    for (const char* name : {"riccati", "shape", "regularity", "klh", "wick", "coincidence"}) {
        CLI::App* sub = cmd_chk->add_subcommand(name);
        sub->add_option("--series", chk.series);
        sub->add_option("--n", chk.n);
        sub->add_option("--omega", chk.omega);
        sub->add_option("--a", chk.a);
        sub->add_option("--alpha", chk.alpha);
        sub->add_option("--which", chk.which);
        sub->add_option("--k-max", chk.k_max);
        sub->add_option("-o,--output", chk.output);
    }

    SpectrumArgs spect;
    CLI::App* cmd_spec = app.add_subcommand("spectrum", "numeric eigenvalues vs the exact ladder");
    cmd_spec->add_option("--series", spect.series, "base, L1, L2 or L3");
    cmd_spec->add_option("--n", spect.n);
    cmd_spec->add_option("--omega", spect.omega);
    cmd_spec->add_option("--a", spect.a);
    cmd_spec->add_option("--levels", spect.levels);
    cmd_spec->add_option("--grid-points", spect.grid_points);
    cmd_spec->add_option("--x-max", spect.x_max);
    cmd_spec->add_option("--tol", spect.tol);
    cmd_spec->add_option("--format", spect.format, "json or csv");
    cmd_spec->add_option("-o,--output", spect.output);

    PlotArgs plot;
    CLI::App* cmd_plot = app.add_subcommand("plot-data", "CSV samples of V and eigenfunctions");
    cmd_plot->add_option("--series", plot.series);
    cmd_plot->add_option("--n", plot.n);
    cmd_plot->add_option("--omega", plot.omega);
    cmd_plot->add_option("--a", plot.a);
    cmd_plot->add_option("--x-min", plot.x_min);
    cmd_plot->add_option("--x-max", plot.x_max);
    cmd_plot->add_option("--samples", plot.samples);
    cmd_plot->add_option("--levels", plot.levels);
    cmd_plot->add_option("--k", plot.waves, "wave indices to sample (repeatable)");
    cmd_plot->add_flag("--extra-state", plot.extra_state, "include the L3 extra bound state");
    cmd_plot->add_option("-o,--output", plot.output);

    CLI::App* cmd_suite = app.add_subcommand("suite", "run the full verification matrix");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_ext->parsed()) return cmd_extend(ext);
        if (cmd_spec->parsed()) return cmd_spectrum(spect);
        if (cmd_plot->parsed()) return cmd_plotdata(plot);
        if (cmd_suite->parsed()) return run_acceptance_main(std::cout);
        if (cmd_chk->parsed()) {
            json report;
            int rc = 0;
            if (cmd_chk->get_subcommand("riccati")->parsed()) rc = check_riccati(chk, report);
            else if (cmd_chk->get_subcommand("shape")->parsed()) rc = check_shape(chk, report);
            else if (cmd_chk->get_subcommand("regularity")->parsed()) rc = check_regularity(chk, report);
            else if (cmd_chk->get_subcommand("klh")->parsed()) rc = check_klh(chk, report);
            else if (cmd_chk->get_subcommand("wick")->parsed()) rc = check_wick(chk, report);
            else rc = check_coincidence(chk, report);
            write_output(chk.output, report.dump(2) + "\n");
            return rc;
        }
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
