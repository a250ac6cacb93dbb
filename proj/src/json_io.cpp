#include "isoext/json_io.hpp"

#include <sstream>

namespace isoext {

json to_json(const Rat& q) { return rat_str(q); }

json to_json(const Poly& p) {
    json arr = json::array();
    for (const Rat& c : p.coeffs()) arr.push_back(rat_str(c));
    return arr;
}

json to_json(const RatFunc& f) {
    return json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

json to_json(const Glp& g) {
    return json{{"n", g.n}, {"alpha", rat_str(g.alpha)}, {"coeffs", to_json(g.poly)}};
}

Rat rat_from_json(const json& j) { return rat_parse(j.get<std::string>()); }

Poly poly_from_json(const json& j) {
    std::vector<Rat> coeffs;
    for (const auto& c : j) coeffs.push_back(rat_parse(c.get<std::string>()));
    return Poly(std::move(coeffs));
}

RatFunc ratfunc_from_json(const json& j) {
    return RatFunc(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

namespace {
json field_json(const char* parity, const RatFunc& f, const Rat& omega, const Rat& a,
                const std::optional<Rat>& energy) {
    json j{{"parity", parity},
           {"ratfunc", to_json(f)},
           {"omega", rat_str(omega)},
           {"a", rat_str(a)}};
    if (energy) j["energy"] = rat_str(*energy);
    return j;
}
}  // namespace

json to_json(const OddField& f, const Rat& a) {
    return field_json("odd", f.R(), f.omega(), a, f.energy());
}

json to_json(const EvenField& f, const Rat& a) {
    return field_json("even", f.S(), f.omega(), a, f.energy());
}

json to_json(const ExtendedPotential& ep) {
    return json{{"series", series_name(ep.series)},
                {"n", ep.n},
                {"omega", rat_str(ep.params.omega)},
                {"a", rat_str(ep.params.a)},
                {"field", to_json(ep.field, ep.params.a)},
                {"seed_energy", rat_str(ep.seed_energy)}};
}

ExtendedPotential extended_from_json(const json& j) {
    Series s = series_parse(j.at("series").get<std::string>());
    int n = j.at("n").get<int>();
    Params p(rat_from_json(j.at("omega")), rat_from_json(j.at("a")));
    RatFunc field = ratfunc_from_json(j.at("field").at("ratfunc"));
    ExtendedPotential ep = extend(s, n, p);
    if (!(EvenField(field, p.omega) == ep.field))
        throw std::invalid_argument("extended potential payload does not match its parameters");
    if (rat_from_json(j.at("seed_energy")) != ep.seed_energy)
        throw std::invalid_argument("extended potential seed_energy mismatch");
    return ep;
}

json to_json(const RegularityReport& rep) {
    json locs = json::array();
    for (const auto& [lo, hi] : rep.pole_locations)
        locs.push_back(json::array({rat_str(lo), rat_str(hi)}));
    return json{{"pole_count_positive_axis", rep.pole_count_positive_axis},
                {"regular", rep.regular},
                {"pole_locations", locs}};
}

json to_json(const ShapeReport& rep, const Params& p) {
    return json{{"series", series_name(rep.series)},
                {"n", rep.n},
                {"delta_field", to_json(rep.delta_field, p.a)},
                {"delta_is_minus_omega_x", rep.delta_is_minus_omega_x},
                {"partner_identity_holds", rep.partner_identity_holds}};
}

json to_json(const SpectrumReport& rep, const Params& p) {
    json rows = json::array();
    for (size_t k = 0; k < rep.energies.size(); ++k) {
        rows.push_back(json{{"k", k},
                            {"predicted", rat_str(rep.predicted[k])},
                            {"computed", rep.energies[k]},
                            {"abs_error", std::abs(rep.energies[k] - to_double(rep.predicted[k]))},
                            {"nodes", rep.node_counts[k]}});
    }
    return json{{"series", rep.series ? series_name(*rep.series) : "base"},
                {"n", rep.n},
                {"omega", rat_str(p.omega)},
                {"a", rat_str(p.a)},
                {"max_abs_error", rep.max_abs_error},
                {"levels", rows}};
}

std::string spectrum_csv(const SpectrumReport& rep) {
    std::ostringstream out;
    out << "k,predicted,computed,abs_error,nodes\n";
    out.precision(12);
    for (size_t k = 0; k < rep.energies.size(); ++k) {
        out << k << "," << rat_str(rep.predicted[k]) << "," << rep.energies[k] << ","
            << std::abs(rep.energies[k] - to_double(rep.predicted[k])) << ","
            << rep.node_counts[k] << "\n";
    }
    return out.str();
}

}  // namespace isoext
