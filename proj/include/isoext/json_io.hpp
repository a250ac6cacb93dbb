#pragma once

// JSON payloads. Rationals travel as "p/q" strings, polynomials as arrays of
// those in ascending powers, rational functions as {"num": [...], "den": [...]}.

#include "isoext/dbt.hpp"
#include "isoext/laguerre.hpp"
#include "isoext/shape.hpp"
#include "isoext/spectral.hpp"

#include <json.hpp>

namespace isoext {

using json = nlohmann::json;

json to_json(const Rat& q);
json to_json(const Poly& p);
json to_json(const RatFunc& f);
json to_json(const Glp& g);

Rat rat_from_json(const json& j);
Poly poly_from_json(const json& j);
RatFunc ratfunc_from_json(const json& j);

// fields carry their chart omega; the parameter a comes from the caller
json to_json(const OddField& f, const Rat& a);
json to_json(const EvenField& f, const Rat& a);

json to_json(const ExtendedPotential& ep);
ExtendedPotential extended_from_json(const json& j);

json to_json(const RegularityReport& rep);
json to_json(const ShapeReport& rep, const Params& p);
json to_json(const SpectrumReport& rep, const Params& p);
std::string spectrum_csv(const SpectrumReport& rep);

}  // namespace isoext
