// JSON forms of the library's values. Rationals are "p/q" strings, objects
// use sorted keys, so dump(parse(dump(x))) == dump(x).
#pragma once

#include "unimod/bounds.hpp"
#include "unimod/constructions.hpp"
#include "unimod/genus.hpp"
#include "unimod/lattice.hpp"

#include <json.hpp>

#include <string>

namespace unimod {

using Json = nlohmann::json;

Json to_json(const Rat& r);
Rat rat_from_json(const Json& j, const std::string& where);
Json to_json(const RatVector& v);
Json to_json(const RatMatrix& m);
Json to_json(const QSeries& s);
QSeries series_from_json(const Json& j);

Json to_json(const Lattice& L);
/// Errors name the offending field.
Lattice lattice_from_json(const Json& j);
Lattice load_lattice(const std::string& path);
void save_json(const Json& j, const std::string& path);
Json load_json(const std::string& path);

/// Lattice JSON of the base plus a "glue" block of {"x": [...], "y": [...]} pairs.
Json to_json(const GlueSpec& spec);
GlueSpec glue_spec_from_json(const Json& j);

Json to_json(const ThetaFit& f);
Json to_json(const GramVerdict& g);
Json to_json(const FeasibilityReport& r);
Json to_json(const BoundCertificate& c);
Json to_json(const NormCount& c);
Json to_json(const AverageTheta& a, int terms);
Json to_json(const MassBound& b);

std::string dump(const Json& j);

}  // namespace unimod
