#pragma once

// JSON wire formats for polygons, height functions, subdivisions, graphs and
// divisors. All readers validate and throw std::invalid_argument with a
// positional message on malformed input.

#include <string>

#include "json.hpp"
#include "latgon/divisor.hpp"
#include "latgon/metric_graph.hpp"
#include "latgon/polygon.hpp"
#include "latgon/subdivision.hpp"

namespace latgon {

using Json = nlohmann::ordered_json;

Json polygon_to_json(const LatticePolygon& P);
LatticePolygon polygon_from_json(const Json& j);

Json rational_polygon_to_json(const RationalPolygon& P);

Json heights_to_json(const LatticePolygon& base, const HeightFunction& h);
std::pair<LatticePolygon, HeightFunction> heights_from_json(const Json& j);

Json subdivision_to_json(const RegularSubdivision& s);

Json graph_to_json(const MetricGraph& g);
MetricGraph graph_from_json(const Json& j);

Json divisor_to_json(const Model& m, const Divisor& d);
// Coefficients keyed by vertex label; labels must exist in the model.
Divisor divisor_from_json(const Model& m, const Json& j);

Json load_json_file(const std::string& path);

}  // namespace latgon
