#pragma once

#include <json.hpp>

#include "strata/flatgeom.hpp"
#include "strata/hurwitz.hpp"
#include "strata/picard.hpp"
#include "strata/twisted.hpp"

namespace strata {

using Json = nlohmann::ordered_json;

// Rationals serialize as {"num": "...", "den": "..."} decimal strings.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json class_to_json(const DivisorClass& c);
DivisorClass class_from_json(const Json& j);

Json chart_to_json(const ChartData& c);
ChartData chart_from_json(const Json& j);

Json graph_to_json(const EdgeLabeledGraph& g);
EdgeLabeledGraph graph_from_json(const Json& j);

Json twisted_to_json(const TwistedConfig& cfg);
TwistedConfig twisted_from_json(const Json& j);

Json tuple_to_json(const MonodromyTuple& t);
MonodromyTuple tuple_from_json(const Json& j);

Json load_json_file(const std::string& path);

}  // namespace strata
