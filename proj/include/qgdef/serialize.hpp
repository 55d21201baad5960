#pragma once

#include "qgdef/hseries.hpp"
#include "qgdef/lie_algebra.hpp"
#include "qgdef/wedge_elem.hpp"

#include <json.hpp>

#include <string>

namespace qgdef {

using Json = nlohmann::json;

Json tensor_to_json(const TensorPoly& t);
TensorPoly tensor_from_json(const Json& j, int dim);
Json series_to_json(const HSeries& s);
HSeries series_from_json(const Json& j, int dim);
Json wedge_to_json(const WedgeElem& w);
WedgeElem wedge_from_json(const Json& j, int dim);

std::string fnv1a64_hex(const std::string& bytes);
// Hash of the canonical JSON form of the algebra.
std::string algebra_hash(const LieAlgebra& L);

} // namespace qgdef
