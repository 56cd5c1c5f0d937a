#pragma once

#include <json.hpp>

#include "addtop/pretop.hpp"

namespace addtop {

// Interchange format: UTF-8 JSON with sorted keys (the default nlohmann
// object), F_p scalars as residues, rationals as "num/den" strings. All
// loaders throw ParseError on malformed input; round-trips are bit exact.
using Json = nlohmann::json;

Json scalarToJson(const Scalar& s);
Scalar scalarFromJson(const Field& f, const Json& j);

Json matrixToJson(const Matrix& m); // list of rows
Matrix matrixFromJson(const Field& f, std::size_t rows, std::size_t cols, const Json& j);

Json toJson(const FinLinearCategory& c);
CatPtr catFromJson(const Json& j);

Json toJson(const Presheaf& F);
Presheaf presheafFromJson(const CatPtr& c, const Json& j);

Json toJson(const Topology& t);
Topology topologyFromJson(const CatPtr& c, const Json& j);

Json toJson(const Pretopology& s);
Pretopology pretopologyFromJson(const CatPtr& c, const Json& j);

} // namespace addtop
