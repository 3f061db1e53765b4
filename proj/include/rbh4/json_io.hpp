#pragma once

#include <json.hpp>

#include "rbh4/classify.hpp"
#include "rbh4/subalg.hpp"

namespace rbh4 {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "1.0.0";

Json to_json(const Scalar& s);
Scalar scalar_from_json(const Field& field, const Json& j);

Json to_json(const StructureAlgebra& alg);
/// {"weight", "images"} with images[j] the coordinates of R(e_j).
Json to_json(const WeightedOperator& w);
WeightedOperator operator_from_json(const Field& field, const Json& j);
Json packed_to_json(const Packed& m, std::uint32_t p, std::uint32_t lambda);

Json to_json(const AutoMap& phi);
Json to_json(const Subspace& s);
Json to_json(const CensusEntry& e);

Json to_json(const RBFamily& f);
Json registry_to_json();

Json to_json(const OrbitReport& r);
Json to_json(const ClaimCheck& c);
Json to_json(const TheoremCheck& c, std::uint32_t p, std::uint32_t lambda);

}  // namespace rbh4
