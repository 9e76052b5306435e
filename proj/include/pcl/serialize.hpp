#pragma once

#include <string>

#include "json.hpp"
#include "pcl/actions.hpp"
#include "pcl/cayley.hpp"
#include "pcl/embedding.hpp"
#include "pcl/graph.hpp"

namespace pcl {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "pcl/1";

/// {schema, vertices:[{id,name,frontier}], edges:[{tail,head,label,directed}], radius}
Json to_json(const CayleyGraph& cg);
/// Same schema for a bare graph; vertex names are ids and the radius "complete".
Json to_json(const Graph& g);
/// {schema, rotation:{vertex:[darts]}, faces:[[darts]], genus}
Json to_json(const Embedding& emb);
Json to_json(const KuratowskiWitness& w);
/// Permutation tables keyed by element name.
Json to_json(const GraphAction& a);

/// Inverse of the graph schema; names and frontier flags are read too.
CayleyGraph cayley_from_json(const Json& j);

/// Directed edges carry arrows, involution edges none; labels on every edge.
std::string to_dot(const CayleyGraph& cg);
std::string to_dot(const Graph& g);

/// Straight-line drawing from a barycentric layout: the longest face is
/// pinned to a circle and every other vertex sits at the mean of its
/// neighbours.
std::string to_svg(const Graph& g, const Embedding& emb, const std::vector<std::string>& names = {});

}  // namespace pcl
