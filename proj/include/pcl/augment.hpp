#pragma once

#include <vector>

#include "pcl/embedding.hpp"
#include "pcl/graph.hpp"

namespace pcl {

/// Exact vertex connectivity of the underlying simple graph (n-1 for complete graphs).
int vertex_connectivity(const Graph& g);

/// Maximum number of internally vertex-disjoint s-t paths, stopping early at `cap`.
int local_vertex_connectivity(const Graph& g, int s, int t, int cap);

struct LadderAugmentation {
  Graph graph;
  Embedding embedding;
  /// Input faces that received a copy, in face order.
  std::vector<int> augmented_faces;
};

/// Insert a copy C' of every facial walk C with more than two darts inside its
/// face, joined to C by a perfect matching. Faces touching a frontier vertex
/// (when `frontier` is given) are left alone. Input edge ids are preserved.
LadderAugmentation ladder_augment(const Graph& g, const Embedding& emb, const std::vector<bool>& frontier = {});

}  // namespace pcl
