#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "pcl/actions.hpp"
#include "pcl/embedding.hpp"
#include "pcl/graph.hpp"

namespace pcl {

/// Seed for the randomized suites: $PCL_SEED, default 0.
std::uint64_t suite_seed();

struct PlaneGraph {
  Graph graph;
  Embedding embedding;
};

/// Random simple 2-connected plane graph with at most `max_vertices`
/// vertices: a cycle grown by face chords, edge subdivisions and vertices
/// placed inside faces.
PlaneGraph random_plane_graph(std::mt19937_64& rng, int max_vertices, int steps);

struct BabaiInstance {
  GraphAction action;
  std::string group;
  std::string recipe;
};

/// A catalog group of order <= max_order acting freely on a connected graph
/// of at most `max_vertices` vertices, obtained from its Cayley graph by
/// random equivariant subdivisions, blow-ups and added edge orbits.
BabaiInstance random_babai_instance(std::mt19937_64& rng, int max_order = 12, int max_vertices = 60);

}  // namespace pcl
