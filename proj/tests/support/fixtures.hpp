#pragma once

#include <algorithm>
#include <memory>
#include <string_view>
#include <utility>
#include <vector>

#include "pcl/cayley.hpp"
#include "pcl/embedding.hpp"
#include "pcl/graph.hpp"
#include "pcl/group.hpp"

namespace fixture {

inline pcl::Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  pcl::Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline pcl::Graph cycle(int n) {
  pcl::Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline pcl::Graph path(int n) {
  pcl::Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline pcl::Graph complete(int n) {
  pcl::Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

// bottom square 0..3, top square 4..7
inline pcl::Graph cube() {
  return from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7}});
}

inline pcl::CayleyGraph cayley(std::string_view presentation, std::string_view gens) {
  auto g = std::make_shared<const pcl::GroupModel>(pcl::coset_enumerate(pcl::parse_presentation(presentation), 1000));
  return pcl::build_cayley(g, pcl::resolve_generators(*g, gens));
}

inline pcl::Embedding plane(const pcl::Graph& g) { return std::get<pcl::Embedding>(pcl::planarity_test(g)); }

/// Index of the face whose boundary has exactly these vertices.
inline int face_with_vertices(const pcl::Graph& g, const pcl::Embedding& emb, std::vector<int> vs) {
  std::sort(vs.begin(), vs.end());
  for (int f = 0; f < static_cast<int>(emb.faces.size()); ++f) {
    auto w = pcl::dart_walk_vertices(g, emb.faces[f].darts);
    std::sort(w.begin(), w.end());
    if (w == vs) return f;
  }
  return -1;
}

}  // namespace fixture
