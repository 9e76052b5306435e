#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcl {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A search or enumeration ran past its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

struct Edge {
  int tail = 0;
  int head = 0;
  std::string label;
  bool directed = false;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite multigraph with loops and parallel edges.
///
/// Every edge `e` contributes two darts: `2e` runs tail -> head and `2e+1`
/// runs head -> tail. A loop contributes both darts to the same vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int num_vertices);

  int add_vertex();
  int add_edge(int tail, int head, std::string label = {}, bool directed = false);

  int num_vertices() const { return static_cast<int>(out_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_darts() const { return 2 * num_edges(); }

  const Edge& edge(int e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }

  static int dart_edge(int d) { return d >> 1; }
  static int reverse(int d) { return d ^ 1; }
  static int forward_dart(int e) { return 2 * e; }

  int dart_tail(int d) const;
  int dart_head(int d) const;

  /// Darts leaving `v`, in increasing dart id.
  const std::vector<int>& darts_at(int v) const { return out_.at(v); }
  int degree(int v) const { return static_cast<int>(out_.at(v).size()); }

  bool has_loops() const;
  bool is_simple() const;
  bool adjacent(int u, int v) const;

  /// Neighbour lists of the underlying simple graph (loops dropped, parallels merged).
  std::vector<std::vector<int>> simple_adjacency() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_;
};

/// BFS distances from `source`; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, int source);

bool is_connected(const Graph& g);

/// Component id per vertex over the vertices with keep[v] set; others get -1.
/// Returns the number of components.
int connected_components(const Graph& g, const std::vector<bool>& keep, std::vector<int>& component);

/// The vertex sequence visited by a dart sequence, one entry per dart (its tail).
std::vector<int> dart_walk_vertices(const Graph& g, const std::vector<int>& darts);

/// Rotate a cyclic sequence so that its least element comes first.
std::vector<int> canonical_rotation(std::vector<int> cyc);

}  // namespace pcl
