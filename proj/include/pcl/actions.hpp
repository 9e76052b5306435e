#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pcl/cayley.hpp"
#include "pcl/embedding.hpp"
#include "pcl/graph.hpp"
#include "pcl/group.hpp"

namespace pcl {

/// A finite group acting on a graph. vertex_perm[x][v] is x.v and
/// dart_perm[x][d] is x.d.
struct GraphAction {
  std::shared_ptr<const GroupModel> group;
  Graph graph;
  std::vector<std::vector<int>> vertex_perm;
  std::vector<std::vector<int>> dart_perm;

  /// Throws pcl::Error unless the tables are permutations satisfying the
  /// action axioms and respecting incidence, reversal and edge labels.
  void validate() const;

  /// Dart permutations derived from vertex permutations: every edge goes to
  /// the edge with the image endpoints and the same label, parallel edges
  /// matched by rank.
  static GraphAction from_vertex_map(std::shared_ptr<const GroupModel> group, Graph graph,
                                     std::vector<std::vector<int>> vertex_perm);
};

/// The regular action of the group on its complete Cayley graph.
GraphAction left_action(const CayleyGraph& cg);

struct FixedPoint {
  int element = 0;
  int vertex = 0;
};

/// A non-identity element fixing a vertex, least element first.
std::optional<FixedPoint> find_fixed_point(const GraphAction& a);
inline bool is_free(const GraphAction& a) { return !find_fixed_point(a).has_value(); }

struct BlowUp {
  Graph graph;
  /// cycles[i]: the vertices replacing vs[i], in attachment order.
  std::vector<std::vector<int>> cycles;
  /// Embedding of the result when a rotation of the input was supplied.
  std::optional<RotationSystem> rotation;
};

/// Replace every vertex of `vs` by a cycle with one vertex per incident dart.
/// Without a rotation the darts attach in dart-id order. Surviving vertices
/// are renumbered in increasing order and the cycle vertices appended. Edge
/// ids of the input are kept and the directed "ring" edges appended, so a
/// degree-1 vertex becomes a vertex with a loop and a degree-2 vertex a
/// double edge.
BlowUp blow_up(const Graph& g, const std::vector<int>& vs, const RotationSystem* rot = nullptr);

class NonFreeAction : public Error {
 public:
  NonFreeAction(FixedPoint w);
  FixedPoint witness;
};

struct FundamentalDomain {
  std::vector<int> vertices;    // one per orbit, in order of selection
  std::vector<int> tree_edges;  // spanning tree of D, in order of selection
};

struct BabaiResult {
  /// Cayley multigraph on the group; vertex x is the contracted translate x.D.
  CayleyGraph quotient;
  FundamentalDomain domain;
  /// One generator per edge orbit outside the translates of the tree.
  std::vector<Generator> generator_multiset;
};

/// Contract every translate of a connected fundamental domain. D is grown
/// from vertex 0 by repeatedly taking the least-index edge that reaches an
/// unrepresented orbit. Parallel edges and loops of the quotient are kept.
BabaiResult babai_contract(const GraphAction& a);

// Equivariant constructions on a free action; each returns a new action.

/// Subdivide every edge of the orbit of edge `e`; the orbit must not contain
/// an edge reversed by some group element.
GraphAction equivariant_subdivide(const GraphAction& a, int e);

/// Blow up every vertex of the orbit of `v` (darts attach in the order of
/// the translated darts of `v`). The action must be free at `v`.
GraphAction equivariant_blow_up(const GraphAction& a, int v);

/// Add the orbit of a new edge u -> w; labelled `label`.
GraphAction equivariant_add_edges(const GraphAction& a, int u, int w, const std::string& label);

}  // namespace pcl
