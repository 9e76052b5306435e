#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pcl/graph.hpp"
#include "pcl/group.hpp"

namespace pcl {

/// One entry of a Cayley generating multiset.
struct Generator {
  std::string label;
  int element = 0;
  friend bool operator==(const Generator&, const Generator&) = default;
};

class NonGeneratingSet : public Error {
 public:
  NonGeneratingSet(int reached, int order);
  int reached() const { return reached_; }

 private:
  int reached_;
};

class NonInvolutionAmalgam : public Error {
 public:
  using Error::Error;
};

class UnsupportedFamily : public Error {
 public:
  using Error::Error;
};

/// Identifies the dart leaving a vertex along one generator label.
/// Darts of involution labels use sign +1 in both directions.
struct DartKey {
  int label = 0;
  int sign = 1;
  int index() const { return 2 * label + (sign < 0 ? 1 : 0); }
  friend bool operator==(const DartKey&, const DartKey&) = default;
};

/// Labelled Cayley multigraph, complete or a ball of radius `radius`.
///
/// Vertex 0 is the identity. Generators of order two are single undirected
/// edges; every other generator contributes one directed edge g -> gs per
/// vertex (a loop when s is the identity).
struct CayleyGraph {
  Graph graph;
  std::vector<std::string> names;
  std::vector<bool> frontier;
  std::vector<int> depth;
  std::optional<int> radius;  // empty for a complete graph
  std::vector<std::string> labels;
  std::vector<bool> label_involution;
  std::vector<int> edge_label;
  /// Complete graphs only: the group, and the element of each label.
  /// Vertex v is element v.
  std::shared_ptr<const GroupModel> group;
  std::vector<int> label_element;

  bool complete() const { return !radius.has_value(); }
  int num_vertices() const { return graph.num_vertices(); }
  int num_edges() const { return graph.num_edges(); }

  DartKey dart_key(int d) const;
  std::string dart_key_name(DartKey k) const;
  /// Number of distinct dart keys (label degree of a full vertex).
  int label_degree() const;
  std::vector<DartKey> all_dart_keys() const;
  std::optional<int> vertex_named(std::string_view name) const;
};

/// Dart lookup by (vertex, key).
class DartIndex {
 public:
  explicit DartIndex(const CayleyGraph& cg);
  /// -1 when the vertex has no dart with this key (frontier of a ball).
  int at(int v, DartKey k) const { return table_[static_cast<size_t>(v) * width_ + k.index()]; }

 private:
  int width_;
  std::vector<int> table_;
};

/// Image of dart `d` under left multiplication by group element `x` (complete graphs).
int left_translate_dart(const CayleyGraph& cg, const DartIndex& index, int x, int d);

/// Parse a generating multiset such as "k,r", "(1,0),(0,1)" or "r:2".
/// Items are words over the group's presentation generators, or exponent
/// tuples "(i,j,...)" meaning g0^i g1^j ... . A suffix ":m" repeats an item
/// m times; repeated items are labelled x#1, x#2, ...
std::vector<Generator> resolve_generators(const GroupModel& g, std::string_view spec);

CayleyGraph build_cayley(const GroupModel& g, const std::vector<Generator>& gens);
CayleyGraph build_cayley(std::shared_ptr<const GroupModel> g, const std::vector<Generator>& gens);

// ---------------------------------------------------------------------------
// Infinite families with bundled normal forms.

/// Free group on the given generator symbols; elements are reduced words.
struct FreeGroupFamily {
  std::vector<std::string> generators;
};

/// Z^k x Z_{m1} x ... ; modulus 0 marks an infinite cyclic coordinate.
struct AbelianFamily {
  std::vector<int> moduli;
  struct Gen {
    std::string label;
    std::vector<int> vector;
  };
  std::vector<Gen> generators;
};

/// Free product of finite groups amalgamated over a common subgroup of
/// order 1 or 2. With order 2 each factor names the involution that is
/// identified across factors.
struct AmalgamFamily {
  struct Factor {
    std::shared_ptr<const GroupModel> group;
    int amalgamated = -1;  // -1: free product (trivial amalgam)
    std::vector<Generator> generators;
  };
  std::vector<Factor> factors;
  std::string amalgam_label = "b";
};

using InfiniteFamilySpec = std::variant<FreeGroupFamily, AbelianFamily, AmalgamFamily>;

std::string family_tag(const InfiniteFamilySpec& spec);

namespace families {
InfiniteFamilySpec integers(const std::vector<int>& steps = {1});
InfiniteFamilySpec z_squared();
InfiniteFamilySpec z_cross_cyclic(int n);
InfiniteFamilySpec free_group(int rank);
InfiniteFamilySpec free_product(std::vector<AmalgamFamily::Factor> factors);
/// A *_{a_inv = b_inv} B; throws NonInvolutionAmalgam unless both elements have order 2.
InfiniteFamilySpec amalgam(std::shared_ptr<const GroupModel> a, int a_inv, std::vector<Generator> gens_a,
                           std::shared_ptr<const GroupModel> b, int b_inv, std::vector<Generator> gens_b);
/// Bundled families by CLI name: z, z-steps-1-2, z2, z-cross-zN, fN, amalgam-a4-z4xz2.
InfiniteFamilySpec by_name(std::string_view name);
std::vector<std::string> names();
}  // namespace families

/// Exact ball of radius R; vertices in BFS order named by shortlex-least word.
/// Throws BudgetExceeded past `max_vertices` vertices.
CayleyGraph build_ball(const InfiniteFamilySpec& spec, int radius, int max_vertices = 1 << 21);

CayleyGraph build_amalgam_ball(const GroupModel& a, int a_inv, const GroupModel& b, int b_inv,
                               const std::vector<Generator>& gens_a, const std::vector<Generator>& gens_b,
                               int radius);

/// Sub-ball of radius r < ball radius (vertices with depth <= r and the edges among them).
CayleyGraph restrict_ball(const CayleyGraph& ball, int r);

}  // namespace pcl
