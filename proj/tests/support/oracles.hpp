#pragma once

// Independent reference implementations used to cross-check the library.
// They share no code with src/ beyond the plain Graph container.

#include <map>
#include <string>
#include <vector>

#include "pcl/cayley.hpp"
#include "pcl/embedding.hpp"
#include "pcl/graph.hpp"
#include "pcl/group.hpp"

namespace oracle {

/// Edges of Cay(g, gens) counted straight from the table: one per (x, s) for
/// non-involutions, one per unordered pair {x, xs} for involutions.
int cayley_edge_count(const pcl::GroupModel& g, const std::vector<int>& gens);

/// Whether removing the cycle's edges from the dual graph disconnects f1 from f2.
bool flood_fill_separates(const pcl::Graph& g, const pcl::Embedding& emb, const std::vector<bool>& cycle_edge, int f1,
                          int f2);

/// Smallest vertex set whose removal disconnects the simple graph, tried by
/// exhaustive subset removal up to size `cap`; returns cap + 1 when none
/// is found and n - 1 for complete graphs.
int brute_force_connectivity(const pcl::Graph& g, int cap = 3);

/// Isomorphism by backtracking over element bijections that respect orders.
bool brute_force_isomorphic(const pcl::GroupModel& a, const pcl::GroupModel& b);

/// Dart-by-dart face bookkeeping, recomputed from the rotation alone.
/// Returns an empty string when every identity holds, else the first failure.
std::string bookkeeping_failure(const pcl::Graph& g, const pcl::Embedding& emb);

struct BallCounts {
  std::vector<int> sphere;  // vertices at each distance 0..R
  int edges = 0;
};

/// Ball of Z^k x Z_m1 x ... by BFS over coordinate vectors; modulus 0 is Z.
/// A generator of order two counts one undirected edge per pair.
BallCounts coordinate_ball(const std::vector<int>& moduli, const std::vector<std::vector<int>>& gens, int radius);

/// Ball of A *_{a_inv = b_inv} B by BFS over normal forms t1 ... tn b^e, the
/// t_i nontrivial coset representatives alternating between the factors.
/// Generators equal to the amalgamated involution are merged into one label.
BallCounts amalgam_ball(const pcl::GroupModel& a, int a_inv, const std::vector<int>& gens_a, const pcl::GroupModel& b,
                        int b_inv, const std::vector<int>& gens_b, int radius);

/// Quotient edges of a free action after contracting every translate of the
/// tree: edge {u, w} becomes {x, y} where u lies in x.D and w in y.D. Translates
/// of tree edges are dropped. Pairs come back sorted, each with x <= y.
std::vector<std::pair<int, int>> contracted_edges(const pcl::Graph& g, const std::vector<std::vector<int>>& vertex_perm,
                                                  const std::vector<std::vector<int>>& dart_perm,
                                                  const std::vector<int>& domain, const std::vector<int>& tree_edges);

/// Face length -> count, traced directly from a rotation system.
std::map<int, int> face_lengths(const pcl::Graph& g, const std::vector<std::vector<int>>& rotation);

/// Whether left multiplication by every element maps the labelled edge
/// multiset of a complete Cayley graph onto itself.
bool left_multiplication_preserves(const pcl::CayleyGraph& cg);

/// Components of the graph after deleting `removed`, counted by DFS.
int components_without(const pcl::Graph& g, const std::vector<bool>& removed);

}  // namespace oracle
