#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcl/cayley.hpp"
#include "pcl/embedding.hpp"
#include "pcl/graph.hpp"

namespace pcl {

/// Characteristic vector of an edge set over GF(2).
class EdgeVector {
 public:
  EdgeVector() = default;
  explicit EdgeVector(int num_edges) : size_(num_edges), bits_((static_cast<size_t>(num_edges) + 63) / 64, 0) {}
  static EdgeVector of(int num_edges, const std::vector<int>& edges);

  int size() const { return size_; }
  bool test(int e) const { return (bits_[e >> 6] >> (e & 63)) & 1U; }
  void flip(int e) { bits_[e >> 6] ^= std::uint64_t{1} << (e & 63); }
  void set(int e) { bits_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  EdgeVector& operator^=(const EdgeVector& o);
  friend EdgeVector operator^(EdgeVector a, const EdgeVector& b) { return a ^= b; }
  int count() const;
  bool empty() const { return count() == 0; }
  std::vector<int> support() const;
  /// Index of the lowest set bit, or -1.
  int lowest() const;
  friend bool operator==(const EdgeVector&, const EdgeVector&) = default;

 private:
  int size_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Rank over GF(2).
int gf2_rank(std::vector<EdgeVector> rows);

/// True when the support is one cycle (a loop and a double edge count).
bool is_single_cycle(const Graph& g, const EdgeVector& v);

/// Edges that occur an odd number of times on the facial walk of face f.
EdgeVector face_boundary(const Graph& g, const Embedding& emb, int f);

/// Edges crossed by the dual path used for crossing parity: BFS in the
/// dual graph from f1 with edges scanned in id order.
std::vector<int> dual_path(const Graph& g, const Embedding& emb, int f1, int f2);

/// Number mod 2 of edges of `cycle` on the dual path from f1 to f2.
/// Throws unless `cycle` is a single cycle and the embedding is plane.
int crossing_parity(const Graph& g, const Embedding& emb, const EdgeVector& cycle, int f1, int f2);

struct SepSumReport {
  std::vector<int> parities;     // one per listed cycle
  bool sum_is_cycle = false;
  std::optional<int> sum_parity; // set when the sum is a single cycle
  /// An input had parity 1, so the check does not apply.
  bool precondition_failed = false;
  /// Every listed cycle has parity 0 but their sum (a cycle) has parity 1.
  bool violation = false;
};

SepSumReport sep_sum_check(const Graph& g, const Embedding& emb, int f1, int f2, const std::vector<EdgeVector>& cycles);

struct SeparatingCycle {
  EdgeVector cycle;
  /// "detour": path P from the boundary of f1 to that of f2 closed by a
  /// detour avoiding P. "boundary": the boundary of f1 itself, used when
  /// the boundaries meet or no detour exists.
  std::string method;
};

/// A cycle separating faces f1 and f2 of a 2-connected plane graph.
SeparatingCycle separating_cycle_between_faces(const Graph& g, const Embedding& emb, int f1, int f2);

struct StarGenerationReport {
  int rank = 0;
  int expected = 0;  // |V| - 1
  bool ok = false;
};

/// GF(2) rank of the translates of the vertex star at the identity.
StarGenerationReport star_generation_check(const CayleyGraph& cg);

}  // namespace pcl
