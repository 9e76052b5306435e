#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pcl/cayley.hpp"
#include "pcl/embedding.hpp"

namespace pcl {

enum class Orientation { preserving, reversing };

std::string to_string(Orientation o);

/// A generator whose left action carries a facial walk to something that is not a facial walk.
struct CovarianceViolation {
  int label = 0;
  std::string generator;
  int face = 0;
};

/// Empty when left multiplication by every generator maps every facial walk
/// onto a facial walk (as a cyclic dart sequence, possibly reversed).
std::optional<CovarianceViolation> find_covariance_violation(const CayleyGraph& cg, const Embedding& emb);

inline bool is_covariant(const CayleyGraph& cg, const Embedding& emb) {
  return !find_covariance_violation(cg, emb).has_value();
}

class NonPlanarGraph : public Error {
 public:
  NonPlanarGraph(KuratowskiWitness w) : Error("graph is not planar"), witness(std::move(w)) {}
  KuratowskiWitness witness;
};

class NotThreeConnectedError : public Error {
 public:
  using Error::Error;
};

struct NotThreeConnected {
  int connectivity = 0;
};

struct WhitneyEmbedding {
  /// Lexicographically least rotation encoding among the two mirror images.
  Embedding embedding;
  /// Automorphisms checked to map the facial cycles onto themselves.
  long long automorphisms_checked = 0;
  bool verified = false;
};

/// Vertex permutations preserving edge multiplicities, in lexicographic order.
/// Throws BudgetExceeded after `limit` automorphisms.
std::vector<std::vector<int>> graph_automorphisms(const Graph& g, long long limit = 1'000'000);

/// The embedding of a 3-connected planar graph, unique up to reflection.
/// Uniqueness is re-checked on graphs of up to `verify_limit` vertices by
/// mapping the facial cycles through every automorphism.
std::variant<WhitneyEmbedding, NotThreeConnected> whitney_unique(const Graph& g, int verify_limit = 64);

/// Whether left multiplication by `element` keeps the canonical rotation system or mirrors it.
Orientation orientation_class(const CayleyGraph& cg, int element);

/// orientation_class for every group element, sharing one canonical embedding.
std::vector<Orientation> orientation_table(const CayleyGraph& cg);

}  // namespace pcl
