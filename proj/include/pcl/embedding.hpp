#pragma once

#include <string>
#include <variant>
#include <vector>

#include "pcl/cayley.hpp"
#include "pcl/graph.hpp"

namespace pcl {

/// Cyclic order of the darts leaving each vertex.
struct RotationSystem {
  std::vector<std::vector<int>> order;
  friend bool operator==(const RotationSystem&, const RotationSystem&) = default;
};

struct FacialWalk {
  std::vector<int> darts;
  /// False when the walk visits a frontier vertex of a truncated ball.
  bool finite = true;
};

struct Embedding {
  RotationSystem rotation;
  std::vector<FacialWalk> faces;
  int genus = 0;
  std::vector<int> face_of_dart;
};

/// Trace facial walks with the rule next(d) = successor of reverse(d) in the
/// rotation at head(d). Faces are listed by their lowest dart id, and each
/// walk starts at that dart. Genus comes from Euler's formula summed over
/// components. Throws when the rotation does not list every dart exactly
/// once at its tail.
Embedding trace_faces(const Graph& g, const RotationSystem& rot, const std::vector<bool>& frontier = {});

/// The same rotation with the cyclic order reversed at every vertex whose spin is -1.
RotationSystem apply_spins(const RotationSystem& rot, const std::vector<int>& spins);
RotationSystem mirror(const RotationSystem& rot);

/// Each vertex's cyclic order rotated to start at its least dart.
RotationSystem canonical_form(const RotationSystem& rot);

/// Throws pcl::Error when sum of face lengths != 2|E| or Euler's formula fails.
void check_face_bookkeeping(const Graph& g, const Embedding& emb);

struct KuratowskiWitness {
  enum class Kind { K5, K33 };
  Kind kind = Kind::K33;
  std::vector<int> branch;               // branch vertices
  std::vector<std::vector<int>> paths;   // vertex sequences between branch vertices
  std::vector<int> edges;                // edge ids of the subdivision in the input graph
};

std::string to_string(KuratowskiWitness::Kind k);

using PlanarityResult = std::variant<Embedding, KuratowskiWitness>;

/// Genus-0 embedding or a Kuratowski subdivision. Loops and parallel edges
/// are placed next to a representative edge of the underlying simple graph.
PlanarityResult planarity_test(const Graph& g);

inline bool is_planar(const PlanarityResult& r) { return std::holds_alternative<Embedding>(r); }

/// Checks a witness against the graph without reference to how it was found.
/// On failure `why` (if given) receives the reason.
bool verify_kuratowski(const Graph& g, const KuratowskiWitness& w, std::string* why = nullptr);

/// Embedding in which every vertex uses one cyclic order of dart labels (spin +1)
/// or its mirror (spin -1).
struct ConsistentEmbedding {
  std::vector<DartKey> label_order;
  std::vector<int> spins;
  Embedding embedding;
};

RotationSystem label_rotation(const CayleyGraph& cg, const std::vector<DartKey>& label_order,
                              const std::vector<int>& spins);

/// Exhaustive search over label cyclic orders (first label fixed) and spin
/// assignments (identity fixed to +1) for genus-0 rotation systems.
/// Throws BudgetExceeded beyond label degree 6 or `max_candidates` candidates.
std::vector<ConsistentEmbedding> search_consistent_embeddings(const CayleyGraph& cg,
                                                              long long max_candidates = 1LL << 22);

struct FaceReport {
  int finite_faces = 0;
  int frontier_faces = 0;
  int max_finite_length = 0;
};

FaceReport classify_faces(const CayleyGraph& ball, const Embedding& emb);

/// Face length -> count.
std::vector<std::pair<int, int>> face_vector(const Embedding& emb);

}  // namespace pcl
