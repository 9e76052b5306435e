#include "pcl/covariance.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pcl/augment.hpp"

namespace pcl {

std::string to_string(Orientation o) { return o == Orientation::preserving ? "preserving" : "reversing"; }

namespace {

// Position of every dart inside its facial walk.
std::vector<int> face_positions(const Embedding& emb, int num_darts) {
  std::vector<int> pos(static_cast<size_t>(num_darts), -1);
  for (const auto& f : emb.faces)
    for (int i = 0; i < static_cast<int>(f.darts.size()); ++i) pos[f.darts[i]] = i;
  return pos;
}

bool is_facial(const Embedding& emb, const std::vector<int>& pos, const std::vector<int>& seq) {
  if (seq.empty()) return false;
  const int f = emb.face_of_dart[seq[0]];
  const int k = static_cast<int>(seq.size());
  if (static_cast<int>(emb.faces[f].darts.size()) != k) return false;
  for (int i = 0; i < k; ++i)
    if (emb.face_of_dart[seq[i]] != f || pos[seq[i]] != (pos[seq[0]] + i) % k) return false;
  return true;
}

bool cyclic_equal(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  auto it = std::find(b.begin(), b.end(), a[0]);
  if (it == b.end()) return false;
  const size_t off = static_cast<size_t>(it - b.begin());
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[(off + i) % b.size()]) return false;
  return true;
}

// Cyclic vertex sequence up to rotation and reversal.
std::vector<int> dihedral_canonical(const std::vector<int>& seq) {
  std::vector<int> best;
  for (int pass = 0; pass < 2; ++pass) {
    std::vector<int> s = seq;
    if (pass) std::reverse(s.begin(), s.end());
    for (size_t r = 0; r < s.size(); ++r) {
      std::rotate(s.begin(), s.begin() + 1, s.end());
      if (best.empty() || s < best) best = s;
    }
  }
  return best;
}

}  // namespace

std::optional<CovarianceViolation> find_covariance_violation(const CayleyGraph& cg, const Embedding& emb) {
  if (!cg.complete()) throw Error("is_covariant: covariance is undefined on truncated balls");
  const DartIndex index(cg);
  const auto pos = face_positions(emb, cg.graph.num_darts());
  for (int l = 0; l < static_cast<int>(cg.labels.size()); ++l) {
    const int s = cg.label_element[l];
    for (int f = 0; f < static_cast<int>(emb.faces.size()); ++f) {
      std::vector<int> image;
      for (int d : emb.faces[f].darts) image.push_back(left_translate_dart(cg, index, s, d));
      if (is_facial(emb, pos, image)) continue;
      std::vector<int> back;
      for (auto it = image.rbegin(); it != image.rend(); ++it) back.push_back(Graph::reverse(*it));
      if (is_facial(emb, pos, back)) continue;
      return CovarianceViolation{l, cg.labels[l], f};
    }
  }
  return std::nullopt;
}

std::vector<std::vector<int>> graph_automorphisms(const Graph& g, long long limit) {
  const int n = g.num_vertices();
  std::vector<std::map<int, int>> mult(static_cast<size_t>(n));
  for (const Edge& e : g.edges()) {
    ++mult[e.tail][e.head];
    if (e.tail != e.head) ++mult[e.head][e.tail];
  }
  const auto adj = g.simple_adjacency();
  auto m = [&](int a, int b) {
    auto it = mult[a].find(b);
    return it == mult[a].end() ? 0 : it->second;
  };

  // BFS order so that each vertex after the first in its component has a placed neighbour
  std::vector<int> order, anchor(static_cast<size_t>(n), -1);
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = true;
    order.push_back(s);
    for (size_t i = order.size() - 1; i < order.size(); ++i)
      for (int w : adj[order[i]])
        if (!seen[w]) {
          seen[w] = true;
          anchor[w] = order[i];
          order.push_back(w);
        }
  }

  std::vector<std::vector<int>> out;
  std::vector<int> image(static_cast<size_t>(n), -1);
  std::vector<bool> used(static_cast<size_t>(n), false);
  auto fits = [&](int idx, int cand) {
    const int v = order[idx];
    if (g.degree(v) != g.degree(cand) || m(v, v) != m(cand, cand)) return false;
    for (int j = 0; j < idx; ++j) {
      const int u = order[j];
      if (m(v, u) != m(cand, image[u])) return false;
    }
    return true;
  };
  auto recurse = [&](auto&& self, int idx) -> void {
    if (idx == n) {
      out.push_back(image);
      if (static_cast<long long>(out.size()) > limit) throw BudgetExceeded("graph_automorphisms: limit exceeded");
      return;
    }
    const int v = order[idx];
    std::vector<int> cands;
    if (anchor[v] >= 0)
      cands = adj[image[anchor[v]]];
    else
      for (int c = 0; c < n; ++c) cands.push_back(c);
    for (int c : cands) {
      if (used[c] || !fits(idx, c)) continue;
      image[v] = c;
      used[c] = true;
      self(self, idx + 1);
      used[c] = false;
      image[v] = -1;
    }
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::variant<WhitneyEmbedding, NotThreeConnected> whitney_unique(const Graph& g, int verify_limit) {
  const PlanarityResult planar = planarity_test(g);
  if (const auto* w = std::get_if<KuratowskiWitness>(&planar)) throw NonPlanarGraph(*w);
  if (g.num_vertices() < 4) return NotThreeConnected{vertex_connectivity(g)};
  const int kappa = vertex_connectivity(g);
  if (kappa < 3) return NotThreeConnected{kappa};

  const RotationSystem a = canonical_form(std::get<Embedding>(planar).rotation);
  const RotationSystem b = canonical_form(mirror(a));
  WhitneyEmbedding out;
  out.embedding = trace_faces(g, a.order <= b.order ? a : b);

  if (g.num_vertices() <= verify_limit) {
    std::set<std::vector<int>> faces;
    for (const auto& f : out.embedding.faces) faces.insert(dihedral_canonical(dart_walk_vertices(g, f.darts)));
    for (const auto& phi : graph_automorphisms(g)) {
      for (const auto& f : out.embedding.faces) {
        auto verts = dart_walk_vertices(g, f.darts);
        for (int& v : verts) v = phi[v];
        if (!faces.count(dihedral_canonical(verts)))
          throw Error("whitney_unique: an automorphism does not preserve the facial cycles");
      }
      ++out.automorphisms_checked;
    }
    out.verified = true;
  }
  return out;
}

namespace {

Orientation classify_with(const CayleyGraph& cg, const DartIndex& index, const RotationSystem& rot, int x) {
  bool same = true, mirrored = true;
  for (int v = 0; v < cg.num_vertices(); ++v) {
    std::vector<int> image;
    for (int d : rot.order[v]) image.push_back(left_translate_dart(cg, index, x, d));
    const auto& target = rot.order[cg.group->mul(x, v)];
    if (!cyclic_equal(image, target)) same = false;
    std::reverse(image.begin(), image.end());
    if (!cyclic_equal(image, target)) mirrored = false;
  }
  if (same) return Orientation::preserving;
  if (mirrored) return Orientation::reversing;
  throw Error("orientation_class: element " + cg.names[x] + " neither keeps nor mirrors the rotation system");
}

RotationSystem canonical_rotation_of(const CayleyGraph& cg) {
  if (!cg.complete()) throw Error("orientation_class: needs a complete Cayley graph");
  const auto result = whitney_unique(cg.graph);
  if (const auto* n = std::get_if<NotThreeConnected>(&result))
    throw NotThreeConnectedError("orientation_class: graph has vertex connectivity " + std::to_string(n->connectivity));
  return std::get<WhitneyEmbedding>(result).embedding.rotation;
}

}  // namespace

Orientation orientation_class(const CayleyGraph& cg, int element) {
  const RotationSystem rot = canonical_rotation_of(cg);
  if (element < 0 || element >= cg.num_vertices()) throw Error("orientation_class: element out of range");
  return classify_with(cg, DartIndex(cg), rot, element);
}

std::vector<Orientation> orientation_table(const CayleyGraph& cg) {
  const RotationSystem rot = canonical_rotation_of(cg);
  const DartIndex index(cg);
  std::vector<Orientation> out;
  for (int x = 0; x < cg.num_vertices(); ++x) out.push_back(classify_with(cg, index, rot, x));
  return out;
}

}  // namespace pcl
