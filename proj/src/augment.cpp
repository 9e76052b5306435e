#include "pcl/augment.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace pcl {

namespace {

// Unit vertex capacities via vertex splitting: v_in = 2v, v_out = 2v + 1.
class SplitFlow {
 public:
  SplitFlow(const std::vector<std::vector<int>>& adj, int s, int t) : n_(2 * static_cast<int>(adj.size())), head_(n_, -1) {
    constexpr int kInf = std::numeric_limits<int>::max() / 4;
    for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
      add(2 * v, 2 * v + 1, (v == s || v == t) ? kInf : 1);
      for (int w : adj[v]) add(2 * v + 1, 2 * w, kInf);
    }
    source_ = 2 * s + 1;
    sink_ = 2 * t;
  }

  int run(int cap) {
    int flow = 0;
    std::vector<int> via(static_cast<size_t>(n_));
    while (flow < cap) {
      std::fill(via.begin(), via.end(), -1);
      std::queue<int> q;
      q.push(source_);
      via[source_] = -2;
      while (!q.empty() && via[sink_] == -1) {
        const int x = q.front();
        q.pop();
        for (int a = head_[x]; a >= 0; a = next_[a])
          if (cap_[a] > 0 && via[to_[a]] == -1) {
            via[to_[a]] = a;
            q.push(to_[a]);
          }
      }
      if (via[sink_] == -1) break;
      for (int x = sink_; x != source_; x = to_[via[x] ^ 1]) {
        --cap_[via[x]];
        ++cap_[via[x] ^ 1];
      }
      ++flow;
    }
    return flow;
  }

 private:
  void add(int a, int b, int c) {
    for (auto [x, y, k] : {std::tuple{a, b, c}, std::tuple{b, a, 0}}) {
      to_.push_back(y);
      cap_.push_back(k);
      next_.push_back(head_[x]);
      head_[x] = static_cast<int>(to_.size()) - 1;
    }
  }

  int n_;
  std::vector<int> head_, to_, cap_, next_;
  int source_ = 0, sink_ = 0;
};

}  // namespace

int local_vertex_connectivity(const Graph& g, int s, int t, int cap) {
  return SplitFlow(g.simple_adjacency(), s, t).run(cap);
}

int vertex_connectivity(const Graph& g) {
  const int n = g.num_vertices();
  if (n < 2) return 0;
  if (!is_connected(g)) return 0;
  const auto adj = g.simple_adjacency();
  int best = n - 1;
  // Even's scheme: some v_i with i <= kappa lies outside a minimum separator,
  // and some later vertex lies on the far side of it.
  for (int i = 0; i <= best && i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::binary_search(adj[i].begin(), adj[i].end(), j)) continue;
      best = std::min(best, SplitFlow(adj, i, j).run(best));
    }
  }
  return best;
}

LadderAugmentation ladder_augment(const Graph& g, const Embedding& emb, const std::vector<bool>& frontier) {
  if (emb.genus != 0) throw Error("ladder_augment: embedding is not planar");
  if (static_cast<int>(emb.face_of_dart.size()) != g.num_darts())
    throw Error("ladder_augment: embedding does not belong to this graph");

  LadderAugmentation out;
  out.graph = g;
  // darts inserted right after a given dart in its vertex rotation
  std::vector<int> insert_after(static_cast<size_t>(g.num_darts()), -1);
  std::vector<std::vector<int>> new_rotation;

  for (int f = 0; f < static_cast<int>(emb.faces.size()); ++f) {
    const auto& walk = emb.faces[f].darts;
    const int k = static_cast<int>(walk.size());
    if (k <= 2) continue;
    if (!frontier.empty() &&
        std::any_of(walk.begin(), walk.end(), [&](int d) { return frontier[g.dart_tail(d)]; }))
      continue;
    out.augmented_faces.push_back(f);

    std::vector<int> copy(static_cast<size_t>(k)), match(static_cast<size_t>(k)), ring(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) copy[i] = out.graph.add_vertex();
    for (int i = 0; i < k; ++i) match[i] = out.graph.add_edge(g.dart_tail(walk[i]), copy[i], "ladder", false);
    for (int i = 0; i < k; ++i) ring[i] = out.graph.add_edge(copy[i], copy[(i + 1) % k], "copy", false);
    for (int i = 0; i < k; ++i) {
      const int corner = Graph::reverse(walk[(i + k - 1) % k]);
      insert_after[corner] = Graph::forward_dart(match[i]);
      new_rotation.push_back({2 * match[i] + 1, 2 * ring[(i + k - 1) % k] + 1, 2 * ring[i]});
    }
  }

  RotationSystem rot;
  rot.order.resize(static_cast<size_t>(out.graph.num_vertices()));
  for (int v = 0; v < g.num_vertices(); ++v)
    for (int d : emb.rotation.order[v]) {
      rot.order[v].push_back(d);
      if (insert_after[d] >= 0) rot.order[v].push_back(insert_after[d]);
    }
  for (size_t i = 0; i < new_rotation.size(); ++i) rot.order[g.num_vertices() + i] = new_rotation[i];

  out.embedding = trace_faces(out.graph, rot);
  if (out.embedding.genus != 0) throw Error("ladder_augment: augmented embedding is not planar");
  return out;
}

}  // namespace pcl
