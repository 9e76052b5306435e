#include "pcl/cyclecut.hpp"

#include <algorithm>
#include <bit>
#include <queue>

#include "pcl/augment.hpp"

namespace pcl {

EdgeVector EdgeVector::of(int num_edges, const std::vector<int>& edges) {
  EdgeVector v(num_edges);
  for (int e : edges) v.flip(e);
  return v;
}

EdgeVector& EdgeVector::operator^=(const EdgeVector& o) {
  if (o.size_ != size_) throw Error("EdgeVector: size mismatch");
  for (size_t i = 0; i < bits_.size(); ++i) bits_[i] ^= o.bits_[i];
  return *this;
}

int EdgeVector::count() const {
  int c = 0;
  for (auto b : bits_) c += std::popcount(b);
  return c;
}

std::vector<int> EdgeVector::support() const {
  std::vector<int> out;
  for (int e = 0; e < size_; ++e)
    if (test(e)) out.push_back(e);
  return out;
}

int EdgeVector::lowest() const {
  for (size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) return static_cast<int>(i * 64) + std::countr_zero(bits_[i]);
  return -1;
}

int gf2_rank(std::vector<EdgeVector> rows) {
  int rank = 0;
  for (size_t i = 0; i < rows.size(); ++i) {
    const int pivot = rows[i].lowest();
    if (pivot < 0) continue;
    ++rank;
    for (size_t j = i + 1; j < rows.size(); ++j)
      if (rows[j].test(pivot)) rows[j] ^= rows[i];
  }
  return rank;
}

bool is_single_cycle(const Graph& g, const EdgeVector& v) {
  const auto edges = v.support();
  if (edges.empty()) return false;
  std::vector<int> deg(static_cast<size_t>(g.num_vertices()), 0);
  Graph sub(g.num_vertices());
  for (int e : edges) {
    ++deg[g.edge(e).tail];
    ++deg[g.edge(e).head];
    sub.add_edge(g.edge(e).tail, g.edge(e).head);
  }
  std::vector<bool> keep(static_cast<size_t>(g.num_vertices()));
  for (int x = 0; x < g.num_vertices(); ++x) {
    if (deg[x] != 0 && deg[x] != 2) return false;
    keep[x] = deg[x] == 2;
  }
  std::vector<int> comp;
  return connected_components(sub, keep, comp) == 1;
}

EdgeVector face_boundary(const Graph& g, const Embedding& emb, int f) {
  EdgeVector v(g.num_edges());
  for (int d : emb.faces.at(f).darts) v.flip(Graph::dart_edge(d));
  return v;
}

std::vector<int> dual_path(const Graph& g, const Embedding& emb, int f1, int f2) {
  const int nf = static_cast<int>(emb.faces.size());
  if (f1 < 0 || f1 >= nf || f2 < 0 || f2 >= nf) throw Error("dual_path: face out of range");
  std::vector<std::vector<int>> crossing(static_cast<size_t>(nf));  // edges on each face
  for (int e = 0; e < g.num_edges(); ++e) {
    const int a = emb.face_of_dart[2 * e], b = emb.face_of_dart[2 * e + 1];
    if (a == b) continue;
    crossing[a].push_back(e);
    crossing[b].push_back(e);
  }
  std::vector<int> via(static_cast<size_t>(nf), -1);
  std::vector<bool> seen(static_cast<size_t>(nf), false);
  std::queue<int> q;
  q.push(f1);
  seen[f1] = true;
  while (!q.empty()) {
    const int f = q.front();
    q.pop();
    for (int e : crossing[f]) {
      const int a = emb.face_of_dart[2 * e];
      const int o = a == f ? emb.face_of_dart[2 * e + 1] : a;
      if (seen[o]) continue;
      seen[o] = true;
      via[o] = e;
      q.push(o);
    }
  }
  if (!seen[f2]) throw Error("dual_path: faces lie in different components");
  std::vector<int> path;
  for (int f = f2; f != f1;) {
    const int e = via[f];
    path.push_back(e);
    const int a = emb.face_of_dart[2 * e];
    f = a == f ? emb.face_of_dart[2 * e + 1] : a;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

int crossing_parity(const Graph& g, const Embedding& emb, const EdgeVector& cycle, int f1, int f2) {
  if (emb.genus != 0) throw Error("crossing_parity: embedding is not plane");
  if (!is_single_cycle(g, cycle)) throw Error("crossing_parity: edge set is not a single cycle");
  int parity = 0;
  for (int e : dual_path(g, emb, f1, f2)) parity ^= cycle.test(e) ? 1 : 0;
  return parity;
}

SepSumReport sep_sum_check(const Graph& g, const Embedding& emb, int f1, int f2, const std::vector<EdgeVector>& cycles) {
  SepSumReport r;
  EdgeVector sum(g.num_edges());
  for (const auto& c : cycles) {
    r.parities.push_back(crossing_parity(g, emb, c, f1, f2));
    if (r.parities.back() != 0) r.precondition_failed = true;
    sum ^= c;
  }
  r.sum_is_cycle = is_single_cycle(g, sum);
  if (r.sum_is_cycle) {
    r.sum_parity = crossing_parity(g, emb, sum, f1, f2);
    r.violation = !r.precondition_failed && *r.sum_parity != 0;
  }
  return r;
}

namespace {

// Shortest path in g avoiding `blocked`, from any source to any target; empty when none.
std::vector<int> bfs_path(const std::vector<std::vector<int>>& adj, const std::vector<int>& sources,
                          const std::vector<bool>& target, const std::vector<bool>& blocked) {
  std::vector<int> prev(adj.size(), -2);
  std::queue<int> q;
  for (int s : sources)
    if (!blocked[s] && prev[s] == -2) {
      prev[s] = -1;
      q.push(s);
    }
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    if (target[x]) {
      std::vector<int> path;
      for (int y = x; y != -1; y = prev[y]) path.push_back(y);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (int y : adj[x])
      if (!blocked[y] && prev[y] == -2) {
        prev[y] = x;
        q.push(y);
      }
  }
  return {};
}

int edge_between(const Graph& g, int a, int b) {
  for (int d : g.darts_at(a))
    if (g.dart_head(d) == b) return Graph::dart_edge(d);
  throw Error("edge_between: vertices not adjacent");
}

}  // namespace

SeparatingCycle separating_cycle_between_faces(const Graph& g, const Embedding& emb, int f1, int f2) {
  if (f1 == f2) throw Error("separating_cycle_between_faces: faces must differ");
  if (emb.genus != 0) throw Error("separating_cycle_between_faces: embedding is not plane");
  if (g.num_vertices() < 3 || vertex_connectivity(g) < 2)
    throw Error("separating_cycle_between_faces: graph is not 2-connected");
  const int n = g.num_vertices();
  const auto adj = g.simple_adjacency();
  const auto walk1 = dart_walk_vertices(g, emb.faces.at(f1).darts);
  const auto walk2 = dart_walk_vertices(g, emb.faces.at(f2).darts);
  std::vector<bool> on1(static_cast<size_t>(n), false), on2(static_cast<size_t>(n), false), none(static_cast<size_t>(n), false);
  for (int v : walk1) on1[v] = true;
  for (int v : walk2) on2[v] = true;

  SeparatingCycle out{face_boundary(g, emb, f1), "boundary"};
  const int k = static_cast<int>(walk1.size());
  const auto path = bfs_path(adj, walk1, on2, none);
  if (k < 3 || path.size() < 2) return out;

  // p: last vertex of P on the boundary of f1; u, v: its neighbours along that boundary
  const int p = path.front();
  const int i = static_cast<int>(std::find(walk1.begin(), walk1.end(), p) - walk1.begin());
  const int u = walk1[(i + k - 1) % k], v = walk1[(i + 1) % k];
  std::vector<bool> blocked(static_cast<size_t>(n), false), at_v(static_cast<size_t>(n), false);
  for (int x : path) blocked[x] = true;
  at_v[v] = true;
  const auto detour = bfs_path(adj, {u}, at_v, blocked);
  if (detour.empty() || u == v) return out;

  EdgeVector c(g.num_edges());
  c.flip(emb.faces[f1].darts[(i + k - 1) % k] >> 1);
  c.flip(emb.faces[f1].darts[i] >> 1);
  for (size_t j = 0; j + 1 < detour.size(); ++j) c.flip(edge_between(g, detour[j], detour[j + 1]));
  if (is_single_cycle(g, c) && crossing_parity(g, emb, c, f1, f2) == 1) out = {c, "detour"};
  return out;
}

StarGenerationReport star_generation_check(const CayleyGraph& cg) {
  if (!cg.complete()) throw Error("star_generation_check: needs a complete Cayley graph");
  if (!is_connected(cg.graph)) throw Error("star_generation_check: graph is disconnected");
  const DartIndex index(cg);
  std::vector<EdgeVector> rows;
  for (int x = 0; x < cg.num_vertices(); ++x) {
    EdgeVector star(cg.num_edges());
    for (int d : cg.graph.darts_at(0)) star.flip(Graph::dart_edge(left_translate_dart(cg, index, x, d)));
    rows.push_back(std::move(star));
  }
  StarGenerationReport r;
  r.rank = gf2_rank(std::move(rows));
  r.expected = cg.num_vertices() - 1;
  r.ok = r.rank == r.expected;
  return r;
}

}  // namespace pcl
