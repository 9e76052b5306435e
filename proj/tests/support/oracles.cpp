#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

namespace oracle {

int cayley_edge_count(const pcl::GroupModel& g, const std::vector<int>& gens) {
  int count = 0;
  for (int s : gens) {
    const bool invol = s != 0 && g.mul(s, s) == 0;
    std::set<std::pair<int, int>> pairs;
    for (int x = 0; x < g.order(); ++x) {
      const int y = g.mul(x, s);
      if (invol)
        pairs.insert({std::min(x, y), std::max(x, y)});
      else
        ++count;
    }
    count += static_cast<int>(pairs.size());
  }
  return count;
}

bool flood_fill_separates(const pcl::Graph& g, const pcl::Embedding& emb, const std::vector<bool>& cycle_edge, int f1,
                          int f2) {
  const int nf = static_cast<int>(emb.faces.size());
  // face of each dart, rebuilt from the walks
  std::vector<int> face(static_cast<size_t>(g.num_darts()), -1);
  for (int f = 0; f < nf; ++f)
    for (int d : emb.faces[f].darts) face[d] = f;
  std::vector<bool> seen(static_cast<size_t>(nf), false);
  std::vector<int> stack{f1};
  seen[f1] = true;
  while (!stack.empty()) {
    const int f = stack.back();
    stack.pop_back();
    for (int d : emb.faces[f].darts) {
      if (cycle_edge[d / 2]) continue;
      const int o = face[d ^ 1];
      if (!seen[o]) {
        seen[o] = true;
        stack.push_back(o);
      }
    }
  }
  return !seen[f2];
}

int components_without(const pcl::Graph& g, const std::vector<bool>& removed) {
  const int n = g.num_vertices();
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (const auto& e : g.edges()) {
    adj[e.tail].push_back(e.head);
    adj[e.head].push_back(e.tail);
  }
  std::vector<bool> seen(static_cast<size_t>(n), false);
  int comps = 0;
  for (int s = 0; s < n; ++s) {
    if (removed[s] || seen[s]) continue;
    ++comps;
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (!removed[w] && !seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
  }
  return comps;
}

int brute_force_connectivity(const pcl::Graph& g, int cap) {
  const int n = g.num_vertices();
  std::set<std::pair<int, int>> edges;
  for (const auto& e : g.edges())
    if (e.tail != e.head) edges.insert({std::min(e.tail, e.head), std::max(e.tail, e.head)});
  if (static_cast<int>(edges.size()) == n * (n - 1) / 2) return n - 1;
  std::vector<bool> removed(static_cast<size_t>(n), false);
  // try every subset of size k in lexicographic order
  std::function<bool(int, int)> pick = [&](int start, int left) {
    if (left == 0) return components_without(g, removed) > 1;
    for (int v = start; v < n; ++v) {
      removed[v] = true;
      if (pick(v + 1, left - 1)) return true;
      removed[v] = false;
    }
    return false;
  };
  for (int k = 0; k <= cap && k < n - 1; ++k)
    if (pick(0, k)) return k;
  return std::min(cap + 1, n - 1);
}

bool brute_force_isomorphic(const pcl::GroupModel& a, const pcl::GroupModel& b) {
  const int n = a.order();
  if (n != b.order()) return false;
  std::vector<int> phi(static_cast<size_t>(n), -1);
  std::vector<bool> used(static_cast<size_t>(n), false);
  std::function<bool(int)> go = [&](int x) {
    if (x == n) return true;
    for (int y = 0; y < n; ++y) {
      if (used[y] || a.element_order(x) != b.element_order(y)) continue;
      phi[x] = y;
      bool ok = true;
      for (int u = 0; u <= x && ok; ++u)
        for (int v = 0; v <= x && ok; ++v) {
          const int w = a.mul(u, v);
          if (w <= x && phi[w] != b.mul(phi[u], phi[v])) ok = false;
        }
      if (ok) {
        used[y] = true;
        if (go(x + 1)) return true;
        used[y] = false;
      }
      phi[x] = -1;
    }
    return false;
  };
  return go(0);
}

std::string bookkeeping_failure(const pcl::Graph& g, const pcl::Embedding& emb) {
  std::vector<int> seen(static_cast<size_t>(g.num_darts()), 0);
  long total = 0;
  for (const auto& f : emb.faces) {
    total += static_cast<long>(f.darts.size());
    for (int d : f.darts) ++seen[d];
  }
  for (int d = 0; d < g.num_darts(); ++d)
    if (seen[d] != 1) return "dart " + std::to_string(d) + " lies on " + std::to_string(seen[d]) + " faces";
  if (total != 2L * g.num_edges()) return "face lengths sum to " + std::to_string(total);
  // components via union-find over edges
  std::vector<int> parent(static_cast<size_t>(g.num_vertices()));
  for (int v = 0; v < g.num_vertices(); ++v) parent[v] = v;
  std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  for (const auto& e : g.edges()) parent[find(e.tail)] = find(e.head);
  int comps = 0;
  for (int v = 0; v < g.num_vertices(); ++v) comps += find(v) == v;
  const long lhs = g.num_vertices() - g.num_edges() + static_cast<long>(emb.faces.size());
  const long rhs = 2L * comps - 2L * emb.genus;
  if (lhs != rhs) return "V - E + F = " + std::to_string(lhs) + " but 2c - 2g = " + std::to_string(rhs);
  // successor rule re-derived from the rotation
  std::vector<int> succ(static_cast<size_t>(g.num_darts()), -1);
  for (const auto& order : emb.rotation.order)
    for (size_t i = 0; i < order.size(); ++i) succ[order[i]] = order[(i + 1) % order.size()];
  for (const auto& f : emb.faces)
    for (size_t i = 0; i < f.darts.size(); ++i)
      if (succ[f.darts[i] ^ 1] != f.darts[(i + 1) % f.darts.size()]) return "walk breaks the successor rule";
  return {};
}

}  // namespace oracle

namespace oracle {

namespace {

// BFS shell shared by both ball oracles. `step(x, s)` returns the element
// reached from x along generator s; gens flagged as involutions add one edge per pair.
template <class Elt, class Step>
BallCounts bfs_ball(const Elt& start, int num_gens, const std::vector<bool>& invol, Step step, int radius) {
  std::map<Elt, int> dist{{start, 0}};
  std::vector<Elt> order{start};
  for (size_t i = 0; i < order.size(); ++i) {
    const Elt x = order[i];
    const int d = dist[x];
    if (d == radius) continue;
    for (int s = 0; s < num_gens; ++s)
      for (int sign : {1, -1}) {
        const Elt y = step(x, s, sign);
        if (!dist.count(y)) {
          dist[y] = d + 1;
          order.push_back(y);
        }
      }
  }
  BallCounts out;
  out.sphere.assign(static_cast<size_t>(radius) + 1, 0);
  for (const auto& [x, d] : dist) ++out.sphere[d];
  int twice_invol = 0;
  for (const auto& [x, d] : dist)
    for (int s = 0; s < num_gens; ++s) {
      const Elt y = step(x, s, 1);
      if (!dist.count(y)) continue;
      if (invol[s])
        ++twice_invol;
      else
        ++out.edges;
    }
  out.edges += twice_invol / 2;
  return out;
}

}  // namespace

BallCounts coordinate_ball(const std::vector<int>& moduli, const std::vector<std::vector<int>>& gens, int radius) {
  using V = std::vector<int>;
  std::vector<bool> invol;
  for (const auto& s : gens) {
    bool two = true;
    for (size_t i = 0; i < moduli.size(); ++i) {
      const int m = moduli[i];
      const int twice = 2 * s[i];
      if (m == 0 ? twice != 0 : twice % m != 0) two = false;
    }
    bool zero = true;
    for (int c : s) zero = zero && c == 0;
    invol.push_back(two && !zero);
  }
  auto step = [&](const V& x, int s, int sign) {
    V y = x;
    for (size_t i = 0; i < y.size(); ++i) {
      y[i] += sign * gens[s][i];
      if (moduli[i] > 0) y[i] = ((y[i] % moduli[i]) + moduli[i]) % moduli[i];
    }
    return y;
  };
  return bfs_ball(V(moduli.size(), 0), static_cast<int>(gens.size()), invol, step, radius);
}

BallCounts amalgam_ball(const pcl::GroupModel& a, int a_inv, const std::vector<int>& gens_a, const pcl::GroupModel& b,
                        int b_inv, const std::vector<int>& gens_b, int radius) {
  // normal form: factor-tagged representatives plus a trailing bit for b
  using Rep = std::pair<int, int>;  // (factor, element)
  using NF = std::pair<std::vector<Rep>, int>;
  const pcl::GroupModel* fac[2] = {&a, &b};
  const int inv_of[2] = {a_inv, b_inv};
  auto rep = [&](int f, int x) {
    const int y = fac[f]->mul(x, inv_of[f]);
    return std::min(x, y);
  };
  auto bit_of = [](int x, int r) { return x == r ? 0 : 1; };
  auto b_pow = [&](int f, int e) { return e ? inv_of[f] : 0; };

  // merged generator list: (factor, element); the amalgamated involution once
  std::vector<Rep> gens;
  std::vector<bool> invol;
  for (int x : gens_a) {
    gens.push_back({0, x});
    invol.push_back(a.mul(x, x) == 0 && x != 0);
  }
  for (int x : gens_b) {
    if (x == b_inv && std::find(gens_a.begin(), gens_a.end(), a_inv) != gens_a.end()) continue;
    gens.push_back({1, x});
    invol.push_back(b.mul(x, x) == 0 && x != 0);
  }
  auto step = [&](const NF& x, int s, int sign) {
    auto [f, el] = gens[s];
    if (sign < 0) el = fac[f]->inv(el);
    NF y = x;
    int y_el;
    if (!y.first.empty() && y.first.back().first == f) {
      y_el = fac[f]->mul(fac[f]->mul(y.first.back().second, b_pow(f, y.second)), el);
      y.first.pop_back();
    } else {
      y_el = fac[f]->mul(b_pow(f, y.second), el);
    }
    const int r = rep(f, y_el);
    y.second = bit_of(y_el, r);
    if (r != 0) y.first.push_back({f, r});
    return y;
  };
  return bfs_ball(NF{{}, 0}, static_cast<int>(gens.size()), invol, step, radius);
}

}  // namespace oracle

namespace oracle {

std::vector<std::pair<int, int>> contracted_edges(const pcl::Graph& g, const std::vector<std::vector<int>>& vertex_perm,
                                                  const std::vector<std::vector<int>>& dart_perm,
                                                  const std::vector<int>& domain, const std::vector<int>& tree_edges) {
  std::vector<int> owner(static_cast<size_t>(g.num_vertices()), -1);
  for (size_t x = 0; x < vertex_perm.size(); ++x)
    for (int d : domain) owner[vertex_perm[x][d]] = static_cast<int>(x);
  std::vector<bool> tree(static_cast<size_t>(g.num_edges()), false);
  for (const auto& perm : dart_perm)
    for (int t : tree_edges) tree[perm[2 * t] / 2] = true;
  std::vector<std::pair<int, int>> out;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (tree[e]) continue;
    const int a = owner[g.edge(e).tail], b = owner[g.edge(e).head];
    out.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle

namespace oracle {

std::map<int, int> face_lengths(const pcl::Graph& g, const std::vector<std::vector<int>>& rotation) {
  std::vector<int> succ(static_cast<size_t>(g.num_darts()), -1);
  for (const auto& order : rotation)
    for (size_t i = 0; i < order.size(); ++i) succ[order[i]] = order[(i + 1) % order.size()];
  std::vector<bool> used(static_cast<size_t>(g.num_darts()), false);
  std::map<int, int> out;
  for (int d0 = 0; d0 < g.num_darts(); ++d0) {
    if (used[d0]) continue;
    int len = 0;
    for (int d = d0; !used[d]; d = succ[d ^ 1]) {
      used[d] = true;
      ++len;
    }
    ++out[len];
  }
  return out;
}

bool left_multiplication_preserves(const pcl::CayleyGraph& cg) {
  const auto& g = *cg.group;
  using Key = std::tuple<int, int, std::string>;
  auto keys = [&](int x) {
    std::vector<Key> out;
    for (const auto& e : cg.graph.edges()) {
      int t = g.mul(x, e.tail), h = g.mul(x, e.head);
      if (!e.directed && t > h) std::swap(t, h);
      out.emplace_back(t, h, e.label);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  const auto base = keys(0);
  for (int x = 1; x < g.order(); ++x)
    if (keys(x) != base) return false;
  return true;
}

}  // namespace oracle
