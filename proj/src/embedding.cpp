#include "pcl/embedding.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace pcl {

Embedding trace_faces(const Graph& g, const RotationSystem& rot, const std::vector<bool>& frontier) {
  const int n = g.num_vertices();
  if (static_cast<int>(rot.order.size()) != n) throw Error("trace_faces: rotation has wrong vertex count");
  std::vector<int> owner(static_cast<size_t>(g.num_darts()), -1), pos(static_cast<size_t>(g.num_darts()), -1);
  for (int v = 0; v < n; ++v) {
    for (int i = 0; i < static_cast<int>(rot.order[v].size()); ++i) {
      const int d = rot.order[v][i];
      if (d < 0 || d >= g.num_darts()) throw Error("trace_faces: dart id out of range");
      if (owner[d] >= 0) throw Error("trace_faces: dart " + std::to_string(d) + " listed twice");
      if (g.dart_tail(d) != v) throw Error("trace_faces: dart " + std::to_string(d) + " is not at its tail");
      owner[d] = v;
      pos[d] = i;
    }
  }
  for (int d = 0; d < g.num_darts(); ++d)
    if (owner[d] < 0) throw Error("trace_faces: rotation is missing dart " + std::to_string(d));

  Embedding emb;
  emb.rotation = rot;
  emb.face_of_dart.assign(static_cast<size_t>(g.num_darts()), -1);
  for (int start = 0; start < g.num_darts(); ++start) {
    if (emb.face_of_dart[start] >= 0) continue;
    FacialWalk walk;
    const int f = static_cast<int>(emb.faces.size());
    int d = start;
    do {
      emb.face_of_dart[d] = f;
      walk.darts.push_back(d);
      if (!frontier.empty() && frontier[g.dart_tail(d)]) walk.finite = false;
      const int r = Graph::reverse(d);
      const auto& around = rot.order[owner[r]];
      d = around[(pos[r] + 1) % around.size()];
    } while (d != start);
    emb.faces.push_back(std::move(walk));
  }

  std::vector<bool> all(static_cast<size_t>(n), true);
  std::vector<int> comp;
  const int c = connected_components(g, all, comp);
  int isolated = 0;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 0) ++isolated;
  const int faces = static_cast<int>(emb.faces.size()) + isolated;
  const int twice_genus = 2 * c - n + g.num_edges() - faces;
  if (twice_genus < 0 || twice_genus % 2 != 0) throw Error("trace_faces: Euler characteristic is inconsistent");
  emb.genus = twice_genus / 2;
  return emb;
}

RotationSystem apply_spins(const RotationSystem& rot, const std::vector<int>& spins) {
  RotationSystem out = rot;
  for (size_t v = 0; v < out.order.size(); ++v)
    if (spins.at(v) < 0) std::reverse(out.order[v].begin(), out.order[v].end());
  return out;
}

RotationSystem mirror(const RotationSystem& rot) {
  return apply_spins(rot, std::vector<int>(rot.order.size(), -1));
}

RotationSystem canonical_form(const RotationSystem& rot) {
  RotationSystem out;
  for (const auto& cyc : rot.order) out.order.push_back(canonical_rotation(cyc));
  return out;
}

void check_face_bookkeeping(const Graph& g, const Embedding& emb) {
  size_t total = 0;
  std::vector<int> seen(static_cast<size_t>(g.num_darts()), 0);
  for (const auto& f : emb.faces) {
    total += f.darts.size();
    for (int d : f.darts) ++seen.at(d);
  }
  if (total != static_cast<size_t>(2 * g.num_edges())) throw Error("face lengths do not sum to 2|E|");
  for (int s : seen)
    if (s != 1) throw Error("a dart lies on more than one face, or none");
  if (is_connected(g) && g.num_edges() > 0) {
    const long long chi = static_cast<long long>(g.num_vertices()) - g.num_edges() +
                          static_cast<long long>(emb.faces.size());
    if (chi != 2 - 2LL * emb.genus) throw Error("Euler's formula fails for the traced embedding");
  }
}

std::string to_string(KuratowskiWitness::Kind k) { return k == KuratowskiWitness::Kind::K5 ? "K5" : "K3,3"; }

namespace {

using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                     boost::property<boost::vertex_index_t, int>,
                                     boost::property<boost::edge_index_t, int>>;
using BEdge = boost::graph_traits<BGraph>::edge_descriptor;

int dart_at(const Graph& g, int e, int v) { return g.edge(e).tail == v ? 2 * e : 2 * e + 1; }

bool simple_planar(int n, const Graph& g, const std::vector<int>& edges) {
  BGraph bg(static_cast<size_t>(n));
  int i = 0;
  for (int e : edges) {
    auto [be, ok] = boost::add_edge(static_cast<size_t>(g.edge(e).tail), static_cast<size_t>(g.edge(e).head), bg);
    boost::put(boost::edge_index, bg, be, i++);
  }
  return boost::boyer_myrvold_planarity_test(bg);
}

// Drop edges while the rest stays non-planar; what survives is a Kuratowski subdivision.
std::vector<int> minimal_obstruction(const Graph& g, std::vector<int> edges) {
  for (size_t i = 0; i < edges.size();) {
    std::vector<int> rest = edges;
    rest.erase(rest.begin() + static_cast<long>(i));
    if (!simple_planar(g.num_vertices(), g, rest))
      edges = std::move(rest);
    else
      ++i;
  }
  return edges;
}

KuratowskiWitness extract_witness(const Graph& g, const std::vector<int>& edges) {
  std::map<int, std::vector<int>> incident;
  for (int e : edges) {
    incident[g.edge(e).tail].push_back(e);
    incident[g.edge(e).head].push_back(e);
  }
  KuratowskiWitness w;
  w.edges = edges;
  std::sort(w.edges.begin(), w.edges.end());
  for (const auto& [v, es] : incident)
    if (es.size() >= 3) w.branch.push_back(v);
  const auto deg = [&](int v) { return incident[v].size(); };
  if (w.branch.size() == 5 && std::all_of(w.branch.begin(), w.branch.end(), [&](int v) { return deg(v) == 4; }))
    w.kind = KuratowskiWitness::Kind::K5;
  else if (w.branch.size() == 6 && std::all_of(w.branch.begin(), w.branch.end(), [&](int v) { return deg(v) == 3; }))
    w.kind = KuratowskiWitness::Kind::K33;
  else
    throw Error("planarity_test: obstruction is not a Kuratowski subdivision");

  std::set<int> used;
  const std::set<int> branch(w.branch.begin(), w.branch.end());
  for (int b : w.branch) {
    for (int e0 : incident[b]) {
      if (used.count(e0)) continue;
      std::vector<int> path{b};
      int v = b, e = e0;
      for (;;) {
        used.insert(e);
        v = g.edge(e).tail == v ? g.edge(e).head : g.edge(e).tail;
        path.push_back(v);
        if (branch.count(v)) break;
        const auto& es = incident[v];
        if (es.size() != 2) throw Error("planarity_test: subdivision vertex with degree != 2");
        e = es[0] == e ? es[1] : es[0];
      }
      w.paths.push_back(std::move(path));
    }
  }
  return w;
}

}  // namespace

PlanarityResult planarity_test(const Graph& g) {
  const int n = g.num_vertices();
  // underlying simple graph; representative = first edge between a vertex pair
  std::map<std::pair<int, int>, int> rep_of_pair;
  std::vector<int> simple_rep;
  for (int e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.tail == ed.head) continue;
    if (rep_of_pair.emplace(std::minmax(ed.tail, ed.head), e).second) simple_rep.push_back(e);
  }

  BGraph bg(static_cast<size_t>(n));
  for (int i = 0; i < static_cast<int>(simple_rep.size()); ++i) {
    const Edge& ed = g.edge(simple_rep[i]);
    auto [be, ok] = boost::add_edge(static_cast<size_t>(ed.tail), static_cast<size_t>(ed.head), bg);
    boost::put(boost::edge_index, bg, be, i);
  }

  std::vector<std::vector<BEdge>> bemb(static_cast<size_t>(std::max(n, 1)));
  std::vector<BEdge> kur;
  const bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg, boost::boyer_myrvold_params::embedding = &bemb[0],
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kur));

  if (!planar) {
    std::vector<int> edges;
    for (const BEdge& be : kur) edges.push_back(simple_rep[boost::get(boost::edge_index, bg, be)]);
    // the reported subgraph is sometimes larger than a subdivision
    if (simple_planar(n, g, edges)) edges = simple_rep;
    return extract_witness(g, minimal_obstruction(g, std::move(edges)));
  }

  RotationSystem rot;
  rot.order.resize(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v)
    for (const BEdge& be : bemb[v]) rot.order[v].push_back(dart_at(g, simple_rep[boost::get(boost::edge_index, bg, be)], v));

  for (int e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.tail == ed.head) {
      rot.order[ed.tail].push_back(2 * e);
      rot.order[ed.tail].push_back(2 * e + 1);
      continue;
    }
    const int r = rep_of_pair.at(std::minmax(ed.tail, ed.head));
    if (r == e) continue;
    // parallel edge: right after the representative at the tail, right before it at the head
    auto& at_u = rot.order[ed.tail];
    at_u.insert(std::find(at_u.begin(), at_u.end(), dart_at(g, r, ed.tail)) + 1, 2 * e);
    auto& at_v = rot.order[ed.head];
    at_v.insert(std::find(at_v.begin(), at_v.end(), dart_at(g, r, ed.head)), 2 * e + 1);
  }

  Embedding emb = trace_faces(g, rot);
  if (emb.genus != 0) throw Error("planarity_test: internal embedding is not planar");
  return emb;
}

bool verify_kuratowski(const Graph& g, const KuratowskiWitness& w, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const bool k5 = w.kind == KuratowskiWitness::Kind::K5;
  const size_t nb = k5 ? 5 : 6, np = k5 ? 10 : 9;
  std::set<int> branch(w.branch.begin(), w.branch.end());
  if (branch.size() != nb || w.branch.size() != nb) return fail("wrong number of branch vertices");
  for (int b : branch)
    if (b < 0 || b >= g.num_vertices()) return fail("branch vertex out of range");
  if (w.paths.size() != np) return fail("wrong number of subdivision paths");

  std::set<int> interior;
  std::set<std::pair<int, int>> ends;
  for (const auto& p : w.paths) {
    if (p.size() < 2) return fail("path too short");
    if (!branch.count(p.front()) || !branch.count(p.back()) || p.front() == p.back())
      return fail("path does not join two distinct branch vertices");
    for (size_t i = 0; i + 1 < p.size(); ++i)
      if (!g.adjacent(p[i], p[i + 1])) return fail("path uses a non-edge");
    for (size_t i = 1; i + 1 < p.size(); ++i) {
      if (branch.count(p[i])) return fail("path passes through a branch vertex");
      if (!interior.insert(p[i]).second) return fail("paths are not internally disjoint");
    }
    if (!ends.insert(std::minmax(p.front(), p.back())).second) return fail("two paths join the same branch pair");
  }

  // the edge list must be exactly one edge per path step
  std::multiset<std::pair<int, int>> steps, listed;
  for (const auto& p : w.paths)
    for (size_t i = 0; i + 1 < p.size(); ++i) steps.insert(std::minmax(p[i], p[i + 1]));
  for (int e : w.edges) {
    if (e < 0 || e >= g.num_edges()) return fail("witness edge out of range");
    listed.insert(std::minmax(g.edge(e).tail, g.edge(e).head));
  }
  if (std::set<int>(w.edges.begin(), w.edges.end()).size() != w.edges.size()) return fail("witness edge repeated");
  if (steps != listed) return fail("witness edges do not match the paths");

  if (k5) return true;  // 10 distinct pairs among 5 vertices is all of K5
  // K3,3: the branch graph must be bipartite with sides of size 3
  std::map<int, int> side;
  std::vector<int> stack{*branch.begin()};
  side[*branch.begin()] = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const auto& [a, b] : ends) {
      if (a != v && b != v) continue;
      const int o = a == v ? b : a;
      if (!side.count(o)) {
        side[o] = 1 - side[v];
        stack.push_back(o);
      } else if (side[o] == side[v]) {
        return fail("branch graph is not bipartite");
      }
    }
  }
  if (side.size() != 6) return fail("branch graph is disconnected");
  const auto left = std::count_if(side.begin(), side.end(), [](const auto& kv) { return kv.second == 0; });
  if (left != 3) return fail("bipartition sides are not both of size 3");
  return true;
}

RotationSystem label_rotation(const CayleyGraph& cg, const std::vector<DartKey>& label_order,
                              const std::vector<int>& spins) {
  const DartIndex index(cg);
  RotationSystem rot;
  rot.order.resize(static_cast<size_t>(cg.num_vertices()));
  for (int v = 0; v < cg.num_vertices(); ++v) {
    for (const DartKey& k : label_order) {
      const int d = index.at(v, k);
      if (d < 0) throw Error("label_rotation: vertex lacks a dart for some label");
      rot.order[v].push_back(d);
    }
    if (spins.at(v) < 0) std::reverse(rot.order[v].begin(), rot.order[v].end());
  }
  return rot;
}

std::vector<ConsistentEmbedding> search_consistent_embeddings(const CayleyGraph& cg, long long max_candidates) {
  if (!cg.complete()) throw Error("search_consistent_embeddings: graph must be complete, not a ball");
  const auto keys = cg.all_dart_keys();
  const int d = static_cast<int>(keys.size());
  const int n = cg.num_vertices();
  if (d > 6) throw BudgetExceeded("search_consistent_embeddings: label degree above 6");
  long long candidates = 1;
  for (int i = 2; i < d; ++i) candidates *= i;
  if (n - 1 >= 62) throw BudgetExceeded("search_consistent_embeddings: too many vertices");
  const long long spin_count = 1LL << (n - 1);
  if (candidates > max_candidates / spin_count)
    throw BudgetExceeded("search_consistent_embeddings: candidate count exceeds budget");

  const DartIndex index(cg);
  std::vector<std::vector<int>> dart_of(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(d)));
  for (int v = 0; v < n; ++v)
    for (int k = 0; k < d; ++k) dart_of[v][k] = index.at(v, keys[k]);

  std::vector<ConsistentEmbedding> out;
  std::vector<int> perm(static_cast<size_t>(d));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    RotationSystem rot;
    rot.order.resize(static_cast<size_t>(n));
    for (long long mask = 0; mask < spin_count; ++mask) {
      std::vector<int> spins(static_cast<size_t>(n), 1);
      for (int v = 1; v < n; ++v)
        if (mask >> (v - 1) & 1) spins[v] = -1;
      for (int v = 0; v < n; ++v) {
        auto& o = rot.order[v];
        o.clear();
        for (int k : perm) o.push_back(dart_of[v][k]);
        if (spins[v] < 0) std::reverse(o.begin(), o.end());
      }
      Embedding emb = trace_faces(cg.graph, rot);
      if (emb.genus != 0) continue;
      ConsistentEmbedding ce;
      for (int k : perm) ce.label_order.push_back(keys[k]);
      ce.spins = std::move(spins);
      ce.embedding = std::move(emb);
      out.push_back(std::move(ce));
    }
  } while (d > 1 && std::next_permutation(perm.begin() + 1, perm.end()));
  return out;
}

FaceReport classify_faces(const CayleyGraph& ball, const Embedding& emb) {
  FaceReport r;
  for (const auto& f : emb.faces) {
    bool touches = false;
    for (int d : f.darts)
      if (ball.frontier[ball.graph.dart_tail(d)]) touches = true;
    if (touches) {
      ++r.frontier_faces;
    } else {
      ++r.finite_faces;
      r.max_finite_length = std::max(r.max_finite_length, static_cast<int>(f.darts.size()));
    }
  }
  return r;
}

std::vector<std::pair<int, int>> face_vector(const Embedding& emb) {
  std::map<int, int> counts;
  for (const auto& f : emb.faces) ++counts[static_cast<int>(f.darts.size())];
  return {counts.begin(), counts.end()};
}

}  // namespace pcl
