#include "pcl/actions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace pcl {

namespace {

using EdgeKey = std::tuple<int, int, std::string, bool>;

EdgeKey key_of(int tail, int head, const std::string& label, bool directed) {
  if (!directed && tail > head) std::swap(tail, head);
  return {tail, head, label, directed};
}

bool is_permutation(const std::vector<int>& p) {
  std::vector<bool> hit(p.size(), false);
  for (int x : p) {
    if (x < 0 || x >= static_cast<int>(p.size()) || hit[x]) return false;
    hit[x] = true;
  }
  return true;
}

}  // namespace

void GraphAction::validate() const {
  if (!group) throw Error("GraphAction: no group");
  const int n = group->order();
  const int nv = graph.num_vertices(), nd = graph.num_darts();
  if (static_cast<int>(vertex_perm.size()) != n || static_cast<int>(dart_perm.size()) != n)
    throw Error("GraphAction: one permutation per element required");
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(vertex_perm[x].size()) != nv || !is_permutation(vertex_perm[x]))
      throw Error("GraphAction: vertex table of " + group->name(x) + " is not a permutation");
    if (static_cast<int>(dart_perm[x].size()) != nd || !is_permutation(dart_perm[x]))
      throw Error("GraphAction: dart table of " + group->name(x) + " is not a permutation");
    for (int d = 0; d < nd; ++d) {
      const int y = dart_perm[x][d];
      if (graph.dart_tail(y) != vertex_perm[x][graph.dart_tail(d)] || dart_perm[x][Graph::reverse(d)] != Graph::reverse(y))
        throw Error("GraphAction: dart table of " + group->name(x) + " breaks incidence");
      const Edge& a = graph.edge(Graph::dart_edge(d));
      const Edge& b = graph.edge(Graph::dart_edge(y));
      if (a.label != b.label || a.directed != b.directed || (a.directed && (d & 1) != (y & 1)))
        throw Error("GraphAction: dart table of " + group->name(x) + " breaks labels");
    }
  }
  for (int v = 0; v < nv; ++v)
    if (vertex_perm[0][v] != v) throw Error("GraphAction: identity moves a vertex");
  for (int d = 0; d < nd; ++d)
    if (dart_perm[0][d] != d) throw Error("GraphAction: identity moves a dart");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const auto& pxy = vertex_perm[group->mul(x, y)];
      for (int v = 0; v < nv; ++v)
        if (pxy[v] != vertex_perm[x][vertex_perm[y][v]]) throw Error("GraphAction: vertex tables are not an action");
      const auto& dxy = dart_perm[group->mul(x, y)];
      for (int d = 0; d < nd; ++d)
        if (dxy[d] != dart_perm[x][dart_perm[y][d]]) throw Error("GraphAction: dart tables are not an action");
    }
}

GraphAction GraphAction::from_vertex_map(std::shared_ptr<const GroupModel> group, Graph graph,
                                         std::vector<std::vector<int>> vertex_perm) {
  std::map<EdgeKey, std::vector<int>> classes;
  std::vector<int> rank(static_cast<size_t>(graph.num_edges()));
  for (int e = 0; e < graph.num_edges(); ++e) {
    const Edge& ed = graph.edge(e);
    auto& cls = classes[key_of(ed.tail, ed.head, ed.label, ed.directed)];
    rank[e] = static_cast<int>(cls.size());
    cls.push_back(e);
  }
  GraphAction out;
  out.group = std::move(group);
  out.dart_perm.assign(vertex_perm.size(), std::vector<int>(static_cast<size_t>(graph.num_darts())));
  for (size_t x = 0; x < vertex_perm.size(); ++x) {
    const auto& p = vertex_perm[x];
    for (int e = 0; e < graph.num_edges(); ++e) {
      const Edge& ed = graph.edge(e);
      const int t = p.at(ed.tail), h = p.at(ed.head);
      auto it = classes.find(key_of(t, h, ed.label, ed.directed));
      if (it == classes.end() || rank[e] >= static_cast<int>(it->second.size()))
        throw Error("GraphAction: vertex map is not a graph automorphism");
      const int f = it->second[rank[e]];
      const bool flip = graph.edge(f).tail != t;
      out.dart_perm[x][2 * e] = 2 * f + (flip ? 1 : 0);
      out.dart_perm[x][2 * e + 1] = 2 * f + (flip ? 0 : 1);
    }
  }
  out.graph = std::move(graph);
  out.vertex_perm = std::move(vertex_perm);
  return out;
}

GraphAction left_action(const CayleyGraph& cg) {
  if (!cg.complete() || !cg.group) throw Error("left_action: needs a complete Cayley graph");
  const GroupModel& g = *cg.group;
  const DartIndex index(cg);
  GraphAction out;
  out.group = cg.group;
  out.graph = cg.graph;
  for (int x = 0; x < g.order(); ++x) {
    std::vector<int> vp(static_cast<size_t>(g.order())), dp(static_cast<size_t>(cg.graph.num_darts()));
    for (int v = 0; v < g.order(); ++v) vp[v] = g.mul(x, v);
    for (int d = 0; d < cg.graph.num_darts(); ++d) dp[d] = left_translate_dart(cg, index, x, d);
    out.vertex_perm.push_back(std::move(vp));
    out.dart_perm.push_back(std::move(dp));
  }
  return out;
}

std::optional<FixedPoint> find_fixed_point(const GraphAction& a) {
  for (int x = 1; x < static_cast<int>(a.vertex_perm.size()); ++x)
    for (int v = 0; v < a.graph.num_vertices(); ++v)
      if (a.vertex_perm[x][v] == v) return FixedPoint{x, v};
  return std::nullopt;
}

namespace {

struct BlowUpCore {
  Graph graph;
  std::vector<int> new_id;  // surviving vertex -> new id, -1 for blown-up vertices
  std::vector<std::vector<int>> cycles;
  std::vector<std::vector<int>> rings;  // ring edge ids per cycle
};

// orders[i]: the darts at vs[i] in attachment order.
BlowUpCore blow_up_core(const Graph& g, const std::vector<int>& vs, const std::vector<std::vector<int>>& orders) {
  BlowUpCore out;
  std::vector<bool> blown(static_cast<size_t>(g.num_vertices()), false);
  for (int v : vs) {
    if (v < 0 || v >= g.num_vertices()) throw Error("blow_up: vertex out of range");
    if (blown[v]) throw Error("blow_up: vertex listed twice");
    if (g.degree(v) == 0) throw Error("blow_up: isolated vertex " + std::to_string(v));
    blown[v] = true;
  }
  out.new_id.assign(static_cast<size_t>(g.num_vertices()), -1);
  int next = 0;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (!blown[v]) out.new_id[v] = next++;
  out.graph = Graph(next);

  std::vector<int> attach(static_cast<size_t>(g.num_darts()), -1);
  for (size_t i = 0; i < vs.size(); ++i) {
    std::vector<int> cyc;
    for (int d : orders[i]) {
      const int c = out.graph.add_vertex();
      attach[d] = c;
      cyc.push_back(c);
    }
    out.cycles.push_back(std::move(cyc));
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    const int t = blown[ed.tail] ? attach[2 * e] : out.new_id[ed.tail];
    const int h = blown[ed.head] ? attach[2 * e + 1] : out.new_id[ed.head];
    out.graph.add_edge(t, h, ed.label, ed.directed);
  }
  for (const auto& cyc : out.cycles) {
    std::vector<int> ring;
    const int k = static_cast<int>(cyc.size());
    for (int i = 0; i < k; ++i) ring.push_back(out.graph.add_edge(cyc[i], cyc[(i + 1) % k], "ring", true));
    out.rings.push_back(std::move(ring));
  }
  return out;
}

}  // namespace

BlowUp blow_up(const Graph& g, const std::vector<int>& vs, const RotationSystem* rot) {
  std::vector<std::vector<int>> orders;
  for (int v : vs) {
    if (v < 0 || v >= g.num_vertices()) throw Error("blow_up: vertex out of range");
    orders.push_back(rot ? rot->order.at(v) : g.darts_at(v));
  }
  BlowUpCore core = blow_up_core(g, vs, orders);
  BlowUp out;
  if (rot) {
    RotationSystem r;
    r.order.resize(static_cast<size_t>(core.graph.num_vertices()));
    for (int v = 0; v < g.num_vertices(); ++v)
      if (core.new_id[v] >= 0) r.order[core.new_id[v]] = rot->order[v];
    for (size_t i = 0; i < vs.size(); ++i) {
      const int k = static_cast<int>(core.cycles[i].size());
      for (int j = 0; j < k; ++j) {
        // outward dart, then towards the next cycle vertex, then back towards the previous one
        const int d = orders[i][j];
        r.order[core.cycles[i][j]] = {d, 2 * core.rings[i][j], 2 * core.rings[i][(j + k - 1) % k] + 1};
      }
    }
    out.rotation = std::move(r);
  }
  out.graph = std::move(core.graph);
  out.cycles = std::move(core.cycles);
  return out;
}

NonFreeAction::NonFreeAction(FixedPoint w)
    : Error("action is not free: element " + std::to_string(w.element) + " fixes vertex " + std::to_string(w.vertex)),
      witness(w) {}

BabaiResult babai_contract(const GraphAction& a) {
  if (auto w = find_fixed_point(a)) throw NonFreeAction(*w);
  const Graph& g = a.graph;
  if (!is_connected(g)) throw Error("babai_contract: graph is disconnected");
  const GroupModel& grp = *a.group;
  const int n = grp.order(), nv = g.num_vertices();

  std::vector<int> orbit(static_cast<size_t>(nv), -1);
  int orbits = 0;
  for (int v = 0; v < nv; ++v) {
    if (orbit[v] >= 0) continue;
    for (int x = 0; x < n; ++x) orbit[a.vertex_perm[x][v]] = orbits;
    ++orbits;
  }

  BabaiResult out;
  auto& dom = out.domain;
  std::vector<int> rep(static_cast<size_t>(orbits), -1);
  std::vector<bool> in_d(static_cast<size_t>(nv), false);
  if (nv > 0) {
    rep[orbit[0]] = 0;
    in_d[0] = true;
    dom.vertices.push_back(0);
  }
  while (static_cast<int>(dom.vertices.size()) < orbits) {
    bool grown = false;
    for (int e = 0; e < g.num_edges() && !grown; ++e) {
      const Edge& ed = g.edge(e);
      for (auto [u, w] : {std::pair{ed.tail, ed.head}, std::pair{ed.head, ed.tail}})
        if (in_d[u] && rep[orbit[w]] < 0) {
          rep[orbit[w]] = w;
          in_d[w] = true;
          dom.vertices.push_back(w);
          dom.tree_edges.push_back(e);
          grown = true;
          break;
        }
    }
    if (!grown) throw Error("babai_contract: fundamental domain cannot be grown");
  }

  // elt[v]: the element x with x.rep = v
  std::vector<int> elt(static_cast<size_t>(nv), -1);
  for (int r : dom.vertices)
    for (int x = 0; x < n; ++x) elt[a.vertex_perm[x][r]] = x;

  std::vector<bool> contracted(static_cast<size_t>(g.num_edges()), false);
  for (int t : dom.tree_edges)
    for (int x = 0; x < n; ++x) contracted[Graph::dart_edge(a.dart_perm[x][2 * t])] = true;

  // edge orbits outside the tree translates, in order of least member
  struct Orbit {
    int element = 0;
    bool flipped = false;
    std::vector<int> darts;  // oriented member darts
  };
  std::vector<Orbit> eorbits;
  std::vector<bool> seen(static_cast<size_t>(g.num_edges()), false);
  for (int e = 0; e < g.num_edges(); ++e) {
    if (contracted[e] || seen[e]) continue;
    Orbit o;
    std::set<int> members;
    for (int x = 0; x < n; ++x) {
      const int d = a.dart_perm[x][2 * e];
      if (d == 2 * e + 1) o.flipped = true;
      if (members.insert(Graph::dart_edge(d)).second) o.darts.push_back(d);
      seen[Graph::dart_edge(d)] = true;
    }
    o.element = grp.mul(grp.inv(elt[g.edge(e).tail]), elt[g.edge(e).head]);
    eorbits.push_back(std::move(o));
  }

  CayleyGraph& q = out.quotient;
  q.group = a.group;
  q.names = grp.names();
  q.frontier.assign(static_cast<size_t>(n), false);
  std::map<int, int> uses;
  for (const auto& o : eorbits) ++uses[o.element];
  std::map<int, int> used;
  for (const auto& o : eorbits) {
    std::string label = grp.name(o.element);
    if (uses[o.element] > 1) label += "#" + std::to_string(++used[o.element]);
    q.labels.push_back(label);
    q.label_involution.push_back(o.flipped);
    q.label_element.push_back(o.element);
    out.generator_multiset.push_back({label, o.element});
  }
  std::vector<std::tuple<int, int, int>> edges;  // tail, label, head
  for (int l = 0; l < static_cast<int>(eorbits.size()); ++l)
    for (int d : eorbits[l].darts) edges.emplace_back(elt[g.dart_tail(d)], l, elt[g.dart_head(d)]);
  std::sort(edges.begin(), edges.end());
  q.graph = Graph(n);
  for (auto [t, l, h] : edges) {
    q.graph.add_edge(t, h, q.labels[l], !eorbits[l].flipped);
    q.edge_label.push_back(l);
  }
  q.depth = bfs_distances(q.graph, 0);
  return out;
}

GraphAction equivariant_subdivide(const GraphAction& a, int e) {
  const Graph& g = a.graph;
  const int n = a.group->order();
  std::vector<int> image(static_cast<size_t>(n));  // x -> x.(2e)
  std::vector<bool> in_orbit(static_cast<size_t>(g.num_edges()), false);
  for (int x = 0; x < n; ++x) {
    image[x] = a.dart_perm[x][2 * e];
    if (image[x] == 2 * e + 1) throw Error("equivariant_subdivide: an element reverses the edge");
    in_orbit[Graph::dart_edge(image[x])] = true;
  }
  const Edge& base = g.edge(e);
  Graph out(g.num_vertices());
  for (int f = 0; f < g.num_edges(); ++f)
    if (!in_orbit[f]) out.add_edge(g.edge(f).tail, g.edge(f).head, g.edge(f).label, g.edge(f).directed);
  const int first = g.num_vertices();
  for (int x = 0; x < n; ++x) {
    const int m = out.add_vertex();
    out.add_edge(g.dart_tail(image[x]), m, base.label + "/0", base.directed);
    out.add_edge(m, g.dart_head(image[x]), base.label + "/1", base.directed);
  }
  auto vp = a.vertex_perm;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) vp[x].push_back(first + a.group->mul(x, y));
  GraphAction res = GraphAction::from_vertex_map(a.group, std::move(out), std::move(vp));
  res.validate();
  return res;
}

GraphAction equivariant_blow_up(const GraphAction& a, int v) {
  const int n = a.group->order();
  std::vector<int> vs, where(static_cast<size_t>(a.graph.num_vertices()), -1);
  std::vector<std::vector<int>> orders;
  for (int x = 0; x < n; ++x) {
    const int w = a.vertex_perm[x][v];
    if (where[w] >= 0) throw Error("equivariant_blow_up: vertex has a non-trivial stabiliser");
    where[w] = x;
    vs.push_back(w);
    std::vector<int> ord;
    for (int d : a.graph.darts_at(v)) ord.push_back(a.dart_perm[x][d]);
    orders.push_back(std::move(ord));
  }
  BlowUpCore core = blow_up_core(a.graph, vs, orders);
  const int nv = core.graph.num_vertices();
  std::vector<std::vector<int>> vp(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(nv)));
  for (int x = 0; x < n; ++x) {
    for (int u = 0; u < a.graph.num_vertices(); ++u)
      if (core.new_id[u] >= 0) vp[x][core.new_id[u]] = core.new_id[a.vertex_perm[x][u]];
    for (int y = 0; y < n; ++y) {
      const int xy = a.group->mul(x, y);
      for (size_t j = 0; j < core.cycles[y].size(); ++j) vp[x][core.cycles[y][j]] = core.cycles[xy][j];
    }
  }
  GraphAction res = GraphAction::from_vertex_map(a.group, std::move(core.graph), std::move(vp));
  res.validate();
  return res;
}

GraphAction equivariant_add_edges(const GraphAction& a, int u, int w, const std::string& label) {
  const int n = a.group->order();
  bool flipped = false;
  if (u != w)
    for (int x = 0; x < n; ++x)
      if (a.vertex_perm[x][u] == w && a.vertex_perm[x][w] == u) flipped = true;
  Graph out = a.graph;
  std::set<std::pair<int, int>> added;
  for (int x = 0; x < n; ++x) {
    int t = a.vertex_perm[x][u], h = a.vertex_perm[x][w];
    if (flipped && !added.insert({std::min(t, h), std::max(t, h)}).second) continue;
    out.add_edge(t, h, label, !flipped);
  }
  GraphAction res = GraphAction::from_vertex_map(a.group, std::move(out), a.vertex_perm);
  res.validate();
  return res;
}

}  // namespace pcl
