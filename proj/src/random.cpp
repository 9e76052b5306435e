#include "pcl/random.hpp"

#include <algorithm>
#include <cstdlib>

#include "pcl/bundled.hpp"
#include "pcl/cayley.hpp"

namespace pcl {

std::uint64_t suite_seed() {
  const char* s = std::getenv("PCL_SEED");
  if (!s || !*s) return 0;
  return std::strtoull(s, nullptr, 10);
}

namespace {

int pick(std::mt19937_64& rng, int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

struct Builder {
  std::vector<std::pair<int, int>> edges;
  RotationSystem rot;

  Graph graph() const {
    Graph g(static_cast<int>(rot.order.size()));
    for (auto [t, h] : edges) g.add_edge(t, h);
    return g;
  }

  static void insert_after(std::vector<int>& order, int after, int d) {
    order.insert(std::find(order.begin(), order.end(), after) + 1, d);
  }

  int add_edge(int t, int h) {
    edges.emplace_back(t, h);
    return static_cast<int>(edges.size()) - 1;
  }
};

}  // namespace

PlaneGraph random_plane_graph(std::mt19937_64& rng, int max_vertices, int steps) {
  Builder b;
  const int k = 3 + pick(rng, std::max(1, std::min(4, max_vertices - 2)));
  const int n0 = std::min(k, std::max(3, max_vertices));
  b.rot.order.resize(static_cast<size_t>(n0));
  for (int i = 0; i < n0; ++i) b.add_edge(i, (i + 1) % n0);
  for (int i = 0; i < n0; ++i) b.rot.order[i] = {2 * i, 2 * ((i + n0 - 1) % n0) + 1};

  for (int step = 0; step < steps; ++step) {
    const Graph g = b.graph();
    const Embedding emb = trace_faces(g, b.rot);
    const int f = pick(rng, static_cast<int>(emb.faces.size()));
    const auto& walk = emb.faces[f].darts;
    const int len = static_cast<int>(walk.size());
    const int nv = g.num_vertices();
    const int op = pick(rng, 3);
    if (op == 0) {
      // chord between two corners that are not adjacent
      std::vector<std::pair<int, int>> options;
      for (int i = 0; i < len; ++i)
        for (int j = i + 2; j < len; ++j)
          if (!(i == 0 && j == len - 1) && !g.adjacent(g.dart_tail(walk[i]), g.dart_tail(walk[j]))) options.emplace_back(i, j);
      if (options.empty()) continue;
      auto [i, j] = options[pick(rng, static_cast<int>(options.size()))];
      const int e = b.add_edge(g.dart_tail(walk[i]), g.dart_tail(walk[j]));
      Builder::insert_after(b.rot.order[g.dart_tail(walk[i])], Graph::reverse(walk[(i + len - 1) % len]), 2 * e);
      Builder::insert_after(b.rot.order[g.dart_tail(walk[j])], Graph::reverse(walk[(j + len - 1) % len]), 2 * e + 1);
    } else if (op == 1) {
      if (nv >= max_vertices) continue;
      const int e = Graph::dart_edge(walk[pick(rng, len)]);
      const auto [t, h] = b.edges[e];
      const int m = nv;
      b.rot.order.emplace_back();
      b.edges[e] = {t, m};
      const int f2 = b.add_edge(m, h);
      std::replace(b.rot.order[h].begin(), b.rot.order[h].end(), 2 * e + 1, 2 * f2 + 1);
      b.rot.order[m] = {2 * e + 1, 2 * f2};
    } else {
      if (nv >= max_vertices) continue;
      std::vector<int> corners;
      for (int i = 0; i < len; ++i)
        if (pick(rng, 2) == 0) corners.push_back(i);
      if (corners.size() < 2) corners = {0, len / 2};
      const int m = nv;
      b.rot.order.emplace_back();
      std::vector<int> spokes;
      for (int i : corners) {
        const int e = b.add_edge(g.dart_tail(walk[i]), m);
        Builder::insert_after(b.rot.order[g.dart_tail(walk[i])], Graph::reverse(walk[(i + len - 1) % len]), 2 * e);
        spokes.push_back(2 * e + 1);
      }
      // the orientation of the spokes at m is fixed by re-tracing
      b.rot.order[m] = spokes;
      if (trace_faces(b.graph(), b.rot).genus != 0) {
        std::reverse(spokes.begin(), spokes.end());
        b.rot.order[m] = spokes;
      }
    }
  }
  PlaneGraph out;
  out.graph = b.graph();
  out.embedding = trace_faces(out.graph, b.rot);
  if (out.embedding.genus != 0) throw Error("random_plane_graph: construction left the plane");
  return out;
}

BabaiInstance random_babai_instance(std::mt19937_64& rng, int max_order, int max_vertices) {
  std::vector<const bundled::CatalogEntry*> choices;
  for (const auto& e : bundled::catalog())
    if (bundled::group(e.name)->order() <= max_order) choices.push_back(&e);
  const auto& entry = *choices[pick(rng, static_cast<int>(choices.size()))];
  auto grp = bundled::group(entry.name);
  BabaiInstance out;
  out.group = std::string(entry.name);
  out.action = left_action(build_cayley(grp, resolve_generators(*grp, entry.generators)));
  out.recipe = "cayley";

  const int ops = 1 + pick(rng, 4);
  for (int i = 0; i < ops; ++i) {
    GraphAction& a = out.action;
    const int nv = a.graph.num_vertices();
    const int n = grp->order();
    const int op = pick(rng, 3);
    if (op == 0 && a.graph.num_edges() > 0) {
      if (nv + n > max_vertices) continue;
      const int e = pick(rng, a.graph.num_edges());
      bool flipped = false;
      for (int x = 0; x < n; ++x) flipped = flipped || a.dart_perm[x][2 * e] == 2 * e + 1;
      if (flipped) continue;
      out.action = equivariant_subdivide(a, e);
      out.recipe += ";subdivide " + std::to_string(e);
    } else if (op == 1) {
      const int v = pick(rng, nv);
      if (a.graph.degree(v) == 0 || nv + n * (a.graph.degree(v) - 1) > max_vertices) continue;
      out.action = equivariant_blow_up(a, v);
      out.recipe += ";blow-up " + std::to_string(v);
    } else {
      const int u = pick(rng, nv), w = pick(rng, nv);
      out.action = equivariant_add_edges(a, u, w, "x" + std::to_string(i));
      out.recipe += ";add " + std::to_string(u) + "-" + std::to_string(w);
    }
  }
  return out;
}

}  // namespace pcl
