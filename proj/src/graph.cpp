#include "pcl/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace pcl {

Graph::Graph(int num_vertices) : out_(static_cast<size_t>(num_vertices)) {}

int Graph::add_vertex() {
  out_.emplace_back();
  return num_vertices() - 1;
}

int Graph::add_edge(int tail, int head, std::string label, bool directed) {
  if (tail < 0 || head < 0 || tail >= num_vertices() || head >= num_vertices())
    throw Error("add_edge: endpoint out of range");
  const int e = num_edges();
  edges_.push_back({tail, head, std::move(label), directed});
  out_[tail].push_back(2 * e);
  out_[head].push_back(2 * e + 1);
  return e;
}

int Graph::dart_tail(int d) const {
  const Edge& e = edges_.at(dart_edge(d));
  return (d & 1) ? e.head : e.tail;
}

int Graph::dart_head(int d) const {
  const Edge& e = edges_.at(dart_edge(d));
  return (d & 1) ? e.tail : e.head;
}

bool Graph::has_loops() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.tail == e.head; });
}

bool Graph::is_simple() const {
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : edges_) {
    if (e.tail == e.head) return false;
    if (!seen.insert(std::minmax(e.tail, e.head)).second) return false;
  }
  return true;
}

bool Graph::adjacent(int u, int v) const {
  for (int d : out_.at(u))
    if (dart_head(d) == v) return true;
  return false;
}

std::vector<std::vector<int>> Graph::simple_adjacency() const {
  std::vector<std::vector<int>> adj(out_.size());
  for (int v = 0; v < num_vertices(); ++v) {
    for (int d : out_[v]) {
      const int w = dart_head(d);
      if (w != v) adj[v].push_back(w);
    }
    std::sort(adj[v].begin(), adj[v].end());
    adj[v].erase(std::unique(adj[v].begin(), adj[v].end()), adj[v].end());
  }
  return adj;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(static_cast<size_t>(g.num_vertices()), -1);
  if (g.num_vertices() == 0) return dist;
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int d : g.darts_at(v)) {
      const int w = g.dart_head(d);
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.num_vertices() == 0) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

int connected_components(const Graph& g, const std::vector<bool>& keep, std::vector<int>& component) {
  component.assign(static_cast<size_t>(g.num_vertices()), -1);
  int count = 0;
  std::vector<int> stack;
  for (int s = 0; s < g.num_vertices(); ++s) {
    if (!keep[s] || component[s] >= 0) continue;
    component[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int d : g.darts_at(v)) {
        const int w = g.dart_head(d);
        if (keep[w] && component[w] < 0) {
          component[w] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  return count;
}

std::vector<int> dart_walk_vertices(const Graph& g, const std::vector<int>& darts) {
  std::vector<int> out;
  out.reserve(darts.size());
  for (int d : darts) out.push_back(g.dart_tail(d));
  return out;
}

std::vector<int> canonical_rotation(std::vector<int> cyc) {
  if (cyc.empty()) return cyc;
  std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
  return cyc;
}

}  // namespace pcl
