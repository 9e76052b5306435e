#include "pcl/serialize.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace pcl {

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

Json edges_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges())
    edges.push_back({{"tail", e.tail}, {"head", e.head}, {"label", e.label}, {"directed", e.directed}});
  return edges;
}

}  // namespace

Json to_json(const CayleyGraph& cg) {
  Json j;
  j["schema"] = kSchema;
  Json vs = Json::array();
  for (int v = 0; v < cg.num_vertices(); ++v)
    vs.push_back({{"id", v}, {"name", cg.names[v]}, {"frontier", static_cast<bool>(cg.frontier[v])}});
  j["vertices"] = std::move(vs);
  j["edges"] = edges_json(cg.graph);
  if (cg.radius)
    j["radius"] = *cg.radius;
  else
    j["radius"] = "complete";
  return j;
}

Json to_json(const Graph& g) {
  Json j;
  j["schema"] = kSchema;
  Json vs = Json::array();
  for (int v = 0; v < g.num_vertices(); ++v) vs.push_back({{"id", v}, {"name", std::to_string(v)}, {"frontier", false}});
  j["vertices"] = std::move(vs);
  j["edges"] = edges_json(g);
  j["radius"] = "complete";
  return j;
}

Json to_json(const Embedding& emb) {
  Json j;
  j["schema"] = kSchema;
  Json rot = Json::object();
  for (size_t v = 0; v < emb.rotation.order.size(); ++v) rot[std::to_string(v)] = emb.rotation.order[v];
  j["rotation"] = std::move(rot);
  Json faces = Json::array();
  for (const auto& f : emb.faces) faces.push_back(f.darts);
  j["faces"] = std::move(faces);
  j["genus"] = emb.genus;
  return j;
}

Json to_json(const KuratowskiWitness& w) {
  return Json{{"kind", to_string(w.kind)}, {"branch", w.branch}, {"paths", w.paths}, {"edges", w.edges}};
}

Json to_json(const GraphAction& a) {
  Json j;
  j["schema"] = kSchema;
  j["group_order"] = a.group->order();
  Json vp = Json::object(), dp = Json::object();
  for (int x = 0; x < a.group->order(); ++x) {
    vp[a.group->name(x)] = a.vertex_perm[x];
    dp[a.group->name(x)] = a.dart_perm[x];
  }
  j["vertex_perm"] = std::move(vp);
  j["dart_perm"] = std::move(dp);
  return j;
}

CayleyGraph cayley_from_json(const Json& j) {
  if (j.value("schema", "") != std::string(kSchema)) throw Error("graph JSON: unknown schema");
  CayleyGraph cg;
  const auto& vs = j.at("vertices");
  cg.graph = Graph(static_cast<int>(vs.size()));
  for (size_t i = 0; i < vs.size(); ++i) {
    if (vs[i].at("id").get<size_t>() != i) throw Error("graph JSON: vertex ids must be 0..n-1 in order");
    cg.names.push_back(vs[i].at("name").get<std::string>());
    cg.frontier.push_back(vs[i].at("frontier").get<bool>());
  }
  std::map<std::string, int> label_index;
  for (const auto& e : j.at("edges")) {
    const auto label = e.at("label").get<std::string>();
    const bool directed = e.at("directed").get<bool>();
    auto [it, fresh] = label_index.emplace(label, static_cast<int>(cg.labels.size()));
    if (fresh) {
      cg.labels.push_back(label);
      cg.label_involution.push_back(!directed);
    }
    cg.graph.add_edge(e.at("tail").get<int>(), e.at("head").get<int>(), label, directed);
    cg.edge_label.push_back(it->second);
  }
  if (j.at("radius").is_number()) cg.radius = j.at("radius").get<int>();
  cg.depth = bfs_distances(cg.graph, 0);
  return cg;
}

std::string to_dot(const CayleyGraph& cg) {
  std::ostringstream os;
  os << "digraph cayley {\n";
  for (int v = 0; v < cg.num_vertices(); ++v) {
    os << "  " << v << " [label=\"" << dot_escape(cg.names[v]) << "\"";
    if (cg.frontier[v]) os << ", style=dashed";
    os << "];\n";
  }
  for (const Edge& e : cg.graph.edges()) {
    os << "  " << e.tail << " -> " << e.head << " [label=\"" << dot_escape(e.label) << "\"";
    if (!e.directed) os << ", dir=none";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(const Graph& g) {
  CayleyGraph cg;
  cg.graph = g;
  for (int v = 0; v < g.num_vertices(); ++v) cg.names.push_back(std::to_string(v));
  cg.frontier.assign(static_cast<size_t>(g.num_vertices()), false);
  return to_dot(cg);
}

std::string to_svg(const Graph& g, const Embedding& emb, const std::vector<std::string>& names) {
  const int n = g.num_vertices();
  std::vector<double> x(static_cast<size_t>(n), 0.0), y(static_cast<size_t>(n), 0.0);
  std::vector<bool> pinned(static_cast<size_t>(n), false);
  int outer = 0;
  for (int f = 1; f < static_cast<int>(emb.faces.size()); ++f)
    if (emb.faces[f].darts.size() > emb.faces[outer].darts.size()) outer = f;
  std::vector<int> ring;
  if (!emb.faces.empty())
    for (int v : dart_walk_vertices(g, emb.faces[outer].darts))
      if (!pinned[v]) {
        pinned[v] = true;
        ring.push_back(v);
      }
  for (size_t i = 0; i < ring.size(); ++i) {
    const double a = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(ring.size());
    x[ring[i]] = std::cos(a);
    y[ring[i]] = std::sin(a);
  }
  const auto adj = g.simple_adjacency();
  for (int it = 0; it < 500; ++it)
    for (int v = 0; v < n; ++v) {
      if (pinned[v] || adj[v].empty()) continue;
      double sx = 0, sy = 0;
      for (int w : adj[v]) {
        sx += x[w];
        sy += y[w];
      }
      x[v] = sx / static_cast<double>(adj[v].size());
      y[v] = sy / static_cast<double>(adj[v].size());
    }

  const double size = 480, pad = 20;
  auto px = [&](int v) { return pad + (x[v] + 1) / 2 * size; };
  auto py = [&](int v) { return pad + (1 - (y[v] + 1) / 2) * size; };
  std::ostringstream os;
  os.precision(2);
  os << std::fixed;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size + 2 * pad << "\" height=\"" << size + 2 * pad
     << "\">\n";
  for (const Edge& e : g.edges())
    os << "  <line x1=\"" << px(e.tail) << "\" y1=\"" << py(e.tail) << "\" x2=\"" << px(e.head) << "\" y2=\""
       << py(e.head) << "\" stroke=\"black\"><title>" << xml_escape(e.label) << "</title></line>\n";
  for (int v = 0; v < n; ++v) {
    os << "  <circle cx=\"" << px(v) << "\" cy=\"" << py(v) << "\" r=\"4\" fill=\"white\" stroke=\"black\"><title>"
       << xml_escape(v < static_cast<int>(names.size()) ? names[v] : std::to_string(v)) << "</title></circle>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace pcl
