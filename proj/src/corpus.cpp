#include "pcl/corpus.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "pcl/actions.hpp"
#include "pcl/augment.hpp"
#include "pcl/bundled.hpp"
#include "pcl/covariance.hpp"
#include "pcl/cyclecut.hpp"
#include "pcl/ends.hpp"

namespace pcl::corpus {

bool CaseReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

namespace {

struct Recorder {
  CaseReport& rep;
  void operator()(std::string claim, bool pass, std::string observed) {
    rep.checks.push_back({std::move(claim), pass, std::move(observed)});
  }
  // Runs `body`, turning an exception into a failed check.
  void guarded(const std::string& claim, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      (*this)(claim, false, std::string("error: ") + e.what());
    }
  }
};

std::string face_vector_text(const Embedding& emb) {
  std::string s = "{";
  for (auto [len, count] : face_vector(emb)) {
    if (s.size() > 1) s += ", ";
    s += std::to_string(len) + ":" + std::to_string(count);
  }
  return s + "}";
}

int element_of(const GroupModel& g, const std::string& spec) { return resolve_generators(g, spec).at(0).element; }

CayleyGraph complete_graph(std::string_view presentation, const std::string& gens) {
  auto g = std::make_shared<const GroupModel>(coset_enumerate(parse_presentation(presentation), 1000));
  return build_cayley(g, resolve_generators(*g, gens));
}

bool is_homomorphism(const GroupModel& g, const std::vector<Orientation>& t) {
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      if ((t[g.mul(x, y)] == Orientation::preserving) != ((t[x] == Orientation::preserving) == (t[y] == Orientation::preserving)))
        return false;
  return true;
}

int count_preserving(const std::vector<Orientation>& t) {
  return static_cast<int>(std::count(t.begin(), t.end(), Orientation::preserving));
}

void a4_truncated_tetrahedron(Recorder& rec) {
  const GroupModel g = coset_enumerate(parse_presentation(bundled::kA4), 1000);
  rec("coset enumeration gives order 12", g.order() == 12, std::to_string(g.order()));
  const CayleyGraph cg = complete_graph(bundled::kA4, "k,r");
  rec("Cay(A4,{k,r}) has 12 vertices and 18 edges", cg.num_vertices() == 12 && cg.num_edges() == 18,
      std::to_string(cg.num_vertices()) + " vertices, " + std::to_string(cg.num_edges()) + " edges");
  rec("Cayley graph is planar", is_planar(planarity_test(cg.graph)), "");
  const int kappa = vertex_connectivity(cg.graph);
  rec("vertex connectivity is 3", kappa == 3, std::to_string(kappa));
  rec.guarded("embedding is unique with face vector {3:4, 6:4}", [&] {
    const auto w = std::get<WhitneyEmbedding>(whitney_unique(cg.graph));
    const std::string fv = face_vector_text(w.embedding);
    rec("embedding is unique with face vector {3:4, 6:4}", w.verified && fv == "{3:4, 6:4}",
        fv + ", " + std::to_string(w.automorphisms_checked) + " automorphisms checked");
  });
  rec.guarded("all 12 elements preserve orientation", [&] {
    const auto t = orientation_table(cg);
    rec("all 12 elements preserve orientation", count_preserving(t) == 12,
        std::to_string(count_preserving(t)) + " preserving");
    rec("k preserves orientation", orientation_class(cg, element_of(*cg.group, "k")) == Orientation::preserving, "");
  });
  rec("left action is free", is_free(left_action(cg)), "");
  const auto found = search_consistent_embeddings(cg);
  rec("a consistent embedding exists and is covariant", !found.empty() && is_covariant(cg, found.front().embedding),
      std::to_string(found.size()) + " consistent embeddings");
}

void a4_odd_generators(Recorder& rec) {
  const auto a = coset_enumerate(parse_presentation(bundled::kA4), 1000);
  const auto b = coset_enumerate(parse_presentation(bundled::kA4OddOrder), 1000);
  rec("<r,g | r^3, g^3, (rg)^2> has order 12", b.order() == 12, std::to_string(b.order()));
  rec("isomorphic to <k,r | k^2, r^3, (kr)^3>", find_isomorphism(b, a).has_value(), "");
  const CayleyGraph cg = complete_graph(bundled::kA4OddOrder, "r,g");
  rec("Cay(A4,{r,g}) is planar", is_planar(planarity_test(cg.graph)), face_vector_text(std::get<Embedding>(planarity_test(cg.graph))));
  const int kappa = vertex_connectivity(cg.graph);
  rec("Cay(A4,{r,g}) is 3-connected", kappa >= 3, std::to_string(kappa));
  rec.guarded("every element of odd order preserves orientation", [&] {
    const auto t = orientation_table(cg);
    int odd = 0, odd_preserving = 0;
    for (int x = 0; x < b.order(); ++x)
      if (b.element_order(x) % 2 == 1) {
        ++odd;
        odd_preserving += t[x] == Orientation::preserving;
      }
    rec("every element of odd order preserves orientation", odd == odd_preserving,
        std::to_string(odd_preserving) + " of " + std::to_string(odd));
    rec("every element preserves orientation", count_preserving(t) == 12, std::to_string(count_preserving(t)) + " preserving");
  });
}

void z4xz2_prism(Recorder& rec) {
  const CayleyGraph cg = complete_graph(bundled::kZ4xZ2, "(1,0),(0,1)");
  const auto res = planarity_test(cg.graph);
  const int faces = is_planar(res) ? static_cast<int>(std::get<Embedding>(res).faces.size()) : -1;
  rec("prism has V=8, E=12, F=6", cg.num_vertices() == 8 && cg.num_edges() == 12 && faces == 6,
      std::to_string(cg.num_vertices()) + "," + std::to_string(cg.num_edges()) + "," + std::to_string(faces));
  const int kappa = vertex_connectivity(cg.graph);
  rec("prism is 3-connected", kappa == 3, std::to_string(kappa));
  rec.guarded("(0,1) reverses orientation", [&] {
    const GroupModel& g = *cg.group;
    const auto t = orientation_table(cg);
    rec("(0,1) reverses orientation", t[element_of(g, "(0,1)")] == Orientation::reversing, to_string(t[element_of(g, "(0,1)")]));
    rec("(2,0) preserves orientation", t[element_of(g, "(2,0)")] == Orientation::preserving, to_string(t[element_of(g, "(2,0)")]));
    rec("class(xy) = class(x) class(y) on all 64 pairs", is_homomorphism(g, t), "");
  });
  const auto found = search_consistent_embeddings(cg);
  rec("a consistent embedding exists and is covariant", !found.empty() && is_covariant(cg, found.front().embedding),
      std::to_string(found.size()) + " consistent embeddings");
}

void z4xz2_k44(Recorder& rec) {
  const CayleyGraph cg = complete_graph(bundled::kZ4xZ2, "(1,0),(1,1)");
  rec("Cay(Z4xZ2,{(1,0),(1,1)}) has 8 vertices and 16 edges", cg.num_vertices() == 8 && cg.num_edges() == 16,
      std::to_string(cg.num_edges()) + " edges");
  const auto res = planarity_test(cg.graph);
  rec("graph is non-planar", !is_planar(res), "");
  if (const auto* w = std::get_if<KuratowskiWitness>(&res)) {
    std::string why;
    const bool ok = verify_kuratowski(cg.graph, *w, &why);
    rec("witness is a verified K3,3 subdivision", ok && w->kind == KuratowskiWitness::Kind::K33,
        to_string(w->kind) + (why.empty() ? "" : ": " + why));
  }
  rec("no consistent embedding exists", search_consistent_embeddings(cg).empty(), "");
}

void amalgam(Recorder& rec) {
  const auto spec = families::by_name("amalgam-a4-z4xz2");
  const CayleyGraph ball = build_ball(spec, 3);
  rec("ball of radius 3 is planar", is_planar(planarity_test(ball.graph)), std::to_string(ball.num_vertices()) + " vertices");
  int lo = 1 << 30, hi = 0;
  for (int v = 0; v < ball.num_vertices(); ++v)
    if (!ball.frontier[v]) {
      lo = std::min(lo, ball.graph.degree(v));
      hi = std::max(hi, ball.graph.degree(v));
    }
  rec("interior degree is exactly 5", lo == 5 && hi == 5, std::to_string(lo) + ".." + std::to_string(hi));
  rec.guarded("k preserves in the A4 graph and (0,1) reverses in the prism", [&] {
    const CayleyGraph tt = complete_graph(bundled::kA4, "k,r");
    const CayleyGraph prism = complete_graph(bundled::kZ4xZ2, "(1,0),(0,1)");
    const auto all = orientation_table(tt);
    const bool a = count_preserving(all) == tt.num_vertices();
    const bool b = orientation_class(prism, element_of(*prism.group, "(0,1)")) == Orientation::reversing;
    rec("k preserves in the A4 graph and (0,1) reverses in the prism", a && b,
        std::string("A4 all preserving: ") + (a ? "yes" : "no") + ", (0,1) reversing: " + (b ? "yes" : "no"));
  });
  bool rejected = false;
  try {
    families::amalgam(bundled::a4(), element_of(*bundled::a4(), "r"), {}, bundled::z4xz2(), element_of(*bundled::z4xz2(), "(0,1)"), {});
  } catch (const NonInvolutionAmalgam&) {
    rejected = true;
  }
  rec("amalgamating along an element of order 3 is rejected", rejected, "");
}

void z_cross_z3(Recorder& rec) {
  const CayleyGraph ball = build_ball(families::z_cross_cyclic(3), 2);
  int lo = 1 << 30, hi = 0;
  for (int v = 0; v < ball.num_vertices(); ++v)
    if (!ball.frontier[v]) {
      lo = std::min(lo, ball.graph.degree(v));
      hi = std::max(hi, ball.graph.degree(v));
    }
  rec("interior vertices have two Z darts and two Z3 darts", lo == 4 && hi == 4, std::to_string(lo) + ".." + std::to_string(hi));
  const CayleyGraph big = build_ball(families::z_cross_cyclic(3), 6);
  rec("ball of radius 6 is planar", is_planar(planarity_test(big.graph)), std::to_string(big.num_vertices()) + " vertices");
  const auto e = classify_ends(families::z_cross_cyclic(3), 2, 6);
  rec("two ends", e.end_class == EndsClass::two && e.stabilized, to_string(e.end_class));
}

void ends_case(Recorder& rec) {
  const auto a4 = classify_ends(*bundled::a4());
  rec("A4: 0 ends", a4.end_class == EndsClass::zero, to_string(a4.end_class));
  const std::vector<std::pair<std::string, EndsClass>> expected = {
      {"z", EndsClass::two},   {"z-steps-1-2", EndsClass::two}, {"z2", EndsClass::one},
      {"z-cross-z3", EndsClass::two}, {"f2", EndsClass::cantor}, {"amalgam-a4-z4xz2", EndsClass::cantor}};
  for (const auto& [name, cls] : expected) {
    const auto [r, R] = default_radii(name);
    const auto rep = classify_ends(families::by_name(name), r, R);
    rec(name + ": ends class " + to_string(cls) + ", stabilized at r=" + std::to_string(r) + ", R=" + std::to_string(R),
        rep.end_class == cls && rep.stabilized,
        to_string(rep.end_class) + ", counts " + std::to_string(rep.count_previous) + "/" + std::to_string(rep.count));
  }
}

void cutspace(Recorder& rec) {
  for (const auto& entry : bundled::catalog()) {
    const auto g = bundled::group(entry.name);
    const auto cg = build_cayley(g, resolve_generators(*g, entry.generators));
    const auto r = star_generation_check(cg);
    rec(std::string(entry.name) + ": star translates span the cut space", r.ok,
        "rank " + std::to_string(r.rank) + " of " + std::to_string(r.expected));
  }
}

const std::map<std::string, void (*)(Recorder&)>& registry() {
  static const std::map<std::string, void (*)(Recorder&)> cases = {
      {"a4-truncated-tetrahedron", a4_truncated_tetrahedron},
      {"a4-odd-generators", a4_odd_generators},
      {"amalgam-a4-z4xz2", amalgam},
      {"cutspace", cutspace},
      {"ends", ends_case},
      {"z-cross-z3", z_cross_z3},
      {"z4xz2-k44", z4xz2_k44},
      {"z4xz2-prism", z4xz2_prism},
  };
  return cases;
}

}  // namespace

std::vector<std::string> case_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

CaseReport run_case(const std::string& name) {
  auto it = registry().find(name);
  if (it == registry().end()) throw Error("unknown corpus case " + name);
  CaseReport rep;
  rep.name = name;
  Recorder rec{rep};
  try {
    it->second(rec);
  } catch (const std::exception& e) {
    rec("case runs to completion", false, std::string("error: ") + e.what());
  }
  return rep;
}

std::vector<CaseReport> run_all() {
  std::vector<CaseReport> out;
  for (const auto& name : case_names()) out.push_back(run_case(name));
  return out;
}

Json to_json(const std::vector<CaseReport>& reports) {
  Json j;
  j["schema"] = kSchema;
  Json cases = Json::array();
  bool all = true;
  for (const auto& r : reports) {
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back({{"claim", c.claim}, {"pass", c.pass}, {"observed", c.observed}});
    cases.push_back({{"name", r.name}, {"pass", r.pass()}, {"checks", std::move(checks)}});
    all = all && r.pass();
  }
  j["cases"] = std::move(cases);
  j["pass"] = all;
  return j;
}

std::string to_text(const std::vector<CaseReport>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << (r.pass() ? "PASS " : "FAIL ") << r.name << "\n";
    for (const auto& c : r.checks) {
      os << "  [" << (c.pass ? "ok" : "FAILED") << "] " << c.claim;
      if (!c.observed.empty()) os << " (" << c.observed << ")";
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace pcl::corpus
