// One PASS/FAIL line per acceptance criterion. Exit status is non-zero when any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pcl/actions.hpp"
#include "pcl/augment.hpp"
#include "pcl/bundled.hpp"
#include "pcl/corpus.hpp"
#include "pcl/covariance.hpp"
#include "pcl/cyclecut.hpp"
#include "pcl/ends.hpp"
#include "pcl/random.hpp"

using namespace pcl;

namespace {

// Bookkeeping is re-checked on every embedding the suite traces.
struct Bookkeeping {
  long checked = 0;
  long failed = 0;
  std::string first;
  void operator()(const Graph& g, const Embedding& emb) {
    ++checked;
    const std::string why = oracle::bookkeeping_failure(g, emb);
    if (!why.empty() && failed++ == 0) first = why;
  }
} bookkeeping;

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::string fv_text(const std::map<int, int>& fv) {
  std::string s = "{";
  for (auto [len, n] : fv) s += (s.size() > 1 ? ", " : "") + std::to_string(len) + ":" + std::to_string(n);
  return s + "}";
}

Outcome a4_case() {
  Outcome o;
  const auto g = coset_enumerate(parse_presentation(bundled::kA4), 100);
  o.require(g.order() == 12, "order " + std::to_string(g.order()));
  const auto cg = fixture::cayley(bundled::kA4, "k,r");
  o.require(cg.num_vertices() == 12 && cg.num_edges() == 18, "V,E = " + std::to_string(cg.num_vertices()) + "," +
                                                                 std::to_string(cg.num_edges()));
  o.require(oracle::cayley_edge_count(*cg.group, cg.label_element) == 18, "edge oracle disagrees");
  const auto res = planarity_test(cg.graph);
  o.require(is_planar(res), "not planar");
  if (is_planar(res)) bookkeeping(cg.graph, std::get<Embedding>(res));
  const int kappa = vertex_connectivity(cg.graph);
  o.require(kappa == 3 && oracle::brute_force_connectivity(cg.graph) == 3, "connectivity " + std::to_string(kappa));
  const auto w = std::get<WhitneyEmbedding>(whitney_unique(cg.graph));
  bookkeeping(cg.graph, w.embedding);
  const auto fv = oracle::face_lengths(cg.graph, w.embedding.rotation.order);
  o.require(w.verified && fv == std::map<int, int>{{3, 4}, {6, 4}}, "face vector " + fv_text(fv));
  int preserving = 0;
  for (auto c : orientation_table(cg)) preserving += c == Orientation::preserving;
  o.require(preserving == 12, std::to_string(preserving) + " preserving");
  if (o.pass) o.detail = "order 12, V=12 E=18, kappa=3, faces " + fv_text(fv) + ", 12/12 preserving";
  return o;
}

Outcome prism_case() {
  Outcome o;
  const auto cg = fixture::cayley(bundled::kZ4xZ2, "(1,0),(0,1)");
  const auto emb = fixture::plane(cg.graph);
  bookkeeping(cg.graph, emb);
  o.require(cg.num_vertices() == 8 && cg.num_edges() == 12 && emb.faces.size() == 6, "V,E,F wrong");
  o.require(vertex_connectivity(cg.graph) == 3 && oracle::brute_force_connectivity(cg.graph) == 3, "not 3-connected");
  const auto& g = *cg.group;
  const auto t = orientation_table(cg);
  o.require(t[*g.find("b")] == Orientation::reversing, "(0,1) not reversing");
  o.require(t[*g.find("a^2")] == Orientation::preserving, "(2,0) not preserving");
  int pairs = 0;
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y)
      pairs += (t[g.mul(x, y)] == Orientation::preserving) ==
               ((t[x] == Orientation::preserving) == (t[y] == Orientation::preserving));
  o.require(pairs == 64, std::to_string(pairs) + "/64 pairs multiplicative");
  if (o.pass) o.detail = "V=8 E=12 F=6, kappa=3, (0,1) reversing, (2,0) preserving, 64/64 pairs";
  return o;
}

Outcome k44_case() {
  Outcome o;
  const auto cg = fixture::cayley(bundled::kZ4xZ2, "(1,0),(1,1)");
  const auto res = planarity_test(cg.graph);
  o.require(!is_planar(res), "reported planar");
  if (const auto* w = std::get_if<KuratowskiWitness>(&res)) {
    std::string why;
    o.require(verify_kuratowski(cg.graph, *w, &why), "witness rejected: " + why);
    o.require(w->kind == KuratowskiWitness::Kind::K33, "witness is " + to_string(w->kind));
    if (o.pass) o.detail = "K3,3 subdivision on " + std::to_string(w->edges.size()) + " edges verified";
  }
  return o;
}

Outcome amalgam_case() {
  Outcome o;
  const auto a = bundled::a4();
  const auto b = bundled::z4xz2();
  const auto ball = build_amalgam_ball(*a, *a->find("k"), *b, *b->find("b"), resolve_generators(*a, "k,r"),
                                       resolve_generators(*b, "(1,0),(0,1)"), 3);
  const auto res = planarity_test(ball.graph);
  o.require(is_planar(res), "ball not planar");
  if (is_planar(res)) bookkeeping(ball.graph, std::get<Embedding>(res));
  int lo = 1 << 30, hi = 0;
  for (int v = 0; v < ball.num_vertices(); ++v)
    if (!ball.frontier[v]) {
      lo = std::min(lo, ball.graph.degree(v));
      hi = std::max(hi, ball.graph.degree(v));
    }
  o.require(lo == 5 && hi == 5, "interior degree " + std::to_string(lo) + ".." + std::to_string(hi));
  const auto rep = corpus::run_case("amalgam-a4-z4xz2");
  o.require(rep.pass(), "corpus case amalgam-a4-z4xz2 fails");
  if (o.pass) o.detail = std::to_string(ball.num_vertices()) + "-vertex ball planar, interior degree 5, corpus case passes";
  return o;
}

Outcome ends_case() {
  Outcome o;
  o.require(classify_ends(*bundled::a4()).end_class == EndsClass::zero, "A4 not 0");
  const std::vector<std::pair<std::string, EndsClass>> want = {
      {"z2", EndsClass::one},     {"z", EndsClass::two},           {"z-cross-z3", EndsClass::two},
      {"f2", EndsClass::cantor}, {"amalgam-a4-z4xz2", EndsClass::cantor}};
  std::string seen = "A4:0";
  for (const auto& [name, cls] : want) {
    const auto [r, R] = default_radii(name);
    const auto rep = classify_ends(families::by_name(name), r, R);
    o.require(rep.end_class == cls && rep.stabilized,
              name + " gave " + to_string(rep.end_class) + (rep.stabilized ? "" : " (not stabilized)"));
    seen += " " + name + ":" + to_string(rep.end_class);
  }
  if (o.pass) o.detail = seen;
  return o;
}

std::vector<std::pair<int, int>> quotient_pairs(const CayleyGraph& q) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : q.graph.edges()) out.push_back({std::min(e.tail, e.head), std::max(e.tail, e.head)});
  std::sort(out.begin(), out.end());
  return out;
}

Outcome babai_suite() {
  Outcome o;
  std::mt19937_64 rng(suite_seed());
  int planar_inputs = 0, failures = 0;
  const int trials = 120;
  for (int i = 0; i < trials; ++i) {
    const auto inst = random_babai_instance(rng, 12, 60);
    const auto& a = inst.action;
    try {
      const bool shape = a.group->order() <= 12 && a.graph.num_vertices() <= 60 && is_connected(a.graph) && is_free(a);
      const auto r = babai_contract(a);
      const auto& q = r.quotient;
      bool ok = shape && q.num_vertices() == a.group->order() && q.complete() && is_connected(q.graph);
      ok = ok && oracle::left_multiplication_preserves(q);
      ok = ok && quotient_pairs(q) ==
                     oracle::contracted_edges(a.graph, a.vertex_perm, a.dart_perm, r.domain.vertices, r.domain.tree_edges);
      const auto act = left_action(q);
      act.validate();
      ok = ok && is_free(act);
      const auto in = planarity_test(a.graph);
      if (is_planar(in)) {
        ++planar_inputs;
        bookkeeping(a.graph, std::get<Embedding>(in));
        const auto out = planarity_test(q.graph);
        ok = ok && is_planar(out);
        if (is_planar(out)) bookkeeping(q.graph, std::get<Embedding>(out));
      }
      if (!ok && failures++ == 0) o.require(false, "instance " + std::to_string(i) + " (" + inst.recipe + ")");
    } catch (const std::exception& e) {
      if (failures++ == 0) o.require(false, "instance " + std::to_string(i) + ": " + e.what());
    }
  }
  if (o.pass)
    o.detail = std::to_string(trials) + " instances, " + std::to_string(planar_inputs) + " planar, 0 failures";
  else
    o.detail += ", " + std::to_string(failures) + " failures";
  return o;
}

Outcome ladder_suite() {
  Outcome o;
  std::mt19937_64 rng(suite_seed() + 1);
  const int trials = 30;
  int failures = 0;
  for (int i = 0; i < trials; ++i) {
    const auto pg = random_plane_graph(rng, 30, 24);
    bookkeeping(pg.graph, pg.embedding);
    const auto out = ladder_augment(pg.graph, pg.embedding);
    bookkeeping(out.graph, out.embedding);
    long boundary = 0;
    for (const auto& f : pg.embedding.faces) boundary += static_cast<long>(f.darts.size());
    bool ok = pg.graph.num_vertices() <= 30 && vertex_connectivity(pg.graph) >= 2;
    ok = ok && out.graph.num_vertices() == pg.graph.num_vertices() + boundary;
    ok = ok && out.graph.num_edges() == pg.graph.num_edges() + 2 * boundary;
    ok = ok && is_planar(planarity_test(out.graph)) && out.embedding.genus == 0;
    ok = ok && vertex_connectivity(out.graph) >= 3;
    if (!ok && failures++ == 0) o.require(false, "graph " + std::to_string(i));
  }
  if (o.pass) o.detail = std::to_string(trials) + " graphs, 0 failures";
  return o;
}

Outcome separation_suite() {
  Outcome o;
  std::mt19937_64 rng(suite_seed() + 2);
  int trials = 0, violations = 0, applicable = 0, queries = 0, disagreements = 0, sep_calls = 0, sep_bad = 0;
  std::vector<bool> mask;
  auto as_mask = [&](const EdgeVector& v) {
    mask.assign(static_cast<size_t>(v.size()), false);
    for (int e : v.support()) mask[e] = true;
    return mask;
  };
  while (trials < 500) {
    const auto pg = random_plane_graph(rng, 24, 18);
    const auto& g = pg.graph;
    const auto& emb = pg.embedding;
    bookkeeping(g, emb);
    const int nf = static_cast<int>(emb.faces.size());
    if (nf < 3) continue;
    std::uniform_int_distribution<int> pick(0, nf - 1);
    for (int round = 0; round < 5 && trials < 500; ++round) {
      const int f1 = pick(rng);
      int f2 = pick(rng);
      while (f2 == f1) f2 = pick(rng);
      // a random connected patch of faces; its facial cycles are the inputs
      std::vector<int> patch{pick(rng)};
      std::uniform_int_distribution<int> size(1, std::min(nf, 5));
      const int want = size(rng);
      for (int guard = 0; static_cast<int>(patch.size()) < want && guard < 50; ++guard) {
        const auto& darts = emb.faces[patch[rng() % patch.size()]].darts;
        const int nb = emb.face_of_dart[darts[rng() % darts.size()] ^ 1];
        if (std::find(patch.begin(), patch.end(), nb) == patch.end()) patch.push_back(nb);
      }
      std::vector<EdgeVector> cycles;
      for (int f : patch) {
        const auto c = face_boundary(g, emb, f);
        if (is_single_cycle(g, c)) cycles.push_back(c);
      }
      if (cycles.empty()) continue;
      const auto rep = sep_sum_check(g, emb, f1, f2, cycles);
      ++trials;
      violations += rep.violation;
      applicable += !rep.precondition_failed && rep.sum_is_cycle;
      for (const auto& c : cycles) {
        ++queries;
        disagreements += crossing_parity(g, emb, c, f1, f2) != oracle::flood_fill_separates(g, emb, as_mask(c), f1, f2);
      }
      const auto sc = separating_cycle_between_faces(g, emb, f1, f2);
      ++sep_calls;
      ++queries;
      const bool flood = oracle::flood_fill_separates(g, emb, as_mask(sc.cycle), f1, f2);
      const int parity = crossing_parity(g, emb, sc.cycle, f1, f2);
      disagreements += parity != static_cast<int>(flood);
      sep_bad += parity != 1 || !is_single_cycle(g, sc.cycle);
    }
  }
  o.require(violations == 0, std::to_string(violations) + " parity violations");
  o.require(disagreements == 0, std::to_string(disagreements) + " oracle disagreements");
  o.require(sep_bad == 0, std::to_string(sep_bad) + " separating cycles without parity 1");
  if (o.pass)
    o.detail = std::to_string(trials) + " trials (" + std::to_string(applicable) + " with a cycle sum), 0 violations; " +
               std::to_string(queries) + " parity queries agree; " + std::to_string(sep_calls) + " separating cycles";
  return o;
}

Outcome cutspace_suite() {
  Outcome o;
  int groups = 0;
  for (const auto& entry : bundled::catalog()) {
    const auto g = bundled::group(entry.name);
    const auto cg = build_cayley(g, resolve_generators(*g, entry.generators));
    const auto r = star_generation_check(cg);
    o.require(r.ok && r.rank == cg.num_vertices() - 1,
              std::string(entry.name) + " rank " + std::to_string(r.rank) + " of " + std::to_string(cg.num_vertices() - 1));
    ++groups;
  }
  if (o.pass) o.detail = std::to_string(groups) + " catalog Cayley graphs, rank |V|-1 on each";
  return o;
}

std::string run_cli(const std::string& cmd) {
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) return {};
  std::string out;
  std::array<char, 4096> buf{};
  while (size_t n = fread(buf.data(), 1, buf.size(), pipe.get())) out.append(buf.data(), n);
  return out;
}

Outcome determinism(const std::string& cli) {
  Outcome o;
  const std::string cmd = "\"" + cli + "\" corpus verify --json";
  const std::string a = run_cli(cmd);
  const std::string b = run_cli(cmd);
  o.require(!a.empty(), "no output from " + cmd);
  o.require(a == b, "outputs differ");
  o.require(a == corpus::to_json(corpus::run_all()).dump(2) + "\n", "CLI output differs from the library report");
  if (o.pass) o.detail = std::to_string(a.size()) + " bytes, identical";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : PCL_CLI_PATH;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"A4 truncated tetrahedron", a4_case},
      {"Z4xZ2 prism", prism_case},
      {"Z4xZ2 K4,4", k44_case},
      {"amalgam ball", amalgam_case},
      {"ends classes", ends_case},
      {"Babai contraction suite", babai_suite},
      {"ladder augmentation suite", ladder_suite},
      {"separation suite", separation_suite},
      {"cut-space suite", cutspace_suite},
      {"embedding bookkeeping", [] {
         Outcome o;
         o.require(bookkeeping.checked > 0 && bookkeeping.failed == 0,
                   std::to_string(bookkeeping.failed) + " failures, first: " + bookkeeping.first);
         if (o.pass) o.detail = std::to_string(bookkeeping.checked) + " embeddings checked";
         return o;
       }},
      {"determinism", [&] { return determinism(cli); }},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("error: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.pass;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << ". " << criteria[i].first << ": " << o.detail << " ["
         << secs << "s]";
    std::cout << line.str() << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
