// pcl: command-line front end.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pcl/actions.hpp"
#include "pcl/augment.hpp"
#include "pcl/bundled.hpp"
#include "pcl/corpus.hpp"
#include "pcl/covariance.hpp"
#include "pcl/cyclecut.hpp"
#include "pcl/ends.hpp"
#include "pcl/random.hpp"
#include "pcl/serialize.hpp"

using namespace pcl;

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "@Name" picks a bundled group, anything else is a .grp file.
std::string presentation_text(const std::string& src) {
  if (!src.empty() && src[0] == '@') {
    for (const auto& e : bundled::catalog())
      if (e.name == src.substr(1)) return std::string(e.presentation);
    throw UsageError("unknown bundled group " + src);
  }
  return read_file(src);
}

std::shared_ptr<const GroupModel> load_group(const std::string& src, int max_cosets) {
  return std::make_shared<const GroupModel>(coset_enumerate(parse_presentation(presentation_text(src)), max_cosets));
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

// Options shared by every subcommand that consumes a graph.
struct GraphSource {
  std::string complete, gens, family, graph_file;
  int ball = -1;
  int max_cosets = 100000;

  void attach(CLI::App* app) {
    app->add_option("--complete", complete, "presentation file (or @Name) of a finite group");
    app->add_option("--gens", gens, "generating multiset, e.g. \"k,r\" or \"(1,0),(0,1)\"");
    app->add_option("--ball", ball, "radius of a ball in a bundled family");
    app->add_option("--family", family, "bundled infinite family")->check(CLI::IsMember(families::names()));
    app->add_option("--graph", graph_file, "graph JSON file");
    app->add_option("--max-cosets", max_cosets, "coset enumeration budget");
  }

  CayleyGraph load() const {
    const int given = !complete.empty() + !family.empty() + !graph_file.empty();
    if (given != 1) throw UsageError("give exactly one of --complete, --family, --graph");
    if (!complete.empty()) {
      auto g = load_group(complete, max_cosets);
      const std::string spec = gens.empty() ? join(g->generator_symbols()) : gens;
      return build_cayley(g, resolve_generators(*g, spec));
    }
    if (!family.empty()) {
      if (ball < 0) throw UsageError("--family needs --ball R");
      return build_ball(families::by_name(family), ball);
    }
    return cayley_from_json(Json::parse(read_file(graph_file)));
  }

  static std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ",") + x;
    return s;
  }
};

Embedding plane_embedding(const Graph& g) {
  const auto res = planarity_test(g);
  if (const auto* w = std::get_if<KuratowskiWitness>(&res))
    throw Error("graph is not planar (" + to_string(w->kind) + " subdivision found)");
  return std::get<Embedding>(res);
}

Json ends_json(const EndsReport& r) {
  Json j;
  j["schema"] = kSchema;
  j["class"] = r.end_class == EndsClass::cantor ? Json("cantor") : Json(std::stoi(to_string(r.end_class)));
  j["r"] = r.r;
  j["R"] = r.R;
  j["count"] = r.count;
  j["count_previous"] = r.count_previous;
  j["profile"] = r.profile;
  j["stabilized"] = r.stabilized;
  j["certified"] = r.certified;
  j["source"] = r.source;
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"Planar Cayley graph toolkit"};
  app.require_subcommand(1);
  std::string format = "json";

  // parse
  std::string parse_file;
  auto* parse = app.add_subcommand("parse", "parse a presentation and print its canonical form");
  parse->add_option("file", parse_file, "presentation file (or @Name)")->required();
  parse->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  // enumerate
  std::string enum_file;
  int enum_budget = 100000;
  auto* enumerate = app.add_subcommand("enumerate", "coset-enumerate a finite group");
  enumerate->add_option("file", enum_file, "presentation file (or @Name)")->required();
  enumerate->add_option("--max-cosets", enum_budget);

  // build
  GraphSource build_src;
  bool amalgam = false;
  std::string left = "@A4", left_inv = "k", left_gens = "k,r", right = "@Z4xZ2", right_inv = "(0,1)",
              right_gens = "(1,0),(0,1)";
  auto* build = app.add_subcommand("build", "build a Cayley graph or ball");
  build_src.attach(build);
  build->add_flag("--amalgam", amalgam, "ball of the amalgam of --left and --right along their involutions");
  build->add_option("--left", left, "left factor presentation (file or @Name)")->capture_default_str();
  build->add_option("--left-inv", left_inv, "involution of the left factor to amalgamate")->capture_default_str();
  build->add_option("--left-gens", left_gens, "generators of the left factor")->capture_default_str();
  build->add_option("--right", right, "right factor presentation (file or @Name)")->capture_default_str();
  build->add_option("--right-inv", right_inv, "involution of the right factor to amalgamate")->capture_default_str();
  build->add_option("--right-gens", right_gens, "generators of the right factor")->capture_default_str();
  build->add_option("--format", format)->check(CLI::IsMember({"json", "dot", "svg"}));

  // embed
  GraphSource embed_src;
  bool consistent = false;
  auto* embed = app.add_subcommand("embed", "planar embedding or Kuratowski witness");
  embed_src.attach(embed);
  embed->add_flag("--search-consistent", consistent, "list consistent label-order embeddings");
  embed->add_option("--format", format)->check(CLI::IsMember({"json", "svg"}));

  GraphSource faces_src, cov_src, orient_src, contract_src, augment_src, conn_src, cut_src;
  auto* faces = app.add_subcommand("faces", "face report of the planar embedding");
  faces_src.attach(faces);
  auto* covariant = app.add_subcommand("covariant", "covariance of the consistent (or planar) embedding");
  cov_src.attach(covariant);
  std::string orient_element;
  auto* orient = app.add_subcommand("orient", "orientation class of group elements");
  orient_src.attach(orient);
  orient->add_option("--element", orient_element, "one element (word or tuple)");

  bool contract_random = false;
  std::uint64_t contract_seed = 0;
  auto* contract = app.add_subcommand("contract", "Babai contraction of a free action");
  contract_src.attach(contract);
  contract->add_flag("--random", contract_random, "use a random instance");
  contract->add_option("--seed", contract_seed);

  auto* augment = app.add_subcommand("augment", "ladder augmentation of a planar graph");
  augment_src.attach(augment);
  augment->add_option("--format", format)->check(CLI::IsMember({"json", "dot", "svg"}));
  auto* connectivity = app.add_subcommand("connectivity", "vertex connectivity");
  conn_src.attach(connectivity);

  std::vector<int> cut_faces;
  auto* cutspace = app.add_subcommand("cutspace", "star generation rank, or a cycle separating two faces");
  cut_src.attach(cutspace);
  cutspace->add_option("--faces", cut_faces, "two face indices")->expected(2);

  std::string ends_family, ends_group;
  int ends_r = -1, ends_R = -1;
  auto* ends = app.add_subcommand("ends", "classify the number of ends");
  ends->add_option("--family", ends_family)->check(CLI::IsMember(families::names()));
  ends->add_option("--complete", ends_group, "finite group presentation (or @Name)");
  ends->add_option("-r", ends_r, "inner radius");
  ends->add_option("-R", ends_R, "outer radius");

  auto* corpus_cmd = app.add_subcommand("corpus", "bundled example corpus");
  corpus_cmd->require_subcommand(1);
  std::string corpus_case;
  bool corpus_json = false;
  auto* verify = corpus_cmd->add_subcommand("verify", "check every corpus claim");
  verify->add_option("--case", corpus_case)->check(CLI::IsMember(corpus::case_names()));
  verify->add_flag("--json", corpus_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (*parse) {
    const Presentation p = parse_presentation(presentation_text(parse_file));
    if (format == "text") {
      std::cout << emit_presentation(p) << "\n";
    } else {
      Json j;
      j["schema"] = kSchema;
      j["name"] = p.name;
      j["generators"] = p.generators;
      Json rels = Json::array();
      for (const auto& w : p.relators) rels.push_back(format_word(p.generators, w));
      j["relators"] = std::move(rels);
      Json inv = Json::array();
      for (int g : p.involutions) inv.push_back(p.generators[g]);
      j["involutions"] = std::move(inv);
      j["canonical"] = emit_presentation(p);
      print(j);
    }
  } else if (*enumerate) {
    const auto g = load_group(enum_file, enum_budget);
    Json j;
    j["schema"] = kSchema;
    j["order"] = g->order();
    j["elements"] = g->names();
    Json gm = Json::object();
    for (const auto& [sym, x] : g->generator_map()) gm[sym] = g->name(x);
    j["generators"] = std::move(gm);
    Json table = Json::array();
    for (int a = 0; a < g->order(); ++a) {
      std::vector<int> row;
      for (int b = 0; b < g->order(); ++b) row.push_back(g->mul(a, b));
      table.push_back(row);
    }
    j["mul"] = std::move(table);
    print(j);
  } else if (*build) {
    CayleyGraph cg;
    if (amalgam) {
      if (build_src.ball < 0) throw UsageError("--amalgam needs --ball R");
      auto a = load_group(left, build_src.max_cosets), b = load_group(right, build_src.max_cosets);
      cg = build_amalgam_ball(*a, resolve_generators(*a, left_inv).at(0).element, *b,
                              resolve_generators(*b, right_inv).at(0).element, resolve_generators(*a, left_gens),
                              resolve_generators(*b, right_gens), build_src.ball);
    } else {
      cg = build_src.load();
    }
    if (format == "dot")
      std::cout << to_dot(cg);
    else if (format == "svg")
      std::cout << to_svg(cg.graph, plane_embedding(cg.graph), cg.names);
    else
      print(to_json(cg));
  } else if (*embed) {
    const CayleyGraph cg = embed_src.load();
    if (consistent) {
      Json list = Json::array();
      for (const auto& c : search_consistent_embeddings(cg)) {
        Json order = Json::array();
        for (const auto& k : c.label_order) order.push_back(cg.dart_key_name(k));
        list.push_back({{"label_order", order}, {"spins", c.spins}, {"embedding", to_json(c.embedding)}});
      }
      print(Json{{"schema", kSchema}, {"consistent", list}});
    } else {
      const auto res = planarity_test(cg.graph);
      if (format == "svg") {
        std::cout << to_svg(cg.graph, plane_embedding(cg.graph), cg.names);
      } else if (const auto* w = std::get_if<KuratowskiWitness>(&res)) {
        std::string why;
        Json j{{"schema", kSchema}, {"planar", false}, {"witness", to_json(*w)}};
        j["witness_verified"] = verify_kuratowski(cg.graph, *w, &why);
        print(j);
      } else {
        print(Json{{"schema", kSchema}, {"planar", true}, {"embedding", to_json(std::get<Embedding>(res))}});
      }
    }
  } else if (*faces) {
    const CayleyGraph cg = faces_src.load();
    const Embedding emb = trace_faces(cg.graph, plane_embedding(cg.graph).rotation, cg.frontier);
    const FaceReport r = classify_faces(cg, emb);
    Json fv = Json::object();
    for (auto [len, count] : face_vector(emb)) fv[std::to_string(len)] = count;
    print(Json{{"schema", kSchema},
               {"faces", emb.faces.size()},
               {"finite_faces", r.finite_faces},
               {"frontier_faces", r.frontier_faces},
               {"max_finite_length", r.max_finite_length},
               {"face_vector", fv},
               {"genus", emb.genus}});
  } else if (*covariant) {
    const CayleyGraph cg = cov_src.load();
    const auto found = search_consistent_embeddings(cg);
    const Embedding emb = found.empty() ? plane_embedding(cg.graph) : found.front().embedding;
    const auto v = find_covariance_violation(cg, emb);
    Json j{{"schema", kSchema}, {"embedding", found.empty() ? "planarity test" : "first consistent"}, {"covariant", !v}};
    if (v) j["violation"] = {{"generator", v->generator}, {"face", emb.faces[v->face].darts}};
    print(j);
  } else if (*orient) {
    const CayleyGraph cg = orient_src.load();
    Json table = Json::object();
    if (!orient_element.empty()) {
      const int x = resolve_generators(*cg.group, orient_element).at(0).element;
      table[cg.names[x]] = to_string(orientation_class(cg, x));
    } else {
      const auto t = orientation_table(cg);
      for (int x = 0; x < cg.num_vertices(); ++x) table[cg.names[x]] = to_string(t[x]);
    }
    print(Json{{"schema", kSchema}, {"orientation", table}});
  } else if (*contract) {
    GraphAction action;
    std::string recipe = "left action";
    if (contract_random) {
      std::mt19937_64 rng(contract_seed);
      auto inst = random_babai_instance(rng);
      action = std::move(inst.action);
      recipe = inst.group + ": " + inst.recipe;
    } else {
      action = left_action(contract_src.load());
    }
    const BabaiResult r = babai_contract(action);
    Json gens = Json::array();
    for (const auto& g : r.generator_multiset) gens.push_back(g.label);
    print(Json{{"schema", kSchema},
               {"instance", recipe},
               {"input_vertices", action.graph.num_vertices()},
               {"input_edges", action.graph.num_edges()},
               {"domain", r.domain.vertices},
               {"tree_edges", r.domain.tree_edges},
               {"generators", gens},
               {"quotient", to_json(r.quotient)}});
  } else if (*augment) {
    const CayleyGraph cg = augment_src.load();
    const Embedding emb = plane_embedding(cg.graph);
    const auto la = ladder_augment(cg.graph, emb, cg.complete() ? std::vector<bool>{} : cg.frontier);
    if (format == "dot")
      std::cout << to_dot(la.graph);
    else if (format == "svg")
      std::cout << to_svg(la.graph, la.embedding);
    else
      print(Json{{"schema", kSchema},
                 {"augmented_faces", la.augmented_faces},
                 {"connectivity", vertex_connectivity(la.graph)},
                 {"graph", to_json(la.graph)},
                 {"embedding", to_json(la.embedding)}});
  } else if (*connectivity) {
    const CayleyGraph cg = conn_src.load();
    print(Json{{"schema", kSchema}, {"vertex_connectivity", vertex_connectivity(cg.graph)}});
  } else if (*cutspace) {
    const CayleyGraph cg = cut_src.load();
    if (cut_faces.size() == 2) {
      const Embedding emb = plane_embedding(cg.graph);
      const auto sep = separating_cycle_between_faces(cg.graph, emb, cut_faces[0], cut_faces[1]);
      print(Json{{"schema", kSchema},
                 {"cycle", sep.cycle.support()},
                 {"method", sep.method},
                 {"parity", crossing_parity(cg.graph, emb, sep.cycle, cut_faces[0], cut_faces[1])}});
    } else {
      const auto r = star_generation_check(cg);
      print(Json{{"schema", kSchema}, {"rank", r.rank}, {"expected", r.expected}, {"ok", r.ok}});
    }
  } else if (*ends) {
    if (!ends_group.empty()) {
      print(ends_json(classify_ends(*load_group(ends_group, 100000))));
    } else {
      if (ends_family.empty()) throw UsageError("ends needs --family or --complete");
      auto [r, R] = default_radii(ends_family);
      if (ends_r >= 0) r = ends_r;
      if (ends_R >= 0) R = ends_R;
      print(ends_json(classify_ends(families::by_name(ends_family), r, R)));
    }
  } else if (*verify) {
    std::vector<corpus::CaseReport> reports;
    if (corpus_case.empty())
      reports = corpus::run_all();
    else
      reports.push_back(corpus::run_case(corpus_case));
    if (corpus_json)
      print(corpus::to_json(reports));
    else
      std::cout << corpus::to_text(reports);
    for (const auto& r : reports)
      if (!r.pass()) return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "bad JSON: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
