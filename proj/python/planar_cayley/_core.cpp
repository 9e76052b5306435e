#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pcl/augment.hpp"
#include "pcl/bundled.hpp"
#include "pcl/corpus.hpp"
#include "pcl/covariance.hpp"
#include "pcl/cyclecut.hpp"
#include "pcl/ends.hpp"
#include "pcl/serialize.hpp"

namespace py = pybind11;
using namespace pcl;

namespace {

// "@A4" names a bundled catalog group, anything else is presentation text.
std::shared_ptr<const GroupModel> group_of(const std::string& text) {
  if (!text.empty() && text[0] == '@') return bundled::group(text.substr(1));
  return bundled::enumerate(text);
}

CayleyGraph cayley(const std::string& text, const std::string& gens) {
  auto g = group_of(text);
  return build_cayley(g, resolve_generators(*g, gens));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Cayley graphs, planar embeddings and ends of small groups";

  py::register_exception<Error>(m, "PclError", PyExc_ValueError);

  m.def("group_order", [](const std::string& text) { return group_of(text)->order(); }, py::arg("presentation"));
  m.def("element_names", [](const std::string& text) { return group_of(text)->names(); }, py::arg("presentation"));
  m.def("catalog", [] {
    std::vector<std::string> out;
    for (const auto& e : bundled::catalog()) out.emplace_back(e.name);
    return out;
  });

  m.def("cayley_json", [](const std::string& text, const std::string& gens) { return to_json(cayley(text, gens)).dump(); },
        py::arg("presentation"), py::arg("gens"));
  m.def("ball_json", [](const std::string& family, int radius) { return to_json(build_ball(families::by_name(family), radius)).dump(); },
        py::arg("family"), py::arg("radius"));

  m.def(
      "planarity_json",
      [](const std::string& text, const std::string& gens) {
        const auto cg = cayley(text, gens);
        const auto res = planarity_test(cg.graph);
        Json j;
        j["planar"] = is_planar(res);
        if (const auto* emb = std::get_if<Embedding>(&res))
          j["embedding"] = to_json(*emb);
        else
          j["witness"] = to_json(std::get<KuratowskiWitness>(res));
        return j.dump();
      },
      py::arg("presentation"), py::arg("gens"));

  m.def("vertex_connectivity", [](const std::string& text, const std::string& gens) { return vertex_connectivity(cayley(text, gens).graph); },
        py::arg("presentation"), py::arg("gens"));

  m.def(
      "orientation_table",
      [](const std::string& text, const std::string& gens) {
        const auto cg = cayley(text, gens);
        std::vector<std::pair<std::string, std::string>> out;
        const auto t = orientation_table(cg);
        for (size_t x = 0; x < t.size(); ++x) out.emplace_back(cg.names[x], to_string(t[x]));
        return out;
      },
      py::arg("presentation"), py::arg("gens"));

  m.def(
      "cut_space_rank",
      [](const std::string& text, const std::string& gens) {
        const auto r = star_generation_check(cayley(text, gens));
        return std::make_pair(r.rank, r.expected);
      },
      py::arg("presentation"), py::arg("gens"));

  m.def(
      "classify_ends",
      [](const std::string& family, int r, int R) {
        const auto rep = classify_ends(families::by_name(family), r, R);
        return py::dict(py::arg("end_class") = to_string(rep.end_class), py::arg("count") = rep.count,
                        py::arg("count_previous") = rep.count_previous, py::arg("stabilized") = rep.stabilized);
      },
      py::arg("family"), py::arg("r"), py::arg("R"));
  m.def("default_radii", [](const std::string& family) { return default_radii(family); }, py::arg("family"));

  m.def(
      "corpus_json",
      [](const std::string& name) {
        std::vector<corpus::CaseReport> reps;
        if (name.empty())
          reps = corpus::run_all();
        else
          reps.push_back(corpus::run_case(name));
        return corpus::to_json(reps).dump();
      },
      py::arg("case") = "");
}
