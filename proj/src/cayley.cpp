#include "pcl/cayley.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

#include "pcl/bundled.hpp"

namespace pcl {

NonGeneratingSet::NonGeneratingSet(int reached, int order)
    : Error("generators reach a subgroup of order " + std::to_string(reached) + " out of " + std::to_string(order)),
      reached_(reached) {}

DartKey CayleyGraph::dart_key(int d) const {
  const int label = edge_label.at(Graph::dart_edge(d));
  if (label_involution[label]) return {label, 1};
  return {label, (d & 1) ? -1 : 1};
}

std::string CayleyGraph::dart_key_name(DartKey k) const {
  return k.sign > 0 ? labels.at(k.label) : labels.at(k.label) + "^-1";
}

int CayleyGraph::label_degree() const { return static_cast<int>(all_dart_keys().size()); }

std::vector<DartKey> CayleyGraph::all_dart_keys() const {
  std::vector<DartKey> out;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
    out.push_back({i, 1});
    if (!label_involution[i]) out.push_back({i, -1});
  }
  return out;
}

std::optional<int> CayleyGraph::vertex_named(std::string_view name) const {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<int>(it - names.begin());
}

DartIndex::DartIndex(const CayleyGraph& cg)
    : width_(2 * static_cast<int>(cg.labels.size())),
      table_(static_cast<size_t>(cg.num_vertices()) * static_cast<size_t>(width_), -1) {
  for (int d = 0; d < cg.graph.num_darts(); ++d) {
    int& slot = table_[static_cast<size_t>(cg.graph.dart_tail(d)) * width_ + cg.dart_key(d).index()];
    if (slot >= 0) throw Error("DartIndex: two darts share a vertex and a label key");
    slot = d;
  }
}

int left_translate_dart(const CayleyGraph& cg, const DartIndex& index, int x, int d) {
  if (!cg.group) throw Error("left translation needs a complete Cayley graph");
  const int v = cg.group->mul(x, cg.graph.dart_tail(d));
  return index.at(v, cg.dart_key(d));
}

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

std::vector<std::string> split_top_level(std::string_view s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::optional<std::vector<int>> parse_tuple(const std::string& item) {
  if (item.size() < 2 || item.front() != '(' || item.back() != ')') return std::nullopt;
  std::vector<int> out;
  std::string body = item.substr(1, item.size() - 2);
  if (body.find_first_of("()") != std::string::npos) return std::nullopt;
  size_t start = 0;
  for (;;) {
    const size_t comma = body.find(',', start);
    const std::string part = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    int value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty()) return std::nullopt;
    out.push_back(value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

int power(const GroupModel& g, int x, int k) {
  int base = k < 0 ? g.inv(x) : x;
  int out = 0;
  for (int i = 0; i < std::abs(k); ++i) out = g.mul(out, base);
  return out;
}

}  // namespace

std::vector<Generator> resolve_generators(const GroupModel& g, std::string_view spec) {
  std::vector<Generator> raw;
  const auto symbols = g.generator_symbols();
  for (const std::string& piece : split_top_level(spec)) {
    std::string item = strip(piece);
    if (item.empty()) throw Error("empty generator in '" + std::string(spec) + "'");
    int mult = 1;
    if (const size_t colon = item.rfind(':'); colon != std::string::npos) {
      const std::string m = item.substr(colon + 1);
      auto [ptr, ec] = std::from_chars(m.data(), m.data() + m.size(), mult);
      if (ec != std::errc() || ptr != m.data() + m.size() || mult < 1)
        throw Error("bad multiplicity in generator '" + item + "'");
      item = item.substr(0, colon);
    }
    int element = 0;
    if (auto tuple = parse_tuple(item)) {
      if (tuple->size() != symbols.size())
        throw Error("tuple " + item + " needs " + std::to_string(symbols.size()) + " entries");
      for (size_t i = 0; i < tuple->size(); ++i)
        element = g.mul(element, power(g, g.generator_map()[i].second, (*tuple)[i]));
    } else {
      element = g.evaluate(parse_word(symbols, item));
    }
    for (int i = 0; i < mult; ++i) raw.push_back({item, element});
  }
  std::map<std::string, int> count, seen;
  for (const auto& gen : raw) ++count[gen.label];
  for (auto& gen : raw)
    if (count[gen.label] > 1) gen.label += "#" + std::to_string(++seen[gen.label]);
  return raw;
}

CayleyGraph build_cayley(const GroupModel& g, const std::vector<Generator>& gens) {
  return build_cayley(std::make_shared<const GroupModel>(g), gens);
}

CayleyGraph build_cayley(std::shared_ptr<const GroupModel> g, const std::vector<Generator>& gens) {
  if (!g) throw Error("build_cayley: null group");
  std::vector<int> elements;
  for (const auto& s : gens) {
    if (s.element < 0 || s.element >= g->order()) throw Error("build_cayley: generator outside the group");
    elements.push_back(s.element);
  }
  const int reached = static_cast<int>(g->closure(elements).size());
  if (reached != g->order()) throw NonGeneratingSet(reached, g->order());

  CayleyGraph cg;
  cg.graph = Graph(g->order());
  cg.names = g->names();
  cg.frontier.assign(static_cast<size_t>(g->order()), false);
  for (const auto& s : gens) {
    cg.labels.push_back(s.label);
    cg.label_involution.push_back(g->element_order(s.element) == 2);
    cg.label_element.push_back(s.element);
  }
  for (int v = 0; v < g->order(); ++v) {
    for (int i = 0; i < static_cast<int>(gens.size()); ++i) {
      const int w = g->mul(v, gens[i].element);
      if (cg.label_involution[i]) {
        if (v < w) {
          cg.graph.add_edge(v, w, gens[i].label, false);
          cg.edge_label.push_back(i);
        }
      } else {
        cg.graph.add_edge(v, w, gens[i].label, true);
        cg.edge_label.push_back(i);
      }
    }
  }
  cg.depth = bfs_distances(cg.graph, 0);
  cg.group = std::move(g);
  return cg;
}

// ---------------------------------------------------------------------------

namespace {

using Key = std::vector<int>;

class NormalForm {
 public:
  virtual ~NormalForm() = default;
  virtual Key identity() const = 0;
  virtual Key step(const Key& x, int label, int sign) const = 0;

  std::vector<std::string> labels;
  std::vector<bool> involution;
  std::vector<bool> trivial;
};

class FreeGroupForm final : public NormalForm {
 public:
  explicit FreeGroupForm(const FreeGroupFamily& f) {
    if (f.generators.empty()) throw UnsupportedFamily("free group needs at least one generator");
    labels = f.generators;
    involution.assign(labels.size(), false);
    trivial.assign(labels.size(), false);
  }
  Key identity() const override { return {}; }
  Key step(const Key& x, int label, int sign) const override {
    Key out = x;
    const int code = (label + 1) * sign;
    if (!out.empty() && out.back() == -code)
      out.pop_back();
    else
      out.push_back(code);
    return out;
  }
};

class AbelianForm final : public NormalForm {
 public:
  explicit AbelianForm(const AbelianFamily& f) : moduli_(f.moduli) {
    if (moduli_.empty()) throw UnsupportedFamily("abelian family needs at least one coordinate");
    for (int m : moduli_)
      if (m < 0) throw UnsupportedFamily("abelian family: negative modulus");
    for (const auto& g : f.generators) {
      if (g.vector.size() != moduli_.size()) throw UnsupportedFamily("abelian family: generator dimension mismatch");
      labels.push_back(g.label);
      vectors_.push_back(normalize(g.vector));
      const bool zero = vectors_.back() == Key(moduli_.size(), 0);
      Key twice = vectors_.back();
      for (auto& c : twice) c *= 2;
      trivial.push_back(zero);
      involution.push_back(!zero && normalize(twice) == Key(moduli_.size(), 0));
    }
    if (labels.empty()) throw UnsupportedFamily("abelian family needs generators");
  }
  Key identity() const override { return Key(moduli_.size(), 0); }
  Key step(const Key& x, int label, int sign) const override {
    Key out = x;
    for (size_t i = 0; i < out.size(); ++i) out[i] += sign * vectors_[label][i];
    return normalize(out);
  }

 private:
  Key normalize(Key v) const {
    for (size_t i = 0; i < v.size(); ++i)
      if (moduli_[i] > 0) v[i] = ((v[i] % moduli_[i]) + moduli_[i]) % moduli_[i];
    return v;
  }
  std::vector<int> moduli_;
  std::vector<Key> vectors_;
};

// Elements are t1 t2 ... tn c: t_j nontrivial left-coset representatives of
// the amalgamated subgroup C in alternating factors, c in C. Keys store
// [c, f1, t1, f2, t2, ...].
class AmalgamForm final : public NormalForm {
 public:
  explicit AmalgamForm(const AmalgamFamily& f) {
    if (f.factors.empty()) throw UnsupportedFamily("amalgam needs at least one factor");
    const bool amalgamated = f.factors.front().amalgamated >= 0;
    for (size_t i = 0; i < f.factors.size(); ++i) {
      const auto& fac = f.factors[i];
      if (!fac.group) throw UnsupportedFamily("amalgam factor without a group");
      if ((fac.amalgamated >= 0) != amalgamated)
        throw UnsupportedFamily("all factors must agree on the amalgamated subgroup order");
      if (amalgamated && fac.group->element_order(fac.amalgamated) != 2)
        throw NonInvolutionAmalgam("amalgamation element " + fac.group->name(fac.amalgamated) +
                                   " is not an involution");
      Data d;
      d.group = fac.group;
      d.b = fac.amalgamated;
      for (int x = 0; x < fac.group->order(); ++x) {
        if (d.b < 0) {
          d.rep.push_back(x);
          d.cpart.push_back(0);
        } else {
          const int xb = fac.group->mul(x, d.b);
          d.rep.push_back(std::min(x, xb));
          d.cpart.push_back(x == std::min(x, xb) ? 0 : 1);
        }
      }
      factors_.push_back(std::move(d));
    }
    int merged = -1;
    for (size_t i = 0; i < f.factors.size(); ++i) {
      for (const auto& g : f.factors[i].generators) {
        const auto& grp = *f.factors[i].group;
        if (g.element < 0 || g.element >= grp.order()) throw UnsupportedFamily("amalgam generator outside its factor");
        if (amalgamated && g.element == f.factors[i].amalgamated) {
          if (merged < 0) {
            merged = static_cast<int>(labels.size());
            add_label(f.amalgam_label, -1, g.element, true, false);
          }
          continue;
        }
        const bool inv = grp.element_order(g.element) == 2;
        add_label(g.label, static_cast<int>(i), g.element, inv, g.element == 0);
      }
    }
    if (labels.empty()) throw UnsupportedFamily("amalgam needs generators");
  }

  Key identity() const override { return {0}; }

  Key step(const Key& x, int label, int sign) const override {
    Key out = x;
    const int f = label_factor_[label];
    if (f < 0) {
      out[0] ^= 1;
      return out;
    }
    const Data& d = factors_[f];
    const GroupModel& g = *d.group;
    const int s = sign > 0 ? label_element_[label] : g.inv(label_element_[label]);
    const int y = g.mul(out[0] ? d.b : 0, s);
    const size_t n = (out.size() - 1) / 2;
    if (n > 0 && out[out.size() - 2] == f) {
      const int z = g.mul(out.back(), y);
      out[0] = d.cpart[z];
      if (d.rep[z] == 0) {
        out.resize(out.size() - 2);
      } else {
        out.back() = d.rep[z];
      }
    } else {
      out[0] = d.cpart[y];
      if (d.rep[y] != 0) {
        out.push_back(f);
        out.push_back(d.rep[y]);
      }
    }
    return out;
  }

 private:
  struct Data {
    std::shared_ptr<const GroupModel> group;
    int b = -1;
    std::vector<int> rep;
    std::vector<int> cpart;
  };

  void add_label(std::string label, int factor, int element, bool inv, bool loop) {
    while (std::find(labels.begin(), labels.end(), label) != labels.end()) label += "'";
    labels.push_back(std::move(label));
    label_factor_.push_back(factor);
    label_element_.push_back(element);
    involution.push_back(inv);
    trivial.push_back(loop);
  }

  std::vector<Data> factors_;
  std::vector<int> label_factor_;
  std::vector<int> label_element_;
};

std::unique_ptr<NormalForm> make_form(const InfiniteFamilySpec& spec) {
  return std::visit(
      [](const auto& f) -> std::unique_ptr<NormalForm> {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, FreeGroupFamily>)
          return std::make_unique<FreeGroupForm>(f);
        else if constexpr (std::is_same_v<T, AbelianFamily>)
          return std::make_unique<AbelianForm>(f);
        else
          return std::make_unique<AmalgamForm>(f);
      },
      spec);
}

}  // namespace

std::string family_tag(const InfiniteFamilySpec& spec) {
  if (std::holds_alternative<FreeGroupFamily>(spec)) return "free group";
  if (const auto* a = std::get_if<AbelianFamily>(&spec)) {
    const auto infinite = std::count(a->moduli.begin(), a->moduli.end(), 0);
    return infinite == 1 ? "direct product finite-cyclic x Z" : "free abelian x finite";
  }
  const auto& am = std::get<AmalgamFamily>(spec);
  return !am.factors.empty() && am.factors.front().amalgamated >= 0 ? "amalgam over involution"
                                                                      : "free product of finite groups";
}

CayleyGraph build_ball(const InfiniteFamilySpec& spec, int radius, int max_vertices) {
  if (radius < 0) throw Error("build_ball: radius must be non-negative");
  const auto form = make_form(spec);
  const int nl = static_cast<int>(form->labels.size());

  std::map<Key, int> index;
  std::vector<Key> keys{form->identity()};
  std::vector<Word> words{{}};
  std::vector<int> depth{0};
  index.emplace(keys[0], 0);
  for (size_t i = 0; i < keys.size(); ++i) {
    if (depth[i] == radius) continue;
    for (int l = 0; l < nl; ++l) {
      if (form->trivial[l]) continue;
      for (int sign : {1, -1}) {
        if (sign < 0 && form->involution[l]) continue;
        Key next = form->step(keys[i], l, sign);
        if (index.count(next)) continue;
        if (static_cast<int>(keys.size()) >= max_vertices)
          throw BudgetExceeded("build_ball: more than " + std::to_string(max_vertices) + " vertices");
        index.emplace(next, static_cast<int>(keys.size()));
        keys.push_back(std::move(next));
        Word w = words[i];
        w.push_back({l, sign});
        words.push_back(std::move(w));
        depth.push_back(depth[i] + 1);
      }
    }
  }

  CayleyGraph cg;
  cg.graph = Graph(static_cast<int>(keys.size()));
  cg.radius = radius;
  cg.labels = form->labels;
  cg.label_involution = form->involution;
  cg.depth = depth;
  for (size_t i = 0; i < keys.size(); ++i) {
    cg.names.push_back(format_word(form->labels, words[i]));
    cg.frontier.push_back(depth[i] == radius);
  }
  for (int v = 0; v < static_cast<int>(keys.size()); ++v) {
    for (int l = 0; l < nl; ++l) {
      auto it = index.find(form->step(keys[v], l, 1));
      if (it == index.end()) continue;
      const int w = it->second;
      if (form->involution[l]) {
        if (v < w) {
          cg.graph.add_edge(v, w, form->labels[l], false);
          cg.edge_label.push_back(l);
        }
      } else {
        cg.graph.add_edge(v, w, form->labels[l], true);
        cg.edge_label.push_back(l);
      }
    }
  }
  return cg;
}

CayleyGraph build_amalgam_ball(const GroupModel& a, int a_inv, const GroupModel& b, int b_inv,
                               const std::vector<Generator>& gens_a, const std::vector<Generator>& gens_b,
                               int radius) {
  auto pa = std::make_shared<const GroupModel>(a);
  auto pb = std::make_shared<const GroupModel>(b);
  return build_ball(families::amalgam(pa, a_inv, gens_a, pb, b_inv, gens_b), radius);
}

CayleyGraph restrict_ball(const CayleyGraph& ball, int r) {
  if (ball.complete()) throw Error("restrict_ball: input is a complete graph");
  if (r < 0 || r > *ball.radius) throw Error("restrict_ball: radius out of range");
  CayleyGraph out;
  out.radius = r;
  out.labels = ball.labels;
  out.label_involution = ball.label_involution;
  int n = 0;
  while (n < ball.num_vertices() && ball.depth[n] <= r) ++n;
  out.graph = Graph(n);
  for (int v = 0; v < n; ++v) {
    out.names.push_back(ball.names[v]);
    out.depth.push_back(ball.depth[v]);
    out.frontier.push_back(ball.depth[v] == r);
  }
  for (int e = 0; e < ball.num_edges(); ++e) {
    const Edge& ed = ball.graph.edge(e);
    if (ed.tail < n && ed.head < n) {
      out.graph.add_edge(ed.tail, ed.head, ed.label, ed.directed);
      out.edge_label.push_back(ball.edge_label[e]);
    }
  }
  return out;
}

namespace families {

InfiniteFamilySpec integers(const std::vector<int>& steps) {
  AbelianFamily f{{0}, {}};
  const std::string names = "tuvwxyz";
  for (size_t i = 0; i < steps.size(); ++i)
    f.generators.push_back({i < names.size() ? std::string(1, names[i]) : "t" + std::to_string(i), {steps[i]}});
  return f;
}

InfiniteFamilySpec z_squared() { return AbelianFamily{{0, 0}, {{"x", {1, 0}}, {"y", {0, 1}}}}; }

InfiniteFamilySpec z_cross_cyclic(int n) {
  if (n < 1) throw UnsupportedFamily("z-cross-zN needs N >= 1");
  return AbelianFamily{{0, n}, {{"t", {1, 0}}, {"c", {0, 1}}}};
}

InfiniteFamilySpec free_group(int rank) {
  if (rank < 1) throw UnsupportedFamily("free group rank must be positive");
  FreeGroupFamily f;
  for (int i = 0; i < rank; ++i)
    f.generators.push_back(rank <= 26 ? std::string(1, static_cast<char>('a' + i)) : "x" + std::to_string(i + 1));
  return f;
}

InfiniteFamilySpec free_product(std::vector<AmalgamFamily::Factor> factors) {
  for (auto& f : factors) f.amalgamated = -1;
  return AmalgamFamily{std::move(factors), "b"};
}

InfiniteFamilySpec amalgam(std::shared_ptr<const GroupModel> a, int a_inv, std::vector<Generator> gens_a,
                           std::shared_ptr<const GroupModel> b, int b_inv, std::vector<Generator> gens_b) {
  for (const auto& [g, x, gens] : {std::tie(a, a_inv, gens_a), std::tie(b, b_inv, gens_b)}) {
    if (!g) throw Error("amalgam: null factor");
    if (x < 0 || x >= g->order() || g->element_order(x) != 2)
      throw NonInvolutionAmalgam("amalgamation element must be an involution in both factors");
    std::vector<int> elements;
    for (const auto& s : gens) elements.push_back(s.element);
    const auto cl = g->closure(elements);
    if (!std::binary_search(cl.begin(), cl.end(), x))
      throw Error("amalgam: involution " + g->name(x) + " is not generated by the factor's generators");
  }
  AmalgamFamily f;
  f.factors.push_back({std::move(a), a_inv, std::move(gens_a)});
  f.factors.push_back({std::move(b), b_inv, std::move(gens_b)});
  return f;
}

InfiniteFamilySpec by_name(std::string_view name) {
  if (name == "z") return integers({1});
  if (name == "z-steps-1-2") return integers({1, 2});
  if (name == "z2") return z_squared();
  if (name.starts_with("z-cross-z")) {
    int n = 0;
    const auto digits = name.substr(9);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && n >= 1) return z_cross_cyclic(n);
  }
  if (name.size() >= 2 && name[0] == 'f') {
    int n = 0;
    const auto digits = name.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && n >= 1) return free_group(n);
  }
  if (name == "amalgam-a4-z4xz2") {
    auto a = bundled::a4();
    auto b = bundled::z4xz2();
    return amalgam(a, *a->find("k"), resolve_generators(*a, "k,r"), b, *b->find("b"),
                   resolve_generators(*b, "(1,0),(0,1)"));
  }
  throw UnsupportedFamily("unsupported family '" + std::string(name) + "'");
}

std::vector<std::string> names() { return {"z", "z-steps-1-2", "z2", "z-cross-z3", "f2", "amalgam-a4-z4xz2"}; }

}  // namespace families

}  // namespace pcl
