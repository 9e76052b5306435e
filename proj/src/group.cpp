#include "pcl/group.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace pcl {

GroupModel::GroupModel(std::vector<std::string> names, std::vector<std::vector<int>> mul,
                       std::vector<std::pair<std::string, int>> generator_map)
    : names_(std::move(names)), mul_(std::move(mul)), generator_map_(std::move(generator_map)) {
  const int n = order();
  if (n == 0) throw Error("GroupModel: empty group");
  if (static_cast<int>(mul_.size()) != n) throw Error("GroupModel: table size mismatch");
  for (const auto& row : mul_) {
    if (static_cast<int>(row.size()) != n) throw Error("GroupModel: table size mismatch");
    for (int x : row)
      if (x < 0 || x >= n) throw Error("GroupModel: table entry out of range");
  }
  inv_.assign(static_cast<size_t>(n), -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mul_[a][b] == 0) {
        inv_[a] = b;
        break;
      }
  for (const auto& [sym, el] : generator_map_)
    if (el < 0 || el >= n) throw Error("GroupModel: generator '" + sym + "' maps outside the group");
  validate();
}

std::optional<int> GroupModel::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<int>(it - names_.begin());
}

int GroupModel::element_order(int a) const {
  int k = 1;
  for (int x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

std::vector<std::string> GroupModel::generator_symbols() const {
  std::vector<std::string> out;
  for (const auto& [sym, el] : generator_map_) out.push_back(sym);
  return out;
}

int GroupModel::evaluate(const Word& w) const {
  int x = 0;
  for (const Letter& l : w) {
    if (l.generator < 0 || l.generator >= static_cast<int>(generator_map_.size()))
      throw Error("evaluate: letter outside the generator map");
    const int g = generator_map_[l.generator].second;
    x = mul(x, l.sign > 0 ? g : inv(g));
  }
  return x;
}

std::vector<int> GroupModel::closure(const std::vector<int>& elements) const {
  std::vector<bool> seen(static_cast<size_t>(order()), false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int s : elements) {
      const int y = mul(x, s);
      if (!seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
    }
  }
  std::vector<int> out;
  for (int x = 0; x < order(); ++x)
    if (seen[x]) out.push_back(x);
  return out;
}

void GroupModel::validate() const {
  const int n = order();
  for (int a = 0; a < n; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a) throw Error("GroupModel: element 0 is not the identity");
    if (inv_[a] < 0 || mul(a, inv_[a]) != 0 || mul(inv_[a], a) != 0)
      throw Error("GroupModel: element " + names_[a] + " has no inverse");
  }
  // Latin-square rows and columns
  for (int a = 0; a < n; ++a) {
    std::vector<bool> row(static_cast<size_t>(n)), col(static_cast<size_t>(n));
    for (int b = 0; b < n; ++b) {
      if (row[mul(a, b)] || col[mul(b, a)]) throw Error("GroupModel: table is not a Latin square");
      row[mul(a, b)] = col[mul(b, a)] = true;
    }
  }
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw Error("GroupModel: multiplication is not associative");
  } else {
    // deterministic sample of triples
    uint64_t s = 0x9e3779b97f4a7c15ULL;
    for (int i = 0; i < 200000; ++i) {
      s ^= s << 13;
      s ^= s >> 7;
      s ^= s << 17;
      const int a = static_cast<int>(s % n), b = static_cast<int>((s >> 20) % n), c = static_cast<int>((s >> 40) % n);
      if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw Error("GroupModel: multiplication is not associative");
    }
  }
}

GroupModel GroupModel::cyclic(int n, const std::string& generator) {
  if (n < 1) throw Error("cyclic: order must be positive");
  std::vector<std::string> names;
  std::vector<std::vector<int>> mul(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i) {
    names.push_back(i == 0 ? "e" : i == 1 ? generator : generator + "^" + std::to_string(i));
    for (int j = 0; j < n; ++j) mul[i][j] = (i + j) % n;
  }
  std::vector<std::pair<std::string, int>> gm{{generator, n > 1 ? 1 : 0}};
  return GroupModel(std::move(names), std::move(mul), std::move(gm));
}

namespace {

class CosetTable {
 public:
  CosetTable(int columns, int limit) : cols_(columns), limit_(limit) { new_coset(); }

  static int inv_col(int x) { return x ^ 1; }

  int get(int c, int x) const { return table_[static_cast<size_t>(c) * cols_ + x]; }
  void set(int c, int x, int v) { table_[static_cast<size_t>(c) * cols_ + x] = v; }
  int size() const { return static_cast<int>(parent_.size()); }
  bool live(int c) const { return parent_[c] == c; }
  int columns() const { return cols_; }

  void define(int c, int x) {
    const int n = new_coset();
    set(c, x, n);
    set(n, inv_col(x), c);
  }

  void scan_and_fill(int c, const std::vector<int>& w) {
    int f = c, b = c;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    for (;;) {
      while (i <= j && get(f, w[i]) >= 0) f = get(f, w[i++]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && get(b, inv_col(w[j])) >= 0) b = get(b, inv_col(w[j--]));
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        set(f, w[i], b);
        set(b, inv_col(w[i]), f);
        return;
      }
      define(f, w[i]);
    }
  }

 private:
  int new_coset() {
    if (size() >= limit_)
      throw CosetBudgetExhausted("coset enumeration exceeded its table of " + std::to_string(limit_) + " cosets");
    const int n = size();
    parent_.push_back(n);
    table_.insert(table_.end(), static_cast<size_t>(cols_), -1);
    return n;
  }

  int rep(int k) {
    int r = k;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[k] != r) {
      const int next = parent_[k];
      parent_[k] = r;
      k = next;
    }
    return r;
  }

  void merge(int k, int l, std::vector<int>& queue) {
    const int a = rep(k), b = rep(l);
    if (a == b) return;
    const int lo = std::min(a, b), hi = std::max(a, b);
    parent_[hi] = lo;
    queue.push_back(hi);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (size_t i = 0; i < queue.size(); ++i) {
      const int g = queue[i];
      for (int x = 0; x < cols_; ++x) {
        const int d = get(g, x);
        if (d < 0) continue;
        set(d, inv_col(x), -1);
        const int mu = rep(g), nu = rep(d);
        if (get(mu, x) >= 0) {
          merge(nu, get(mu, x), queue);
        } else if (get(nu, inv_col(x)) >= 0) {
          merge(mu, get(nu, inv_col(x)), queue);
        } else {
          set(mu, x, nu);
          set(nu, inv_col(x), mu);
        }
      }
    }
  }

  int cols_;
  int limit_;
  std::vector<int> table_;
  std::vector<int> parent_;
};

}  // namespace

GroupModel coset_enumerate(const Presentation& p, int max_cosets) {
  if (max_cosets < 1) throw Error("coset_enumerate: max_cosets must be positive");
  const int ngens = static_cast<int>(p.generators.size());
  if (ngens == 0) throw Error("coset_enumerate: presentation has no generators");
  std::vector<std::vector<int>> rels;
  for (const Word& w : p.effective_relators()) {
    std::vector<int> cols;
    for (const Letter& l : w) {
      if (l.generator < 0 || l.generator >= ngens) throw Error("coset_enumerate: relator uses an unknown generator");
      cols.push_back(2 * l.generator + (l.sign < 0 ? 1 : 0));
    }
    if (!cols.empty()) rels.push_back(std::move(cols));
  }

  const long long limit = std::min<long long>(1000LL + 200LL * max_cosets, 50'000'000LL);
  CosetTable t(2 * ngens, static_cast<int>(limit));
  for (int c = 0; c < t.size(); ++c) {
    if (!t.live(c)) continue;
    for (const auto& r : rels) {
      if (!t.live(c)) break;
      t.scan_and_fill(c, r);
    }
    if (!t.live(c)) continue;
    for (int x = 0; x < t.columns(); ++x)
      if (t.get(c, x) < 0) t.define(c, x);
  }

  // BFS renumbering from the identity coset
  std::vector<int> index(static_cast<size_t>(t.size()), -1);
  std::vector<int> order{0};
  std::vector<std::vector<int>> words{{}};
  index[0] = 0;
  for (size_t i = 0; i < order.size(); ++i) {
    for (int x = 0; x < t.columns(); ++x) {
      const int d = t.get(order[i], x);
      if (d < 0 || !t.live(d)) throw Error("coset_enumerate: incomplete table after enumeration");
      if (index[d] < 0) {
        if (static_cast<int>(order.size()) >= max_cosets)
          throw CosetBudgetExhausted("group order exceeds max_cosets = " + std::to_string(max_cosets));
        index[d] = static_cast<int>(order.size());
        order.push_back(d);
        auto w = words[i];
        w.push_back(x);
        words.push_back(std::move(w));
      }
    }
  }
  const int n = static_cast<int>(order.size());

  std::vector<std::vector<int>> step(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(t.columns())));
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < t.columns(); ++x) step[a][x] = index[t.get(order[a], x)];

  const std::string identity_name =
      std::find(p.generators.begin(), p.generators.end(), "e") == p.generators.end() ? "e" : "1";
  std::vector<std::string> names;
  for (int a = 0; a < n; ++a) {
    Word w;
    for (int x : words[a]) w.push_back({x / 2, (x & 1) ? -1 : 1});
    names.push_back(a == 0 ? identity_name : format_word(p.generators, w));
  }

  std::vector<std::vector<int>> mul(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int x = a;
      for (int col : words[b]) x = step[x][col];
      mul[a][b] = x;
    }

  std::vector<std::pair<std::string, int>> gm;
  for (int g = 0; g < ngens; ++g) gm.emplace_back(p.generators[g], step[0][2 * g]);

  GroupModel model(std::move(names), std::move(mul), std::move(gm));
  for (const Word& w : p.effective_relators())
    if (model.evaluate(w) != 0) throw Error("coset_enumerate: relator does not evaluate to the identity");
  return model;
}

std::optional<std::vector<int>> find_isomorphism(const GroupModel& a, const GroupModel& b) {
  const int n = a.order();
  if (n != b.order()) return std::nullopt;
  std::vector<int> gens;
  for (const auto& [sym, x] : a.generator_map()) gens.push_back(x);
  if (a.closure(gens).size() != static_cast<size_t>(n)) throw Error("find_isomorphism: generator map does not generate");
  std::vector<int> images(gens.size(), 0);
  for (;;) {
    std::vector<int> phi(static_cast<size_t>(n), -1);
    phi[0] = 0;
    std::vector<int> queue{0};
    bool ok = true;
    for (size_t i = 0; i < queue.size() && ok; ++i)
      for (size_t j = 0; j < gens.size() && ok; ++j) {
        const int x = a.mul(queue[i], gens[j]), y = b.mul(phi[queue[i]], images[j]);
        if (phi[x] < 0) {
          phi[x] = y;
          queue.push_back(x);
        } else if (phi[x] != y) {
          ok = false;
        }
      }
    if (ok) {
      std::vector<bool> hit(static_cast<size_t>(n), false);
      for (int y : phi) {
        if (hit[y]) ok = false;
        hit[y] = true;
      }
      for (int x = 0; x < n && ok; ++x)
        for (int y = 0; y < n && ok; ++y) ok = phi[a.mul(x, y)] == b.mul(phi[x], phi[y]);
      if (ok) return phi;
    }
    size_t k = 0;
    while (k < images.size() && ++images[k] == n) images[k++] = 0;
    if (k == images.size()) return std::nullopt;
  }
}

}  // namespace pcl
