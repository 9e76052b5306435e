#include "pcl/bundled.hpp"

#include <map>
#include <mutex>
#include <string>

namespace pcl::bundled {

std::shared_ptr<const GroupModel> enumerate(std::string_view text, int max_cosets) {
  return std::make_shared<const GroupModel>(coset_enumerate(parse_presentation(text), max_cosets));
}

std::shared_ptr<const GroupModel> a4() {
  static const auto g = enumerate(kA4);
  return g;
}

std::shared_ptr<const GroupModel> z4xz2() {
  static const auto g = enumerate(kZ4xZ2);
  return g;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"Z1", "group Z1 { gens: a; rels: a^1; }", "a"},
      {"Z2", kZ2, "b"},
      {"Z3", kZ3, "r"},
      {"Z4", "group Z4 { gens: a; rels: a^4; }", "a"},
      {"Z5", "group Z5 { gens: a; rels: a^5; }", "a"},
      {"Z6", "group Z6 { gens: a; rels: a^6; }", "a"},
      {"Z7", "group Z7 { gens: a; rels: a^7; }", "a"},
      {"Z8", "group Z8 { gens: a; rels: a^8; }", "a"},
      {"Z9", "group Z9 { gens: a; rels: a^9; }", "a"},
      {"Z10", "group Z10 { gens: a; rels: a^10; }", "a"},
      {"Z11", "group Z11 { gens: a; rels: a^11; }", "a"},
      {"Z12", "group Z12 { gens: a; rels: a^12; }", "a"},
      {"V4", "group V4 { gens: a b; rels: a^2, b^2, (a*b)^2; involutions: a b; }", "a,b"},
      {"S3", "group S3 { gens: s t; rels: s^2, t^2, (s*t)^3; involutions: s t; }", "s,t"},
      {"Z4xZ2", kZ4xZ2, "(1,0),(0,1)"},
      {"D4", "group D4 { gens: s t; rels: s^2, t^2, (s*t)^4; involutions: s t; }", "s,t"},
      {"Q8", "group Q8 { gens: i j; rels: i^4, i^2*j^-2, j^-1*i*j*i; }", "i,j"},
      {"Z3xZ3", "group Z3xZ3 { gens: a b; rels: a^3, b^3, a*b*a^-1*b^-1; }", "a,b"},
      {"D5", "group D5 { gens: s t; rels: s^2, t^2, (s*t)^5; involutions: s t; }", "s,t"},
      {"A4", kA4, "k,r"},
      {"A4rg", kA4OddOrder, "r,g"},
      {"D6", "group D6 { gens: s t; rels: s^2, t^2, (s*t)^6; involutions: s t; }", "s,t"},
      {"Z2xZ6", "group Z2xZ6 { gens: a b; rels: a^2, b^6, a*b*a*b^-1; involutions: a; }", "a,b"},
  };
  return entries;
}

std::shared_ptr<const GroupModel> group(std::string_view name) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const GroupModel>, std::less<>> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(name); it != cache.end()) return it->second;
  for (const auto& e : catalog())
    if (e.name == name) return cache[std::string(name)] = enumerate(e.presentation);
  throw Error("unknown bundled group " + std::string(name));
}

}  // namespace pcl::bundled
