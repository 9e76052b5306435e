#pragma once

#include <memory>
#include <string_view>
#include <vector>

#include "pcl/group.hpp"

namespace pcl::bundled {

// The finite groups used by the amalgam example. Identical copies live in corpus/*.grp.
inline constexpr std::string_view kA4 = "group A4 { gens: k r; rels: k^2, r^3, (k*r)^3; involutions: k; }";
inline constexpr std::string_view kA4OddOrder = "group A4rg { gens: r g; rels: r^3, g^3, (r*g)^2; }";
inline constexpr std::string_view kZ4xZ2 =
    "group Z4xZ2 { gens: a b; rels: a^4, b^2, a*b*a^-1*b^-1; involutions: b; }";
inline constexpr std::string_view kZ3 = "group Z3 { gens: r; rels: r^3; }";
inline constexpr std::string_view kZ2 = "group Z2 { gens: b; rels: b^2; involutions: b; }";

/// Small finite groups with a default generating set, used by the suites.
struct CatalogEntry {
  std::string_view name;
  std::string_view presentation;
  std::string_view generators;
};

const std::vector<CatalogEntry>& catalog();
/// Cached model of a catalog group; throws for unknown names.
std::shared_ptr<const GroupModel> group(std::string_view name);

std::shared_ptr<const GroupModel> enumerate(std::string_view text, int max_cosets = 100000);
std::shared_ptr<const GroupModel> a4();
std::shared_ptr<const GroupModel> z4xz2();

}  // namespace pcl::bundled
