#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pcl/cayley.hpp"
#include "pcl/group.hpp"

namespace pcl {

enum class EndsClass { zero, one, two, cantor };

std::string to_string(EndsClass c);

struct EndsReport {
  EndsClass end_class = EndsClass::zero;
  int r = 0;
  int R = 0;
  /// Components of Ball(R) - Ball(r) containing a frontier vertex, at R and at R-1.
  int count = 0;
  int count_previous = 0;
  /// The same count at (s, R) for s = 0..r.
  std::vector<int> profile;
  bool stabilized = false;
  /// False for raw balls, where the count is only a heuristic.
  bool certified = false;
  std::string source;
};

/// Components of ball minus the closed r-ball that reach the frontier.
int unbounded_components(const CayleyGraph& ball, int r);

/// Radii at which the bundled family's count has stabilised.
std::pair<int, int> default_radii(std::string_view family);

EndsReport classify_ends(const InfiniteFamilySpec& spec, int r, int R, int max_vertices = 1 << 21);
EndsReport classify_ends(const GroupModel& g);
/// Same count on a ball built elsewhere; reported as uncertified.
EndsReport classify_ends_ball(const CayleyGraph& ball, int r);

}  // namespace pcl
