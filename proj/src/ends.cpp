#include "pcl/ends.hpp"

#include <algorithm>
#include <set>

namespace pcl {

std::string to_string(EndsClass c) {
  switch (c) {
    case EndsClass::zero: return "0";
    case EndsClass::one: return "1";
    case EndsClass::two: return "2";
    case EndsClass::cantor: return "cantor";
  }
  return "?";
}

int unbounded_components(const CayleyGraph& ball, int r) {
  if (ball.complete()) throw Error("unbounded_components: needs a ball");
  std::vector<bool> keep(static_cast<size_t>(ball.num_vertices()));
  for (int v = 0; v < ball.num_vertices(); ++v) keep[v] = ball.depth[v] > r;
  std::vector<int> comp;
  connected_components(ball.graph, keep, comp);
  std::set<int> hit;
  for (int v = 0; v < ball.num_vertices(); ++v)
    if (ball.frontier[v] && comp[v] >= 0) hit.insert(comp[v]);
  return static_cast<int>(hit.size());
}

std::pair<int, int> default_radii(std::string_view family) {
  if (family == "z" || family == "z-steps-1-2") return {2, 5};
  if (family == "f2") return {1, 4};
  return {2, 6};
}

namespace {

// cantor needs three or more at both radii; otherwise the smaller count decides
EndsClass class_of(int count, int previous) {
  if (count >= 3 && previous >= 3) return EndsClass::cantor;
  switch (std::min(count, previous)) {
    case 0: return EndsClass::zero;
    case 1: return EndsClass::one;
    default: return EndsClass::two;
  }
}

EndsReport report_on(const CayleyGraph& ball, int r) {
  if (ball.complete()) throw Error("classify_ends: needs a ball");
  const int R = *ball.radius;
  if (r < 0 || r + 1 >= R) throw Error("classify_ends: need 0 <= r < R - 1");
  EndsReport rep;
  rep.r = r;
  rep.R = R;
  rep.count = unbounded_components(ball, r);
  rep.count_previous = unbounded_components(restrict_ball(ball, R - 1), r);
  for (int s = 0; s <= r; ++s) rep.profile.push_back(unbounded_components(ball, s));
  rep.stabilized = rep.count == rep.count_previous;
  rep.end_class = class_of(rep.count, rep.count_previous);
  return rep;
}

}  // namespace

EndsReport classify_ends(const InfiniteFamilySpec& spec, int r, int R, int max_vertices) {
  if (r >= R) throw Error("classify_ends: need r < R");
  EndsReport rep = report_on(build_ball(spec, R, max_vertices), r);
  rep.certified = true;
  rep.source = family_tag(spec);
  return rep;
}

EndsReport classify_ends(const GroupModel& g) {
  EndsReport rep;
  rep.stabilized = true;
  rep.certified = true;
  rep.source = "finite group of order " + std::to_string(g.order());
  return rep;
}

EndsReport classify_ends_ball(const CayleyGraph& ball, int r) {
  EndsReport rep = report_on(ball, r);
  rep.source = "ball";
  return rep;
}

}  // namespace pcl
