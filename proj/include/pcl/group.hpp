#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pcl/presentation.hpp"

namespace pcl {

/// Coset enumeration ran out of room: the group may be infinite or larger than the budget.
class CosetBudgetExhausted : public BudgetExceeded {
 public:
  using BudgetExceeded::BudgetExceeded;
};

/// A finite group given by its multiplication table. Element 0 is the identity.
class GroupModel {
 public:
  /// Builds the model and checks the group axioms (exhaustively up to order 64).
  GroupModel(std::vector<std::string> names, std::vector<std::vector<int>> mul,
             std::vector<std::pair<std::string, int>> generator_map = {});

  int order() const { return static_cast<int>(names_.size()); }
  static constexpr int identity() { return 0; }
  int mul(int a, int b) const { return mul_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  const std::string& name(int a) const { return names_.at(a); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> find(std::string_view name) const;
  int element_order(int a) const;

  /// Presentation generator symbol -> element, in presentation order.
  const std::vector<std::pair<std::string, int>>& generator_map() const { return generator_map_; }
  std::vector<std::string> generator_symbols() const;

  /// Evaluate a word over the presentation generators.
  int evaluate(const Word& w) const;

  /// Smallest subgroup containing `elements`, as a sorted element list.
  std::vector<int> closure(const std::vector<int>& elements) const;

  /// Throws pcl::Error describing the first violated axiom.
  void validate() const;

  static GroupModel cyclic(int n, const std::string& generator = "a");

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<int>> mul_;
  std::vector<int> inv_;
  std::vector<std::pair<std::string, int>> generator_map_;
};

/// Todd-Coxeter enumeration of the cosets of the trivial subgroup.
///
/// Strategy: HLT. Cosets are processed in creation order; each relator is
/// scanned from the current coset, defining new cosets to complete the scan,
/// and coincidences are processed immediately. After all relators close at a
/// coset its remaining table entries are filled. The final table is
/// renumbered in BFS order from the identity using columns
/// g0, g0^-1, g1, g1^-1, ..., so element names are shortlex-least words.
///
/// The working table may hold up to `1000 + 200 * max_cosets` cosets while
/// enumerating; a group whose order exceeds `max_cosets` is rejected.
GroupModel coset_enumerate(const Presentation& p, int max_cosets);

/// An isomorphism a -> b as an element map, found by trying every image of
/// a's presentation generators.
std::optional<std::vector<int>> find_isomorphism(const GroupModel& a, const GroupModel& b);

}  // namespace pcl
