#pragma once

#include <string>
#include <vector>

#include "pcl/serialize.hpp"

namespace pcl::corpus {

struct Check {
  std::string claim;
  bool pass = false;
  std::string observed;
};

struct CaseReport {
  std::string name;
  std::vector<Check> checks;
  bool pass() const;
};

/// Case names in report order.
std::vector<std::string> case_names();

/// Throws pcl::Error for an unknown case.
CaseReport run_case(const std::string& name);

/// All cases, ordered by name.
std::vector<CaseReport> run_all();

Json to_json(const std::vector<CaseReport>& reports);
std::string to_text(const std::vector<CaseReport>& reports);

}  // namespace pcl::corpus
