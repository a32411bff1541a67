#pragma once

#include <functional>
#include <string>
#include <vector>

#include "srll/report.hpp"

namespace srll {

struct CheckTask {
  std::string id;
  std::function<Report()> run;
};

struct RunOptions {
  int max_dim = 4;       // largest m+n for the R-matrix sweeps
  int parallel = 1;      // worker threads
  long budget = 1000000; // rewrite budget
  std::string fixtures_dir = "fixtures";
};

/// every verification task at desk scale; ids are stable and sorted
std::vector<CheckTask> all_checks(const RunOptions& opts);

/// run tasks (optionally in parallel); reports ordered by task id
std::vector<Report> run_checks(const std::vector<CheckTask>& tasks, int parallel);

/// golden fixture comparisons (Type 1/2/3, the 9x9, the derivation display)
std::vector<Report> golden_checks(const std::string& fixtures_dir);

}  // namespace srll
