#pragma once

#include <string>
#include <vector>

#include "regdp/adp.hpp"
#include "regdp/params.hpp"
#include "regdp/solvers.hpp"

namespace regdp {

// Instance size for the solver comparison: i-grid size x signal levels
// (direction doubles the state count implicitly).
struct CompareSize {
  int i_count = 0;
  int y_levels = 0;
  std::string label;
};

// Parses "100x20". Throws std::invalid_argument on malformed input.
CompareSize parse_size(const std::string& text);

struct CompareRow {
  std::string size_label;
  std::string solver;
  double seconds = 0.0;
  int iterations = 0;
  bool converged = false;
  double policy_gap_vs_avi = 0.0;  // sup-norm threshold gap against avi
};

// Runs cvi, avi, and adp on each size, scaling the base model so that the
// i-grid spans [0, i_count) with n_bar and reserve proportional. A solver
// that fails to converge is recorded with its partial result and the
// comparison continues.
std::vector<CompareRow> run_comparison(const ModelSpec& base,
                                       const SolveOptions& solve,
                                       const AdpOptions& adp,
                                       const std::vector<CompareSize>& sizes);

void write_compare_csv(const std::string& path,
                       const std::vector<CompareRow>& rows);

}  // namespace regdp
