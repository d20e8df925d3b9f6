#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "regdp/state.hpp"

namespace regdp {

// Provenance carried by every solver artifact.
struct TableMeta {
  std::string solver;        // "cvi", "avi", "adp"
  std::uint64_t params_hash = 0;
  int iterations = 0;
  double tol = 0.0;
  double final_change = 0.0;  // last sup-norm iterate change
  bool converged = false;
  double wall_seconds = 0.0;
  std::uint64_t seed = 0;
  int price_grid = 0;        // cvi only: threshold grid size
};

struct ValueTable {
  StateGrid grid;
  std::vector<double> j;  // flat-indexed by grid
  TableMeta meta;

  double at(const State& s) const { return j[grid.index(s)]; }
};

struct PolicyTable {
  StateGrid grid;
  std::vector<double> u;  // broadcast threshold per state
  TableMeta meta;

  double at(const State& s) const { return u[grid.index(s)]; }
};

}  // namespace regdp
