#pragma once

#include <cstddef>

namespace regdp {

// MDP state: active-appliance count i, signal grid index y_idx (y = -1 +
// y_idx*delta_y), and signal direction dir in {-1, +1}.
struct State {
  int i;
  int y_idx;
  int dir;

  friend bool operator==(const State&, const State&) = default;
};

// Enumeration of the state space, flat-indexed with i fastest, then y_idx,
// then direction (dir=-1 block first).
struct StateGrid {
  int n1, n2;
  int y_levels;
  double delta_y;

  int i_count() const { return n2 - n1 + 1; }
  std::size_t size() const {
    return static_cast<std::size_t>(2) * y_levels * i_count();
  }
  static int dir_index(int dir) { return dir > 0 ? 1 : 0; }
  std::size_t index(const State& s) const {
    return (static_cast<std::size_t>(dir_index(s.dir)) * y_levels + s.y_idx) *
               i_count() +
           (s.i - n1);
  }
  State state(std::size_t idx) const {
    const int ic = i_count();
    const int i = n1 + static_cast<int>(idx % ic);
    idx /= ic;
    const int y = static_cast<int>(idx % y_levels);
    const int dir = idx / y_levels == 0 ? -1 : +1;
    return State{i, y, dir};
  }
  double y_value(int y_idx) const { return -1.0 + delta_y * y_idx; }

  friend bool operator==(const StateGrid&, const StateGrid&) = default;
};

}  // namespace regdp
