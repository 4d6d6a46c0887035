#pragma once

#include <optional>
#include <vector>

#include "rational.hpp"

namespace crs {

// Accuracy/shape parameters that every other component consumes. Immutable
// after construction; safe to share across threads.
struct SchemeParams {
  Rat eps;   // accuracy parameter, 0 < eps <= 1
  Rat base;  // exactly 1 + eps
  int m = 1; // machines in use (after speed normalization)

  int s = 1;    // relevance window: size classes kept below the phase
  int cap = 1;  // max jobs per size class

  // Per-machine speed exponents: speed_i = base^speeds[i]. Sorted
  // non-increasing, minimum entry 0. All zeros means identical machines.
  std::vector<int> speeds;

  long long max_states = 200000;  // exploration budget (canonical keys)
  int opt_budget = 24;            // max total jobs for the exact offline oracle

  bool s_overridden = false;
  bool cap_overridden = false;

  int m_input = 1;                   // machine count before normalization
  std::vector<int> dropped_machines; // 1-based input indices removed as too slow

  bool identical() const {
    for (int e : speeds)
      if (e != 0) return false;
    return true;
  }
  Rat speed_of(int slot0) const { return pow_rat(base, speeds[slot0]); }
  Rat sum_speeds() const {
    Rat t(0);
    for (int e : speeds) t += pow_rat(base, e);
    return t;
  }
};

struct ParamOverrides {
  std::optional<int> s;
  std::optional<int> cap;
  std::optional<long long> max_states;
  std::optional<int> opt_budget;
};

// Builds SchemeParams. Without overrides, s is the least integer with
// (1+eps)^s >= m(1+eps)/eps^5 and cap = ceil(m/eps^3). Raw speeds, when
// given, are normalized (slow machines dropped, the rest rounded down to
// powers of 1+eps); m then reflects the surviving machine count.
SchemeParams make_params(const Rat& eps, int m,
                         const std::vector<Rat>& raw_speeds = {},
                         const ParamOverrides& overrides = {});

}  // namespace crs
