#pragma once

#include <optional>
#include <vector>

#include "params.hpp"
#include "rational.hpp"

namespace crs {

// One revealed job: its 1-based arrival iteration and the exponent k of its
// size (1+eps)^k. Sizes are kept as exponents; values are expanded lazily.
struct JobEvent {
  long index;
  long size_exp;
  bool operator==(const JobEvent&) const = default;
};

// Full online state: released jobs in arrival order, their machine
// assignment, and the newly released but not yet assigned job.
struct Configuration {
  std::vector<JobEvent> jobs;
  std::vector<int> chi;  // 1-based machine per assigned job, parallel to jobs
  std::optional<JobEvent> pending;
};

// Adds t to every size exponent (assigned and pending).
Configuration shift_configuration(const Configuration& config, long t);

// Per-machine execution-time loads: load_i = sum of p_j / s_i over jobs
// assigned to i. The pending job carries no load.
std::vector<Rat> load_vector(const Configuration& config,
                             const SchemeParams& params);

// Max machine load; 0 for an empty configuration.
Rat makespan_of(const Configuration& config, const SchemeParams& params);

// Raw-valued variant used by the execution harness: sizes and speeds are
// arbitrary positive rationals, chi holds 1-based machine indices.
Rat makespan_raw(const std::vector<Rat>& sizes, const std::vector<int>& chi,
                 const std::vector<Rat>& speeds);

}  // namespace crs
