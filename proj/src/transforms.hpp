#pragma once

#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "params.hpp"
#include "rational.hpp"

namespace crs {

// Rounds a positive size up to the next power of 1+eps; returns the
// exponent k, the unique integer with (1+eps)^(k-1) < p <= (1+eps)^k.
long round_size(const Rat& p, const Rat& eps);

struct NormalizedSpeeds {
  std::vector<int> exponents;  // non-increasing, last entry 0
  std::vector<int> dropped;    // 1-based indices of removed machines
};

// Drops machines with speed <= (eps/m) * s_max, rescales so the slowest
// surviving machine has speed 1, and rounds the rest down to powers of
// 1+eps. The fastest machine always survives.
NormalizedSpeeds normalize_speeds(const std::vector<Rat>& raw, const Rat& eps,
                                  int m);

// Online window filter: jobs more than s size classes below the largest
// exponent seen by the downstream stage are diverted to the least-loaded
// machine instead of being passed on.
class SmallJobFilter {
 public:
  explicit SmallJobFilter(const SchemeParams& params);

  struct Decision {
    bool kept;    // pass downstream
    int machine;  // 1-based target when diverted, else 0
  };

  // true_loads are the caller's current per-machine loads (any consistent
  // units); used only to pick the diversion target.
  Decision offer(long exponent, const std::vector<Rat>& true_loads);

  // The downstream stage may raise the window on its own (container jobs
  // can exceed every size seen so far).
  void note_downstream_exponent(long exponent);

  const Rat& diverted_mass() const { return diverted_mass_; }
  // eps * (1+eps)^phase, the ceiling the diverted mass is expected to
  // respect on cap-compliant streams. Meaningless before the first job.
  Rat diverted_bound() const;
  bool bound_violated() const { return bound_violated_; }
  bool any_seen() const { return has_phase_; }

 private:
  const SchemeParams& params_;
  bool has_phase_ = false;
  long phase_ = 0;
  Rat diverted_mass_ = 0;
  bool bound_violated_ = false;

  void refresh_violation();
};

// Online per-size-class cap enforcement. When a job arrives whose size
// class already holds `cap` jobs in the transformed instance, a synthetic
// container job is released downstream instead, and this job plus later
// jobs of no larger size are packed onto the container's machine until the
// container is full. At most one container accepts jobs at any time.
class ContainerWrapper {
 public:
  // Decides the machine for a job the downstream algorithm actually sees.
  using InnerDecide = std::function<int(long exponent)>;

  ContainerWrapper(const SchemeParams& params, InnerDecide inner);

  struct Routed {
    int machine;     // 1-based outer assignment for the arriving job
    bool swallowed;  // true when packed into a container
    std::optional<long> container_opened;  // exponent, when a new one opened
  };

  Routed offer(long exponent);

  // State of the transformed instance I'.
  const std::map<long, long>& inner_counts() const { return inner_counts_; }
  const std::vector<Rat>& inner_loads() const { return inner_loads_; }
  const std::vector<Rat>& outer_loads() const { return outer_loads_; }
  Rat inner_makespan() const;
  Rat outer_makespan() const;
  long inner_events() const { return inner_events_; }

  // Open containers that are less than (1-eps)-full, per size exponent.
  // The wrapper keeps this at most 1 for every exponent.
  int underfull_open_containers(long exponent) const;

 private:
  struct Container {
    long size_exp;     // container size is base^size_exp
    long trigger_exp;  // jobs with exponent <= trigger_exp are routable
    int machine;       // 1-based
    Rat filled = 0;
    bool closed = false;
  };

  const SchemeParams& params_;
  InnerDecide inner_;
  std::map<long, long> inner_counts_;   // per-exponent count in I'
  std::vector<Rat> inner_loads_;        // loads of I' under inner decisions
  std::vector<Rat> outer_loads_;        // loads of the real jobs routed here
  std::vector<Container> containers_;   // all ever opened, newest last
  long inner_events_ = 0;

  Container* open_container();
  int release_inner(long exponent);
  long pick_container_exponent(long trigger_exp);
};

}  // namespace crs
