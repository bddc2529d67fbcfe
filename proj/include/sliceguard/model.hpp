// Copyright 2026 The SliceGuard Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/// \file model.hpp
/// \brief Capacity and delay evaluation plus declarative constraint
///        checking. Every other component computes these quantities through
///        this header, never on its own.

#ifndef SLICEGUARD_MODEL_HPP
#define SLICEGUARD_MODEL_HPP

#include <cmath>
#include <string>
#include <vector>

#include "sliceguard/core.hpp"

namespace sliceguard {

// Admitted load must stay this far below an instance's service rate.
inline constexpr double kStabilityMargin = 1e-6;

// Feasibility comparisons tolerate this much relative rounding.
inline constexpr double kFeasTol = 1e-9;

inline double feas_tol(double scale) {
  return kFeasTol * std::max(1.0, std::fabs(scale));
}

struct UnstableInstanceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnmappedVnfError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// -----------------------------------------------------------------------
// Instance quantities
// -----------------------------------------------------------------------

// Packets/sec admitted by instance (t, i) at node n.
inline double instance_load(const ScenarioIndex& ix, const Placement& pl,
                            int n, int t, int i) {
  double load = 0.0;
  for (int p = 0; p < ix.num_procs(); ++p)
    if (pl.get_gamma(n, t, i, p)) load += ix.proc(p).packet_rate;
  return load;
}

// Capacity units consumed by admitted traffic: each procedure charges one
// lambda*mu share per traverse of the type.
inline double traffic_capacity(const ScenarioIndex& ix, const Placement& pl,
                               int n, int t, int i) {
  const VnfTypeSpec& spec = ix.type(t);
  double units = 0.0;
  for (int p = 0; p < ix.num_procs(); ++p) {
    if (!pl.get_gamma(n, t, i, p)) continue;
    const auto& pr = ix.proc(p);
    units += pr.packet_rate * pr.traverses[t] * spec.per_unit_capacity;
  }
  return units;
}

// Traffic measured per served procedure, independent of how often the
// procedure revisits the instance. This is the quantity the max-traffic
// protection bounds: a limit of k with lambda*mu = 1 reads "serves at most
// k procedures".
inline double procedure_traffic(const ScenarioIndex& ix, const Placement& pl,
                                int n, int t, int i) {
  const VnfTypeSpec& spec = ix.type(t);
  double units = 0.0;
  for (int p = 0; p < ix.num_procs(); ++p)
    if (pl.get_gamma(n, t, i, p))
      units += ix.proc(p).packet_rate * spec.per_unit_capacity;
  return units;
}

// Total capacity held by instance (t, i) at node n: activation base plus
// admitted traffic.
inline double total_capacity(const ScenarioIndex& ix, const Placement& pl,
                             int n, int t, int i) {
  return ix.type(t).base_capacity * pl.get_beta(n, t, i) +
         traffic_capacity(ix, pl, n, t, i);
}

// Response time of one visit: fixed processing share 1/omega plus the
// queueing share 1/(omega - load). Load must stay below omega by the
// stability margin. Pseudo entities respond instantly.
inline double instance_delay(const ScenarioIndex& ix, const Placement& pl,
                             int n, int t, int i) {
  const VnfTypeSpec& spec = ix.type(t);
  if (spec.pseudo) return 0.0;
  const double omega = spec.service_rate;
  const double load = instance_load(ix, pl, n, t, i);
  if (load > omega - kStabilityMargin)
    throw UnstableInstanceError("instance " + spec.id + "[" +
                                std::to_string(i) + "] at " + ix.node(n).id +
                                " is saturated");
  return 1.0 / omega + 1.0 / (omega - load);
}

// -----------------------------------------------------------------------
// Procedure delay and objective
// -----------------------------------------------------------------------

// Completion time of procedure p: every chain type contributes its mapped
// instance's response once per traverse, and every recorded flow hop
// contributes its link's propagation delay.
inline double procedure_delay(const ScenarioIndex& ix, const Placement& pl,
                              int p) {
  const auto& pr = ix.proc(p);
  double delay = 0.0;
  for (const int t : pr.chain_types) {
    const auto m = pl.mapped_instance(p, t);
    if (!m)
      throw UnmappedVnfError("procedure " + pr.slice_id + "/" + pr.id +
                             " has no unique instance for " + ix.type(t).id);
    delay += pr.traverses[t] * instance_delay(ix, pl, m->second, t, m->first);
  }
  for (int k = 0; k < pl.steps(p); ++k)
    for (int l = 0; l < ix.num_links(); ++l)
      if (pl.get_chi(p, k, l)) delay += ix.link(l).delay;
  return delay;
}

// Weighted sum of all capacity held on the substrate and all procedure
// completion times.
inline double objective(const ScenarioIndex& ix, const Placement& pl,
                        const Weights& w) {
  double capacity = 0.0;
  for (int t = 0; t < ix.num_types(); ++t)
    for (int i = 0; i < pl.budget(t); ++i)
      for (int n = 0; n < ix.num_nodes(); ++n)
        capacity += total_capacity(ix, pl, n, t, i);
  double delay = 0.0;
  for (int p = 0; p < ix.num_procs(); ++p) delay += procedure_delay(ix, pl, p);
  return w.capacity * capacity + w.delay * delay;
}

// All derived quantities of an assignment-consistent placement, evaluated
// in one pass.
struct DerivedQuantities {
  std::vector<double> traffic;            // [instance * N + n]
  std::vector<double> procedure_traffic;  // [instance * N + n]
  std::vector<double> total;              // [instance * N + n]
  std::vector<double> load;               // [instance * N + n]
  std::vector<double> response;           // [instance * N + n]
  std::vector<double> node_used;          // [n]
  std::vector<double> proc_delay;         // [p]
  double capacity_total = 0.0;
  double delay_total = 0.0;
  double objective = 0.0;
};

inline DerivedQuantities evaluate(const ScenarioIndex& ix, const Placement& pl,
                                  const Weights& w) {
  DerivedQuantities q;
  const int n_nodes = ix.num_nodes();
  const std::size_t cells =
      static_cast<std::size_t>(ix.total_instances()) * n_nodes;
  q.traffic.assign(cells, 0.0);
  q.procedure_traffic.assign(cells, 0.0);
  q.total.assign(cells, 0.0);
  q.load.assign(cells, 0.0);
  q.response.assign(cells, 0.0);
  q.node_used.assign(n_nodes, 0.0);
  for (int t = 0; t < ix.num_types(); ++t) {
    for (int i = 0; i < pl.budget(t); ++i) {
      for (int n = 0; n < n_nodes; ++n) {
        const std::size_t at =
            static_cast<std::size_t>(ix.instance_offset(t) + i) * n_nodes + n;
        q.traffic[at] = traffic_capacity(ix, pl, n, t, i);
        q.procedure_traffic[at] = procedure_traffic(ix, pl, n, t, i);
        q.total[at] = ix.type(t).base_capacity * pl.get_beta(n, t, i) +
                      q.traffic[at];
        q.load[at] = instance_load(ix, pl, n, t, i);
        q.response[at] = instance_delay(ix, pl, n, t, i);
        q.node_used[n] += q.total[at];
        q.capacity_total += q.total[at];
      }
    }
  }
  q.proc_delay.resize(ix.num_procs());
  for (int p = 0; p < ix.num_procs(); ++p) {
    q.proc_delay[p] = procedure_delay(ix, pl, p);
    q.delay_total += q.proc_delay[p];
  }
  q.objective = w.capacity * q.capacity_total + w.delay * q.delay_total;
  return q;
}

// -----------------------------------------------------------------------
// Exposure
// -----------------------------------------------------------------------

// An instance is exposed through slice s when s runs an externally sourced
// procedure whose first serving function is mapped to that instance.
// Returns a table shaped like Placement::omega.
inline std::vector<std::uint8_t> compute_exposure(const ScenarioIndex& ix,
                                                  const Placement& pl) {
  std::vector<std::uint8_t> omega(pl.omega.size(), 0);
  for (int p = 0; p < ix.num_procs(); ++p) {
    const auto& pr = ix.proc(p);
    if (!pr.external) continue;
    const int t = pr.first_vnf;
    for (int i = 0; i < pl.budget(t); ++i)
      for (int n = 0; n < ix.num_nodes(); ++n)
        if (pl.get_gamma(n, t, i, p))
          omega[pl.omega_index(n, pr.slice, t, i)] = 1;
  }
  return omega;
}

// -----------------------------------------------------------------------
// Constraint checking
// -----------------------------------------------------------------------

enum class ConstraintFamily {
  assignment_coverage,   // each chain type served by exactly one instance
  launch_before_serve,   // a serving instance must be active
  no_idle_instance,      // an active instance must serve something
  single_node_instance,  // an instance lives on at most one node
  instance_capacity,     // total capacity within the per-instance cap
  node_capacity,         // node holds at most its capacity
  flow_consistency,      // split steps ride exactly the direct link
  link_bandwidth,        // link carries at most its bandwidth
  deadline,              // procedure completes within its max delay
  traffic_limit,         // admitted per-procedure traffic within the cap
  exposure_definition,   // omega equals its indicator definition
  exposure_isolation,    // exposed instances are not shared
  stability,             // admitted load below the service rate
};

inline const char* to_string(ConstraintFamily f) {
  switch (f) {
    case ConstraintFamily::assignment_coverage: return "assignment-coverage";
    case ConstraintFamily::launch_before_serve: return "launch-before-serve";
    case ConstraintFamily::no_idle_instance: return "no-idle-instance";
    case ConstraintFamily::single_node_instance:
      return "single-node-instance";
    case ConstraintFamily::instance_capacity: return "instance-capacity";
    case ConstraintFamily::node_capacity: return "node-capacity";
    case ConstraintFamily::flow_consistency: return "flow-consistency";
    case ConstraintFamily::link_bandwidth: return "link-bandwidth";
    case ConstraintFamily::deadline: return "deadline";
    case ConstraintFamily::traffic_limit: return "traffic-limit";
    case ConstraintFamily::exposure_definition: return "exposure-definition";
    case ConstraintFamily::exposure_isolation: return "exposure-isolation";
    case ConstraintFamily::stability: return "stability";
  }
  return "unknown";
}

struct Violation {
  ConstraintFamily family;
  std::string subject;
  double slack = 0.0;  // negative: amount by which the constraint is missed
};

struct ConstraintReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  int count(ConstraintFamily f) const {
    int c = 0;
    for (const auto& v : violations) c += (v.family == f) ? 1 : 0;
    return c;
  }
  void add(ConstraintFamily f, std::string subject, double slack) {
    violations.push_back(Violation{f, std::move(subject), slack});
  }
  void merge(const ConstraintReport& other) {
    violations.insert(violations.end(), other.violations.begin(),
                      other.violations.end());
  }
};

namespace detail {

inline std::string instance_subject(const ScenarioIndex& ix, int n, int t,
                                    int i) {
  return ix.node(n).id + ":" + ix.type(t).id + "[" + std::to_string(i) + "]";
}

inline std::string proc_subject(const ScenarioIndex& ix, int p) {
  return ix.proc(p).slice_id + "/" + ix.proc(p).id;
}

}  // namespace detail

// Structural and capacity constraints, the flow rule, deadlines, the
// stability guard, and the exposure definition. Deadline and flow checks
// run only for procedures whose coverage holds (and, for deadlines, whose
// instances are stable); the coverage or stability violation itself is the
// finding there.
inline ConstraintReport check_assignment(const ScenarioIndex& ix,
                                         const Placement& pl) {
  ConstraintReport rep;

  // assignment coverage
  std::vector<char> covered(static_cast<std::size_t>(ix.num_procs()) *
                                ix.num_types(),
                            0);
  for (int p = 0; p < ix.num_procs(); ++p) {
    const auto& pr = ix.proc(p);
    for (int t = 0; t < ix.num_types(); ++t) {
      int cnt = 0;
      for (int i = 0; i < pl.budget(t); ++i)
        for (int n = 0; n < ix.num_nodes(); ++n)
          cnt += pl.get_gamma(n, t, i, p) ? 1 : 0;
      const int expected = pr.traverses[t] > 0 ? 1 : 0;
      if (cnt != expected) {
        rep.add(ConstraintFamily::assignment_coverage,
                detail::proc_subject(ix, p) + ":" + ix.type(t).id,
                static_cast<double>(expected - cnt));
      } else if (expected == 1) {
        covered[static_cast<std::size_t>(p) * ix.num_types() + t] = 1;
      }
    }
  }
  auto fully_mapped = [&](int p) {
    for (const int t : ix.proc(p).chain_types)
      if (!covered[static_cast<std::size_t>(p) * ix.num_types() + t])
        return false;
    return true;
  };

  // instance activation coupling, per-node instance capacity
  for (int t = 0; t < ix.num_types(); ++t) {
    for (int i = 0; i < pl.budget(t); ++i) {
      int nodes_active = 0;
      for (int n = 0; n < ix.num_nodes(); ++n) {
        int served = 0;
        for (int p = 0; p < ix.num_procs(); ++p)
          served += pl.get_gamma(n, t, i, p) ? 1 : 0;
        const bool active = pl.get_beta(n, t, i) != 0;
        nodes_active += active ? 1 : 0;
        if (served > 0 && !active)
          rep.add(ConstraintFamily::launch_before_serve,
                  detail::instance_subject(ix, n, t, i),
                  static_cast<double>(-served));
        if (active && served == 0)
          rep.add(ConstraintFamily::no_idle_instance,
                  detail::instance_subject(ix, n, t, i), -1.0);
        const double zeta = total_capacity(ix, pl, n, t, i);
        const double cap = ix.type(t).max_capacity;
        if (zeta > cap + feas_tol(cap))
          rep.add(ConstraintFamily::instance_capacity,
                  detail::instance_subject(ix, n, t, i), cap - zeta);
      }
      if (nodes_active > 1)
        rep.add(ConstraintFamily::single_node_instance,
                ix.type(t).id + "[" + std::to_string(i) + "]",
                1.0 - nodes_active);
    }
  }

  // node capacity
  for (int n = 0; n < ix.num_nodes(); ++n) {
    double used = 0.0;
    for (int t = 0; t < ix.num_types(); ++t)
      for (int i = 0; i < pl.budget(t); ++i)
        used += total_capacity(ix, pl, n, t, i);
    const double cap = ix.node(n).max_capacity;
    if (used > cap + feas_tol(cap))
      rep.add(ConstraintFamily::node_capacity, ix.node(n).id, cap - used);
  }

  // stability
  std::vector<char> unstable_proc(ix.num_procs(), 0);
  for (int t = 0; t < ix.num_types(); ++t) {
    if (ix.type(t).pseudo) continue;
    const double omega = ix.type(t).service_rate;
    for (int i = 0; i < pl.budget(t); ++i) {
      for (int n = 0; n < ix.num_nodes(); ++n) {
        const double load = instance_load(ix, pl, n, t, i);
        if (load > omega - kStabilityMargin) {
          rep.add(ConstraintFamily::stability,
                  detail::instance_subject(ix, n, t, i),
                  (omega - kStabilityMargin) - load);
          for (int p = 0; p < ix.num_procs(); ++p)
            if (pl.get_gamma(n, t, i, p)) unstable_proc[p] = 1;
        }
      }
    }
  }

  // flow rule and deadlines
  for (int p = 0; p < ix.num_procs(); ++p) {
    if (!fully_mapped(p)) continue;
    const auto& pr = ix.proc(p);
    for (int k = 0; k < pl.steps(p); ++k) {
      const auto ma = pl.mapped_instance(p, pr.steps[k].a);
      const auto mb = pl.mapped_instance(p, pr.steps[k].b);
      const std::string subject =
          detail::proc_subject(ix, p) + ":step" + std::to_string(k);
      int expected_link = -1;
      bool link_missing = false;
      if (ma->second != mb->second) {
        expected_link = ix.link_between(ma->second, mb->second);
        link_missing = expected_link < 0;
      }
      bool mismatch = link_missing;
      for (int l = 0; l < ix.num_links() && !mismatch; ++l) {
        const bool want = l == expected_link;
        if ((pl.get_chi(p, k, l) != 0) != want) mismatch = true;
      }
      if (mismatch)
        rep.add(ConstraintFamily::flow_consistency, subject,
                link_missing ? -1.0 : 0.0);
    }
    if (!unstable_proc[p]) {
      const double delay = procedure_delay(ix, pl, p);
      if (delay > pr.max_delay + feas_tol(pr.max_delay))
        rep.add(ConstraintFamily::deadline, detail::proc_subject(ix, p),
                pr.max_delay - delay);
    }
  }

  // link bandwidth, from chi as recorded
  for (int l = 0; l < ix.num_links(); ++l) {
    double flow = 0.0;
    for (int p = 0; p < ix.num_procs(); ++p)
      for (int k = 0; k < pl.steps(p); ++k)
        if (pl.get_chi(p, k, l)) flow += ix.proc(p).packet_rate;
    const double bw = ix.link(l).bandwidth;
    if (flow > bw + feas_tol(bw)) {
      const auto& lk = ix.link(l);
      rep.add(ConstraintFamily::link_bandwidth,
              ix.node(lk.from).id + "->" + ix.node(lk.to).id, bw - flow);
    }
  }

  // exposure definition
  const std::vector<std::uint8_t> expected_omega = compute_exposure(ix, pl);
  if (expected_omega != pl.omega) {
    for (int t = 0; t < ix.num_types(); ++t)
      for (int i = 0; i < pl.budget(t); ++i)
        for (int n = 0; n < ix.num_nodes(); ++n)
          for (int s = 0; s < ix.num_slices(); ++s) {
            const std::uint8_t want =
                expected_omega[pl.omega_index(n, s, t, i)];
            if (pl.get_omega(n, s, t, i) != want)
              rep.add(ConstraintFamily::exposure_definition,
                      detail::instance_subject(ix, n, t, i) + ":" +
                          ix.slice_id(s),
                      pl.get_omega(n, s, t, i) ? -1.0 : 1.0);
          }
  }

  return rep;
}

// The two switchable protections. Only active toggles report.
inline ConstraintReport check_security(const ScenarioIndex& ix,
                                       const Placement& pl,
                                       const Toggles& toggles) {
  ConstraintReport rep;
  if (toggles.max_traffic) {
    for (int t = 0; t < ix.num_types(); ++t) {
      const double limit = ix.type(t).max_traffic_capacity;
      for (int i = 0; i < pl.budget(t); ++i) {
        for (int n = 0; n < ix.num_nodes(); ++n) {
          const double traffic = procedure_traffic(ix, pl, n, t, i);
          if (traffic > limit + feas_tol(limit))
            rep.add(ConstraintFamily::traffic_limit,
                    detail::instance_subject(ix, n, t, i), limit - traffic);
        }
      }
    }
  }
  if (toggles.exposure) {
    for (int t = 0; t < ix.num_types(); ++t) {
      for (int i = 0; i < pl.budget(t); ++i) {
        for (int n = 0; n < ix.num_nodes(); ++n) {
          int exposing = 0;
          for (int s = 0; s < ix.num_slices(); ++s)
            exposing += pl.get_omega(n, s, t, i) ? 1 : 0;
          if (exposing > 1) {
            rep.add(ConstraintFamily::exposure_isolation,
                    detail::instance_subject(ix, n, t, i),
                    1.0 - exposing);
            continue;
          }
          if (exposing == 0) continue;
          int internal_sharers = 0;
          for (int p = 0; p < ix.num_procs(); ++p)
            if (!ix.proc(p).external && pl.get_gamma(n, t, i, p))
              ++internal_sharers;
          if (internal_sharers > 0)
            rep.add(ConstraintFamily::exposure_isolation,
                    detail::instance_subject(ix, n, t, i),
                    -static_cast<double>(internal_sharers));
        }
      }
    }
  }
  return rep;
}

// Full feasibility: structural families plus whatever protections are on.
inline ConstraintReport check_placement(const ScenarioIndex& ix,
                                        const Placement& pl,
                                        const Toggles& toggles) {
  ConstraintReport rep = check_assignment(ix, pl);
  rep.merge(check_security(ix, pl, toggles));
  return rep;
}

// Launch-coupled node usage; equal to the checked sum whenever activation
// coupling holds. Kept for diagnostics.
inline double node_capacity_launched(const ScenarioIndex& ix,
                                     const Placement& pl, int n) {
  double used = 0.0;
  for (int t = 0; t < ix.num_types(); ++t)
    for (int i = 0; i < pl.budget(t); ++i)
      used += total_capacity(ix, pl, n, t, i) * pl.get_beta(n, t, i);
  return used;
}

}  // namespace sliceguard

#endif  // SLICEGUARD_MODEL_HPP
