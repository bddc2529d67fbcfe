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

/// \file solver.hpp
/// \brief Exact branch-and-bound placement search, a brute-force reference
///        solver, and a greedy warm start.
///
/// Both exact solvers walk the same canonical decision tree: procedures in
/// (slice id, procedure id) order, chain types in first-visit order, and for
/// each decision the placed instances of the type by index followed by a
/// fresh activation per node in id order (collapsing unused nodes when the
/// substrate makes them indistinguishable). Identical enumeration plus a
/// strict-improvement acceptance rule in both solvers means they return the
/// same placement, not merely the same objective; their feasibility and
/// objective arithmetic stays separate so one can audit the other.

#ifndef SLICEGUARD_SOLVER_HPP
#define SLICEGUARD_SOLVER_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sliceguard/core.hpp"
#include "sliceguard/model.hpp"

namespace sliceguard {

enum class SolveStatus {
  optimal,          // incumbent proven optimal
  feasible,         // incumbent found, search truncated by the budget
  infeasible,       // search exhausted without any feasible placement
  no_incumbent,     // budget expired before any feasible placement
  space_too_large,  // brute force refused: tree above the enumeration cap
};

inline const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::feasible: return "feasible";
    case SolveStatus::infeasible: return "infeasible";
    case SolveStatus::no_incumbent: return "no-incumbent";
    case SolveStatus::space_too_large: return "space-too-large";
  }
  return "unknown";
}

enum class BoundMode {
  standard,
  disabled,      // bound reports -inf: no pruning, result must not change
  overestimate,  // deliberately inadmissible: negative control for audits
};

struct SolverConfig {
  // The search stops at time_limit_seconds * nodes_per_second applied
  // decisions, a budget independent of machine speed, with the wall clock
  // as a backstop. Two runs with one config explore the same tree.
  double time_limit_seconds = 10800.0;
  double nodes_per_second = 200000.0;
  std::uint64_t node_budget = 0;  // nonzero overrides the derived budget

  Toggles toggles;
  Weights weights;
  BoundMode bound_mode = BoundMode::standard;
  bool warm_start = true;
  double brute_force_cap = 1e7;  // estimated-leaf refusal threshold
  int thread_cap = 1;            // upper bound only; the engine is serial
  std::uint64_t seed = 0;        // reserved for randomized strategies

  std::uint64_t effective_budget() const {
    if (node_budget > 0) return node_budget;
    const double d = time_limit_seconds * nodes_per_second;
    if (d >= 1e18) return static_cast<std::uint64_t>(1e18);
    return d <= 0.0 ? 0 : static_cast<std::uint64_t>(d);
  }
};

struct IncumbentRecord {
  double wall_seconds = 0.0;
  std::uint64_t nodes = 0;
  double objective = 0.0;
};

struct SolveReport {
  SolveStatus status = SolveStatus::no_incumbent;
  std::string solver;
  std::optional<Placement> placement;
  double objective = std::numeric_limits<double>::infinity();
  bool proven_optimal = false;
  std::uint64_t nodes_explored = 0;
  double wall_seconds = 0.0;
  std::vector<IncumbentRecord> incumbents;  // strictly improving
};

// ----------------------------------------------------------------------
// Canonical candidate enumeration
// ----------------------------------------------------------------------

struct Candidate {
  int instance = -1;
  int node = -1;
  bool fresh = false;
};

namespace detail {

// Shared by every solver so enumeration order is identical everywhere.
// Placed instances first, by index; then one fresh activation per node in
// id order. On a substrate of indistinguishable nodes, nodes hosting
// nothing are collapsed to the lowest-id one.
inline void candidates_for(const ScenarioIndex& ix,
                           const std::vector<int>& inst_node,
                           const std::vector<int>& placed_count,
                           const std::vector<int>& node_instances, int t,
                           std::vector<Candidate>& out) {
  out.clear();
  const int off = ix.instance_offset(t);
  for (int i = 0; i < placed_count[t]; ++i)
    out.push_back(Candidate{i, inst_node[off + i], false});
  if (placed_count[t] >= ix.type(t).instance_budget) return;
  const int fresh = placed_count[t];
  bool unused_seen = false;
  for (int n = 0; n < ix.num_nodes(); ++n) {
    if (ix.interchangeable_nodes() && node_instances[n] == 0) {
      if (unused_seen) continue;
      unused_seen = true;
    }
    out.push_back(Candidate{fresh, n, true});
  }
}

}  // namespace detail

// ----------------------------------------------------------------------
// Incremental search state
// ----------------------------------------------------------------------

// Partial placement with cheap feasibility screening and an admissible
// completion bound. Decisions are fixed up front; apply/undo restore every
// touched accumulator from saved copies, so no floating-point drift
// accumulates over millions of visits.
class SearchState {
 public:
  struct Decision {
    int proc = -1;
    int type = -1;
  };

  SearchState(const ScenarioIndex& ix, const SolverConfig& config)
      : ix_(&ix), config_(&config) {
    const int num_t = ix.num_types();
    for (int p = 0; p < ix.num_procs(); ++p)
      for (const int t : ix.proc(p).chain_types)
        decisions_.push_back(Decision{p, t});
    const int depth_total = static_cast<int>(decisions_.size());

    inst_node_.assign(ix.total_instances(), -1);
    inst_load_.assign(ix.total_instances(), 0.0);
    inst_traffic_.assign(ix.total_instances(), 0.0);
    inst_proc_traffic_.assign(ix.total_instances(), 0.0);
    inst_delay_.assign(ix.total_instances(), 0.0);
    inst_procs_.assign(ix.total_instances(), {});
    inst_exposing_slice_.assign(ix.total_instances(), -1);
    inst_exposing_count_.assign(ix.total_instances(), 0);
    inst_internal_count_.assign(ix.total_instances(), 0);
    placed_count_.assign(num_t, 0);
    node_instances_.assign(ix.num_nodes(), 0);
    node_used_.assign(ix.num_nodes(), 0.0);
    link_used_.assign(ix.num_links(), 0.0);
    proc_type_inst_.assign(
        static_cast<std::size_t>(ix.num_procs()) * num_t, -1);
    proc_delay_.assign(ix.num_procs(), 0.0);
    proc_prop_.assign(ix.num_procs(), 0.0);

    // Per-depth suffixes of the two bound ingredients.
    suffix_traffic_.assign(depth_total + 1, 0.0);
    suffix_min_delay_.assign(depth_total + 1, 0.0);
    suffix_needs_type_.assign(
        static_cast<std::size_t>(depth_total + 1) * num_t, 0);
    for (int d = depth_total - 1; d >= 0; --d) {
      const auto& dec = decisions_[d];
      const auto& pr = ix.proc(dec.proc);
      const auto& spec = ix.type(dec.type);
      const double traverses = pr.traverses[dec.type];
      suffix_traffic_[d] =
          suffix_traffic_[d + 1] +
          pr.packet_rate * traverses * spec.per_unit_capacity;
      double min_delay = 0.0;
      if (!spec.pseudo) min_delay = traverses * 2.0 / spec.service_rate;
      suffix_min_delay_[d] = suffix_min_delay_[d + 1] + min_delay;
      for (int t = 0; t < num_t; ++t)
        suffix_needs_type_[static_cast<std::size_t>(d) * num_t + t] =
            suffix_needs_type_[static_cast<std::size_t>(d + 1) * num_t + t];
      suffix_needs_type_[static_cast<std::size_t>(d) * num_t + dec.type] = 1;
    }
  }

  const std::vector<Decision>& decisions() const { return decisions_; }
  int depth() const { return static_cast<int>(trail_.size()); }
  bool complete() const {
    return depth() == static_cast<int>(decisions_.size());
  }

  void current_candidates(std::vector<Candidate>& out) const {
    detail::candidates_for(*ix_, inst_node_, placed_count_, node_instances_,
                           decisions_[depth()].type, out);
  }

  // Screens the candidate for the current decision against every
  // incrementally checkable constraint. Reports the propagation delay the
  // assignment would add when prop_delta is given. Leaves state untouched.
  bool feasible(const Candidate& c, double* prop_delta = nullptr) const {
    const Decision dec = decisions_[depth()];
    const auto& pr = ix_->proc(dec.proc);
    const auto& spec = ix_->type(dec.type);
    const int g = ix_->instance_offset(dec.type) + c.instance;
    const int n = c.node;
    const double lambda = pr.packet_rate;
    const double traverses = pr.traverses[dec.type];

    if (!spec.pseudo) {
      const double add_traffic = lambda * traverses * spec.per_unit_capacity;
      const double total_after =
          spec.base_capacity + inst_traffic_[g] + add_traffic;
      if (total_after > spec.max_capacity + feas_tol(spec.max_capacity))
        return false;
      const double node_after =
          node_used_[n] + add_traffic + (c.fresh ? spec.base_capacity : 0.0);
      const double node_cap = ix_->node(n).max_capacity;
      if (node_after > node_cap + feas_tol(node_cap)) return false;
      if (config_->toggles.max_traffic) {
        const double limit = spec.max_traffic_capacity;
        if (inst_proc_traffic_[g] + lambda * spec.per_unit_capacity >
            limit + feas_tol(limit))
          return false;
      }
      if (inst_load_[g] + lambda > spec.service_rate - kStabilityMargin)
        return false;
    }

    if (config_->toggles.exposure) {
      const bool exposing = pr.external && dec.type == pr.first_vnf;
      if (exposing) {
        if (inst_exposing_slice_[g] >= 0 &&
            inst_exposing_slice_[g] != pr.slice)
          return false;
        if (inst_internal_count_[g] > 0) return false;
      } else if (!pr.external && inst_exposing_count_[g] > 0) {
        return false;
      }
    }

    // Steps whose second endpoint becomes placed by this assignment.
    double prop = 0.0;
    scratch_links_.clear();
    for (const auto& st : pr.steps) {
      if (st.a != dec.type && st.b != dec.type) continue;
      const int other = st.a == dec.type ? st.b : st.a;
      const int oi = proc_type_inst_[proc_type_at(dec.proc, other)];
      if (oi < 0) continue;
      const int on = inst_node_[ix_->instance_offset(other) + oi];
      const int from = st.a == dec.type ? n : on;
      const int to = st.b == dec.type ? n : on;
      if (from == to) continue;
      const int l = ix_->link_between(from, to);
      if (l < 0) return false;
      prop += ix_->link(l).delay;
      scratch_links_.push_back(l);
    }
    for (const int l : scratch_links_) {
      double extra = 0.0;
      for (const int l2 : scratch_links_)
        if (l2 == l) extra += lambda;
      const double bw = ix_->link(l).bandwidth;
      if (link_used_[l] + extra > bw + feas_tol(bw)) return false;
    }

    // Deadlines: the response bump on a shared instance must leave every
    // procedure already on it within budget, and the current procedure must
    // still be able to finish over unloaded instances.
    if (!spec.pseudo) {
      const double delay_after = response_time(spec, inst_load_[g] + lambda);
      const double bump = delay_after - inst_delay_[g];
      for (const int q : inst_procs_[g]) {
        const auto& qr = ix_->proc(q);
        const double q_after =
            proc_delay_[q] + proc_prop_[q] + qr.traverses[dec.type] * bump;
        if (q_after > qr.max_delay + feas_tol(qr.max_delay)) return false;
      }
      const double own_after = proc_delay_[dec.proc] + proc_prop_[dec.proc] +
                               traverses * delay_after + prop;
      if (own_after + remaining_min_after(dec.proc) >
          pr.max_delay + feas_tol(pr.max_delay))
        return false;
    } else {
      const double own_after =
          proc_delay_[dec.proc] + proc_prop_[dec.proc] + prop;
      if (own_after + remaining_min_after(dec.proc) >
          pr.max_delay + feas_tol(pr.max_delay))
        return false;
    }

    if (prop_delta) *prop_delta = prop;
    return true;
  }

  // Applies the candidate for the current decision. Only call after
  // feasible(c) returned true.
  void apply(const Candidate& c) {
    const Decision dec = decisions_[depth()];
    const auto& pr = ix_->proc(dec.proc);
    const auto& spec = ix_->type(dec.type);
    const int g = ix_->instance_offset(dec.type) + c.instance;
    const int n = c.node;
    const double lambda = pr.packet_rate;
    const double traverses = pr.traverses[dec.type];

    UndoRec rec;
    rec.decision = dec;
    rec.cand = c;
    rec.inst = g;
    rec.node_used_old = node_used_[n];
    rec.committed_old = committed_capacity_;
    rec.inst_load_old = inst_load_[g];
    rec.inst_traffic_old = inst_traffic_[g];
    rec.inst_proc_traffic_old = inst_proc_traffic_[g];
    rec.inst_delay_old = inst_delay_[g];
    rec.delay_sum_old = delay_sum_;
    rec.prop_sum_old = prop_sum_;
    rec.proc_prop_old = proc_prop_[dec.proc];
    rec.own_delay_old = proc_delay_[dec.proc];
    rec.exposing_slice_old = inst_exposing_slice_[g];
    rec.exposing_count_old = inst_exposing_count_[g];
    rec.internal_count_old = inst_internal_count_[g];

    if (c.fresh) {
      inst_node_[g] = n;
      ++placed_count_[dec.type];
      ++node_instances_[n];
      node_used_[n] += spec.base_capacity;
      committed_capacity_ += spec.base_capacity;
    }

    if (!spec.pseudo) {
      const double add_traffic = lambda * traverses * spec.per_unit_capacity;
      inst_traffic_[g] += add_traffic;
      inst_proc_traffic_[g] += lambda * spec.per_unit_capacity;
      node_used_[n] += add_traffic;
      committed_capacity_ += add_traffic;

      // Applications are normally screened, but unscreened walks must leave
      // the bound infinite while a capacity constraint stands violated.
      if (spec.base_capacity + inst_traffic_[g] >
          spec.max_capacity + feas_tol(spec.max_capacity))
        ++rec.breaches_added;
      const double node_cap = ix_->node(n).max_capacity;
      if (node_used_[n] > node_cap + feas_tol(node_cap))
        ++rec.breaches_added;
      capacity_breaches_ += rec.breaches_added;

      const double load_after = inst_load_[g] + lambda;
      const double delay_after = response_time(spec, load_after);
      const double bump = delay_after - inst_delay_[g];
      for (const int q : inst_procs_[g]) {
        rec.touched_procs.push_back({q, proc_delay_[q]});
        const double w = ix_->proc(q).traverses[dec.type];
        proc_delay_[q] += w * bump;
        delay_sum_ += w * bump;
      }
      proc_delay_[dec.proc] += traverses * delay_after;
      delay_sum_ += traverses * delay_after;
      inst_load_[g] = load_after;
      inst_delay_[g] = delay_after;
    }

    inst_procs_[g].push_back(dec.proc);
    proc_type_inst_[proc_type_at(dec.proc, dec.type)] = c.instance;

    // Steps determined by this assignment.
    for (const auto& st : pr.steps) {
      if (st.a != dec.type && st.b != dec.type) continue;
      const int other = st.a == dec.type ? st.b : st.a;
      const int oi = proc_type_inst_[proc_type_at(dec.proc, other)];
      if (oi < 0) continue;
      const int on = inst_node_[ix_->instance_offset(other) + oi];
      const int from = st.a == dec.type ? n : on;
      const int to = st.b == dec.type ? n : on;
      if (from == to) continue;
      const int l = ix_->link_between(from, to);
      rec.touched_links.push_back({l, link_used_[l]});
      link_used_[l] += lambda;
      proc_prop_[dec.proc] += ix_->link(l).delay;
      prop_sum_ += ix_->link(l).delay;
    }

    if (pr.external && dec.type == pr.first_vnf) {
      inst_exposing_slice_[g] = pr.slice;
      ++inst_exposing_count_[g];
    }
    if (!pr.external) ++inst_internal_count_[g];

    trail_.push_back(std::move(rec));
  }

  void undo() {
    UndoRec rec = std::move(trail_.back());
    trail_.pop_back();
    const Decision dec = rec.decision;
    const int g = rec.inst;
    const int n = rec.cand.node;

    inst_exposing_slice_[g] = rec.exposing_slice_old;
    inst_exposing_count_[g] = rec.exposing_count_old;
    inst_internal_count_[g] = rec.internal_count_old;

    for (auto it = rec.touched_links.rbegin(); it != rec.touched_links.rend();
         ++it)
      link_used_[it->first] = it->second;
    proc_prop_[dec.proc] = rec.proc_prop_old;
    prop_sum_ = rec.prop_sum_old;

    proc_type_inst_[proc_type_at(dec.proc, dec.type)] = -1;
    inst_procs_[g].pop_back();

    proc_delay_[dec.proc] = rec.own_delay_old;
    for (auto it = rec.touched_procs.rbegin(); it != rec.touched_procs.rend();
         ++it)
      proc_delay_[it->first] = it->second;
    delay_sum_ = rec.delay_sum_old;
    inst_load_[g] = rec.inst_load_old;
    inst_traffic_[g] = rec.inst_traffic_old;
    inst_proc_traffic_[g] = rec.inst_proc_traffic_old;
    inst_delay_[g] = rec.inst_delay_old;
    capacity_breaches_ -= rec.breaches_added;

    node_used_[n] = rec.node_used_old;
    committed_capacity_ = rec.committed_old;

    if (rec.cand.fresh) {
      inst_node_[g] = -1;
      --placed_count_[dec.type];
      --node_instances_[n];
    }
  }

  // Admissible completion bound: capacity already committed plus the exact
  // traffic every remaining decision must add, plus one activation for each
  // type that has no instance yet but is still needed, plus current
  // response and propagation delays and two service quanta per remaining
  // traverse.
  double lower_bound() const {
    if (config_->bound_mode == BoundMode::disabled)
      return -std::numeric_limits<double>::infinity();
    if (capacity_breaches_ > 0)
      return std::numeric_limits<double>::infinity();
    const int d = depth();
    const int num_t = ix_->num_types();
    double forced_bases = 0.0;
    for (int t = 0; t < num_t; ++t) {
      if (placed_count_[t] > 0) continue;
      if (suffix_needs_type_[static_cast<std::size_t>(d) * num_t + t])
        forced_bases += ix_->type(t).base_capacity;
    }
    const double capacity =
        committed_capacity_ + suffix_traffic_[d] + forced_bases;
    const double delay = delay_sum_ + prop_sum_ + suffix_min_delay_[d];
    double bound = config_->weights.capacity * capacity +
                   config_->weights.delay * delay;
    if (config_->bound_mode == BoundMode::overestimate) bound += 0.5;
    return bound;
  }

  // Materializes the current (complete) assignment as explicit tables.
  Placement to_placement() const {
    Placement pl(*ix_);
    for (const auto& rec : trail_) {
      const int off = ix_->instance_offset(rec.decision.type);
      pl.assign(rec.decision.proc, rec.decision.type, rec.inst - off,
                inst_node_[rec.inst]);
    }
    pl.finalize_flows(*ix_);
    return pl;
  }

  // Incremental image of the full objective; equals the declarative value
  // up to accumulated rounding.
  double current_objective() const {
    return config_->weights.capacity * committed_capacity_ +
           config_->weights.delay * (delay_sum_ + prop_sum_);
  }

  const std::vector<int>& inst_node() const { return inst_node_; }
  const std::vector<int>& placed_count() const { return placed_count_; }
  const std::vector<int>& node_instances() const { return node_instances_; }
  const std::vector<double>& node_used() const { return node_used_; }

 private:
  struct UndoRec {
    Decision decision;
    Candidate cand;
    int inst = -1;
    double node_used_old = 0.0;
    double committed_old = 0.0;
    double inst_load_old = 0.0;
    double inst_traffic_old = 0.0;
    double inst_proc_traffic_old = 0.0;
    double inst_delay_old = 0.0;
    double delay_sum_old = 0.0;
    double prop_sum_old = 0.0;
    double proc_prop_old = 0.0;
    double own_delay_old = 0.0;
    int exposing_slice_old = -1;
    int exposing_count_old = 0;
    int internal_count_old = 0;
    int breaches_added = 0;
    std::vector<std::pair<int, double>> touched_procs;  // (proc, delay before)
    std::vector<std::pair<int, double>> touched_links;  // (link, used before)
  };

  static double response_time(const VnfTypeSpec& spec, double load) {
    return 1.0 / spec.service_rate + 1.0 / (spec.service_rate - load);
  }

  std::size_t proc_type_at(int p, int t) const {
    return static_cast<std::size_t>(p) * ix_->num_types() + t;
  }

  // Minimum delay still unavoidable for the current procedure, excluding
  // the current decision itself. Decisions are grouped by procedure, so
  // every other procedure on a touched instance is already complete.
  double remaining_min_after(int q) const {
    int j = depth() + 1;
    double sum = 0.0;
    while (j < static_cast<int>(decisions_.size()) &&
           decisions_[j].proc == q) {
      const auto& dec = decisions_[j];
      const auto& spec = ix_->type(dec.type);
      if (!spec.pseudo)
        sum += ix_->proc(q).traverses[dec.type] * 2.0 / spec.service_rate;
      ++j;
    }
    return sum;
  }

  const ScenarioIndex* ix_;
  const SolverConfig* config_;
  std::vector<Decision> decisions_;
  std::vector<UndoRec> trail_;

  std::vector<int> inst_node_;
  std::vector<double> inst_load_;
  std::vector<double> inst_traffic_;
  std::vector<double> inst_proc_traffic_;
  std::vector<double> inst_delay_;
  std::vector<std::vector<int>> inst_procs_;
  std::vector<int> inst_exposing_slice_;
  std::vector<int> inst_exposing_count_;
  std::vector<int> inst_internal_count_;
  std::vector<int> placed_count_;
  std::vector<int> node_instances_;
  std::vector<double> node_used_;
  std::vector<double> link_used_;
  std::vector<int> proc_type_inst_;
  std::vector<double> proc_delay_;  // response-time part per procedure
  std::vector<double> proc_prop_;   // propagation part per procedure
  double committed_capacity_ = 0.0;
  double delay_sum_ = 0.0;
  double prop_sum_ = 0.0;
  int capacity_breaches_ = 0;

  std::vector<double> suffix_traffic_;
  std::vector<double> suffix_min_delay_;
  std::vector<std::uint8_t> suffix_needs_type_;

  mutable std::vector<int> scratch_links_;
};

// ----------------------------------------------------------------------
// Greedy warm start
// ----------------------------------------------------------------------

// One pass over the canonical decisions: reuse the lowest-index compatible
// instance; otherwise activate a fresh instance on the node adding the
// least propagation delay, ties broken by lighter node load, then by node
// id. Never backtracks; absent when it dead-ends or the result fails the
// full declarative check.
inline std::optional<Placement> greedy_place(const ScenarioIndex& ix,
                                             const SolverConfig& config) {
  SearchState state(ix, config);
  std::vector<Candidate> cands;
  const int total = static_cast<int>(state.decisions().size());
  for (int d = 0; d < total; ++d) {
    state.current_candidates(cands);
    bool applied = false;
    for (const auto& c : cands) {
      if (c.fresh) break;
      if (state.feasible(c)) {
        state.apply(c);
        applied = true;
        break;
      }
    }
    if (applied) continue;
    int best = -1;
    double best_prop = 0.0;
    double best_load = 0.0;
    for (std::size_t k = 0; k < cands.size(); ++k) {
      if (!cands[k].fresh) continue;
      double prop = 0.0;
      if (!state.feasible(cands[k], &prop)) continue;
      const double load = state.node_used()[cands[k].node];
      if (best < 0 || prop < best_prop ||
          (prop == best_prop && load < best_load)) {
        best = static_cast<int>(k);
        best_prop = prop;
        best_load = load;
      }
    }
    if (best < 0) return std::nullopt;
    state.apply(cands[best]);
  }
  Placement pl = state.to_placement();
  if (!check_placement(ix, pl, config.toggles).ok()) return std::nullopt;
  return pl;
}

// ----------------------------------------------------------------------
// Branch and bound
// ----------------------------------------------------------------------

namespace detail {

class StopWatch {
 public:
  StopWatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

// Exact search. Accepts a leaf only on strict objective improvement over
// the best leaf so far, exactly as the brute-force walk does, so both
// solvers return the first leaf in canonical order attaining the minimum.
// The greedy warm start only tightens the pruning cutoff; its placement is
// reported only when the budget expires before any leaf matches it.
inline SolveReport solve(const ScenarioIndex& ix, const SolverConfig& config) {
  SolveReport report;
  report.solver = "branch-and-bound";
  detail::StopWatch clock;
  const double time_limit = config.time_limit_seconds;
  const std::uint64_t budget = config.effective_budget();
  const double inf = std::numeric_limits<double>::infinity();

  SearchState state(ix, config);

  std::optional<Placement> greedy_pl;
  double greedy_obj = inf;
  if (config.warm_start) {
    if (auto warm = greedy_place(ix, config)) {
      greedy_pl = std::move(*warm);
      greedy_obj = objective(ix, *greedy_pl, config.weights);
      report.incumbents.push_back(
          IncumbentRecord{clock.elapsed(), 0, greedy_obj});
    }
  }

  std::optional<Placement> best_leaf;
  double best_leaf_obj = inf;
  double cutoff = greedy_obj;  // min of greedy and accepted leaf objectives
  std::uint64_t nodes = 0;
  bool stopped = false;

  // Depth-first over the canonical tree; recursion depth is the number of
  // (procedure, chain type) decisions.
  auto dfs = [&](auto&& self) -> void {
    if (state.complete()) {
      Placement leaf = state.to_placement();
      const double obj = objective(ix, leaf, config.weights);
      if (obj < best_leaf_obj) {
        best_leaf_obj = obj;
        best_leaf = std::move(leaf);
        if (obj < cutoff) {
          cutoff = obj;
          report.incumbents.push_back(
              IncumbentRecord{clock.elapsed(), nodes, obj});
        }
      }
      return;
    }
    std::vector<Candidate> cands;
    state.current_candidates(cands);
    for (const auto& c : cands) {
      if (nodes >= budget) {
        stopped = true;
        return;
      }
      if ((nodes & 1023u) == 0 && clock.elapsed() >= time_limit) {
        stopped = true;
        return;
      }
      if (!state.feasible(c)) continue;
      state.apply(c);
      ++nodes;
      if (state.lower_bound() < cutoff + feas_tol(cutoff)) self(self);
      state.undo();
      if (stopped) return;
    }
  };
  dfs(dfs);

  report.nodes_explored = nodes;
  report.wall_seconds = clock.elapsed();
  if (best_leaf && best_leaf_obj <= greedy_obj) {
    report.placement = std::move(best_leaf);
    report.objective = best_leaf_obj;
  } else if (greedy_pl) {
    report.placement = std::move(greedy_pl);
    report.objective = greedy_obj;
  }
  if (report.placement) {
    report.proven_optimal = !stopped;
    report.status = stopped ? SolveStatus::feasible : SolveStatus::optimal;
  } else {
    report.status =
        stopped ? SolveStatus::no_incumbent : SolveStatus::infeasible;
  }
  return report;
}

// ----------------------------------------------------------------------
// Brute force
// ----------------------------------------------------------------------

// Exhaustive reference: walks the identical canonical tree with no
// screening and no bound, validates every complete assignment through the
// declarative checker, and keeps the first strict minimum. Refuses trees
// whose estimated leaf count exceeds the cap.
inline SolveReport solve_brute_force(const ScenarioIndex& ix,
                                     const SolverConfig& config) {
  SolveReport report;
  report.solver = "brute-force";
  detail::StopWatch clock;

  std::vector<SearchState::Decision> decisions;
  for (int p = 0; p < ix.num_procs(); ++p)
    for (const int t : ix.proc(p).chain_types)
      decisions.push_back(SearchState::Decision{p, t});

  // Static overestimate of the leaf count, in log space.
  {
    std::vector<int> prior(ix.num_types(), 0);
    double log_space = 0.0;
    for (const auto& dec : decisions) {
      const int budget = ix.type(dec.type).instance_budget;
      const int existing = std::min(prior[dec.type], budget);
      const int fresh_nodes = prior[dec.type] < budget ? ix.num_nodes() : 0;
      log_space += std::log(std::max(1, existing + fresh_nodes));
      ++prior[dec.type];
    }
    if (log_space > std::log(config.brute_force_cap)) {
      report.status = SolveStatus::space_too_large;
      report.wall_seconds = clock.elapsed();
      return report;
    }
  }

  std::vector<int> inst_node(ix.total_instances(), -1);
  std::vector<int> placed_count(ix.num_types(), 0);
  std::vector<int> node_instances(ix.num_nodes(), 0);
  std::vector<std::pair<SearchState::Decision, Candidate>> chosen;
  std::optional<Placement> best;
  double best_obj = std::numeric_limits<double>::infinity();
  std::uint64_t nodes = 0;

  auto enumerate = [&](auto&& self, std::size_t d) -> void {
    if (d == decisions.size()) {
      Placement pl(ix);
      for (const auto& [dec, c] : chosen)
        pl.assign(dec.proc, dec.type, c.instance,
                  inst_node[ix.instance_offset(dec.type) + c.instance]);
      try {
        pl.finalize_flows(ix);
      } catch (const std::logic_error&) {
        return;  // split step with no physical link
      }
      if (!check_placement(ix, pl, config.toggles).ok()) return;
      const double obj = objective(ix, pl, config.weights);
      if (obj < best_obj) {
        best_obj = obj;
        best = std::move(pl);
        report.incumbents.push_back(
            IncumbentRecord{clock.elapsed(), nodes, obj});
      }
      return;
    }
    const auto& dec = decisions[d];
    std::vector<Candidate> cands;
    detail::candidates_for(ix, inst_node, placed_count, node_instances,
                           dec.type, cands);
    for (const auto& c : cands) {
      const int g = ix.instance_offset(dec.type) + c.instance;
      if (c.fresh) {
        inst_node[g] = c.node;
        ++placed_count[dec.type];
        ++node_instances[c.node];
      }
      chosen.push_back({dec, c});
      ++nodes;
      self(self, d + 1);
      chosen.pop_back();
      if (c.fresh) {
        inst_node[g] = -1;
        --placed_count[dec.type];
        --node_instances[c.node];
      }
    }
  };
  enumerate(enumerate, 0);

  report.nodes_explored = nodes;
  report.wall_seconds = clock.elapsed();
  if (best) {
    report.placement = std::move(best);
    report.objective = best_obj;
    report.proven_optimal = true;
    report.status = SolveStatus::optimal;
  } else {
    report.status = SolveStatus::infeasible;
  }
  return report;
}

// Greedy as a standalone solver.
inline SolveReport solve_greedy(const ScenarioIndex& ix,
                                const SolverConfig& config) {
  SolveReport report;
  report.solver = "greedy";
  detail::StopWatch clock;
  if (auto pl = greedy_place(ix, config)) {
    report.placement = std::move(*pl);
    report.objective = objective(ix, *report.placement, config.weights);
    report.status = SolveStatus::feasible;
    report.incumbents.push_back(
        IncumbentRecord{clock.elapsed(), 0, report.objective});
  } else {
    report.status = SolveStatus::no_incumbent;
  }
  report.wall_seconds = clock.elapsed();
  return report;
}

// ----------------------------------------------------------------------
// Oracle comparison
// ----------------------------------------------------------------------

struct OracleCheckResult {
  bool match = false;
  std::string detail;
  SolveReport exact;
  SolveReport reference;
};

// Runs branch-and-bound against brute force on one scenario and demands
// agreement: same feasibility verdict, objectives within 1e-9 relative,
// identical tie-broken placements.
inline OracleCheckResult oracle_check(const ScenarioIndex& ix,
                                      const SolverConfig& config) {
  OracleCheckResult r;
  // Reference first: its space screen is static, so oversized instances
  // are refused before the exact solver burns its budget.
  r.reference = solve_brute_force(ix, config);
  if (r.reference.status == SolveStatus::space_too_large) {
    r.detail = "reference enumeration space too large";
    return r;
  }
  r.exact = solve(ix, config);
  if (r.exact.status == SolveStatus::infeasible &&
      r.reference.status == SolveStatus::infeasible) {
    r.match = true;
    return r;
  }
  if (!r.exact.placement || !r.reference.placement) {
    r.detail = std::string("feasibility disagreement: ") +
               to_string(r.exact.status) + " vs " +
               to_string(r.reference.status);
    return r;
  }
  const double scale = std::max(1.0, std::fabs(r.reference.objective));
  if (std::fabs(r.exact.objective - r.reference.objective) > 1e-9 * scale) {
    r.detail = "objective mismatch";
    return r;
  }
  if (!(*r.exact.placement == *r.reference.placement)) {
    r.detail = "tie-breaking mismatch";
    return r;
  }
  r.match = true;
  return r;
}

}  // namespace sliceguard

#endif  // SLICEGUARD_SOLVER_HPP
