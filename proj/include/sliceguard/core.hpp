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

/// \file core.hpp
/// \brief Domain model: physical substrate, VNF catalog, slice procedures,
///        derived virtual structure, scenario validation, and the placement
///        decision tables.

#ifndef SLICEGUARD_CORE_HPP
#define SLICEGUARD_CORE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sliceguard {

// -----------------------------------------------------------------------
// Scenario description
// -----------------------------------------------------------------------

struct PhysicalNode {
  std::string id;
  double max_capacity = 0.0;  // capacity units available on this node
};

// Links are directed; a symmetric topology lists both directions.
struct PhysicalLink {
  std::string from;
  std::string to;
  double delay = 0.0;      // propagation delay, seconds
  double bandwidth = 0.0;  // packets/sec the link can carry
};

struct Topology {
  std::vector<PhysicalNode> nodes;
  std::vector<PhysicalLink> links;
};

// A network-function type. Pseudo entries model endpoints (UE, RAN variants)
// that occupy a position in a procedure's control flow but consume no node
// capacity: pseudo implies base_capacity == 0 and per_unit_capacity == 0.
struct VnfTypeSpec {
  std::string id;
  double base_capacity = 1.0;         // units consumed by an active instance
  double per_unit_capacity = 1.0;     // units consumed per admitted traffic unit
  double service_rate = 0.0;          // packets/sec one instance can process
  double max_capacity = 10.0;         // cap on one instance's total capacity
  double max_traffic_capacity = 2.0;  // cap on one instance's admitted traffic
  int instance_budget = 4;            // instances available of this type
  bool pseudo = false;
};

struct ProcedureSpec {
  std::string id;
  std::string kind;                   // reporting bucket; empty means id
  std::vector<std::string> sequence;  // entity visit order, verbatim
  double packet_rate = 1.0;           // packets/sec this procedure generates
  double max_delay = 1.0;             // completion deadline, seconds
  bool external = false;              // sourced from outside the network
};

struct SliceRequest {
  std::string id;
  std::vector<ProcedureSpec> procedures;
};

struct Toggles {
  bool exposure = true;
  bool max_traffic = true;
};

struct Weights {
  double capacity = 1.0;
  double delay = 1.0;
};

struct Scenario {
  Topology topology;
  std::vector<VnfTypeSpec> catalog;
  std::vector<SliceRequest> slices;
  Toggles toggles;
  Weights weights;
  std::uint64_t seed = 0;
};

// -----------------------------------------------------------------------
// Virtual structure
// -----------------------------------------------------------------------

struct UnknownVnfError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised when stripping leaves no serving entity in a chain.
struct EmptyChainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VirtualStructure {
  std::vector<std::string> stripped_sequence;
  std::string first_vnf;                    // always a non-pseudo type
  std::map<std::string, int> traverse_count;
  // Consecutive visit pairs, in chain order. A repeated pair appears once
  // per occurrence; a same-type pair is an intra-instance transition and
  // produces no entry.
  std::vector<std::pair<std::string, std::string>> virtual_links;
};

// Leading pseudo entities carry no placement-relevant work before the first
// serving function and are dropped; interior pseudo entities stay, because
// the chain physically returns to them.
inline VirtualStructure derive_virtual_structure(
    const std::vector<VnfTypeSpec>& catalog,
    const std::vector<std::string>& sequence) {
  std::map<std::string, bool> pseudo;
  for (const auto& t : catalog) pseudo[t.id] = t.pseudo;
  for (const auto& name : sequence) {
    if (pseudo.find(name) == pseudo.end())
      throw UnknownVnfError("unknown vnf type in sequence: " + name);
  }
  std::size_t head = 0;
  while (head < sequence.size() && pseudo.at(sequence[head])) ++head;
  if (head == sequence.size())
    throw EmptyChainError("sequence contains no serving entity");

  VirtualStructure vs;
  vs.stripped_sequence.assign(sequence.begin() + head, sequence.end());
  vs.first_vnf = vs.stripped_sequence.front();
  for (const auto& name : vs.stripped_sequence) ++vs.traverse_count[name];
  for (std::size_t k = 0; k + 1 < vs.stripped_sequence.size(); ++k) {
    const auto& a = vs.stripped_sequence[k];
    const auto& b = vs.stripped_sequence[k + 1];
    if (a != b) vs.virtual_links.emplace_back(a, b);
  }
  return vs;
}

// -----------------------------------------------------------------------
// Validation
// -----------------------------------------------------------------------

enum class IssueCode {
  duplicate_id,
  bad_node,
  bad_link,
  bad_vnf_spec,
  unknown_vnf_type,
  bad_procedure,
  empty_chain,
  deadline_below_service_time,
};

struct ValidationIssue {
  IssueCode code;
  std::string subject;  // offending id or id path
  std::string message;
};

inline const char* to_string(IssueCode c) {
  switch (c) {
    case IssueCode::duplicate_id: return "duplicate-id";
    case IssueCode::bad_node: return "bad-node";
    case IssueCode::bad_link: return "bad-link";
    case IssueCode::bad_vnf_spec: return "bad-vnf-spec";
    case IssueCode::unknown_vnf_type: return "unknown-vnf-type";
    case IssueCode::bad_procedure: return "bad-procedure";
    case IssueCode::empty_chain: return "empty-chain";
    case IssueCode::deadline_below_service_time:
      return "deadline-below-service-time";
  }
  return "unknown";
}

inline std::vector<ValidationIssue> validate_scenario(const Scenario& sc) {
  std::vector<ValidationIssue> out;
  auto add = [&out](IssueCode c, std::string subject, std::string msg) {
    out.push_back(ValidationIssue{c, std::move(subject), std::move(msg)});
  };

  std::set<std::string> node_ids;
  for (const auto& n : sc.topology.nodes) {
    if (!node_ids.insert(n.id).second)
      add(IssueCode::duplicate_id, n.id, "duplicate node id");
    if (!(n.max_capacity > 0.0))
      add(IssueCode::bad_node, n.id, "node capacity must be positive");
  }
  std::set<std::pair<std::string, std::string>> link_pairs;
  for (const auto& l : sc.topology.links) {
    const std::string subject = l.from + "->" + l.to;
    if (node_ids.find(l.from) == node_ids.end() ||
        node_ids.find(l.to) == node_ids.end())
      add(IssueCode::bad_link, subject, "link endpoint is not a node");
    if (l.from == l.to) add(IssueCode::bad_link, subject, "self-loop link");
    if (!link_pairs.insert({l.from, l.to}).second)
      add(IssueCode::duplicate_id, subject, "duplicate link");
    if (l.delay < 0.0) add(IssueCode::bad_link, subject, "negative link delay");
    if (!(l.bandwidth > 0.0))
      add(IssueCode::bad_link, subject, "link bandwidth must be positive");
  }

  std::map<std::string, const VnfTypeSpec*> types;
  for (const auto& t : sc.catalog) {
    if (!types.emplace(t.id, &t).second)
      add(IssueCode::duplicate_id, t.id, "duplicate vnf type id");
    if (t.instance_budget < 1)
      add(IssueCode::bad_vnf_spec, t.id, "instance budget must be >= 1");
    if (t.base_capacity < 0.0 || t.per_unit_capacity < 0.0 ||
        t.max_capacity < 0.0)
      add(IssueCode::bad_vnf_spec, t.id, "capacities must be non-negative");
    if (t.max_traffic_capacity < 0.0 ||
        t.max_traffic_capacity > t.max_capacity)
      add(IssueCode::bad_vnf_spec, t.id,
          "max traffic capacity must lie in [0, max capacity]");
    if (t.pseudo) {
      if (t.base_capacity != 0.0 || t.per_unit_capacity != 0.0)
        add(IssueCode::bad_vnf_spec, t.id,
            "pseudo entity must have zero base and per-unit capacity");
    } else if (!(t.service_rate > 0.0)) {
      add(IssueCode::bad_vnf_spec, t.id, "service rate must be positive");
    }
  }

  std::set<std::string> slice_ids;
  for (const auto& sl : sc.slices) {
    if (!slice_ids.insert(sl.id).second)
      add(IssueCode::duplicate_id, sl.id, "duplicate slice id");
    std::set<std::string> proc_ids;
    for (const auto& p : sl.procedures) {
      const std::string subject = sl.id + "/" + p.id;
      if (!proc_ids.insert(p.id).second)
        add(IssueCode::duplicate_id, subject, "duplicate procedure id");
      if (!(p.packet_rate > 0.0))
        add(IssueCode::bad_procedure, subject, "packet rate must be positive");
      if (!(p.max_delay > 0.0))
        add(IssueCode::bad_procedure, subject, "max delay must be positive");
      if (p.sequence.empty()) {
        add(IssueCode::bad_procedure, subject, "empty sequence");
        continue;
      }
      bool resolvable = true;
      for (const auto& name : p.sequence) {
        if (types.find(name) == types.end()) {
          add(IssueCode::unknown_vnf_type, subject,
              "unknown vnf type: " + name);
          resolvable = false;
        }
      }
      if (!resolvable) continue;
      try {
        VirtualStructure vs = derive_virtual_structure(sc.catalog, p.sequence);
        for (const auto& [name, count] : vs.traverse_count) {
          (void)count;
          const VnfTypeSpec* t = types.at(name);
          if (!t->pseudo && t->service_rate > 0.0 &&
              p.max_delay <= 1.0 / t->service_rate)
            add(IssueCode::deadline_below_service_time, subject,
                "deadline cannot cover one visit to " + name);
        }
      } catch (const EmptyChainError&) {
        add(IssueCode::empty_chain, subject,
            "sequence strips to nothing: no serving entity");
      }
    }
  }
  return out;
}

// -----------------------------------------------------------------------
// Linearization constants
// -----------------------------------------------------------------------

// Smallest constants that dominate the respective indicator sums: any value
// strictly above the total procedure count works for both.
struct BigMConstants {
  double launch = 1.0;
  double exposure = 1.0;

  static BigMConstants for_scenario(const Scenario& sc) {
    std::size_t procs = 0;
    for (const auto& sl : sc.slices) procs += sl.procedures.size();
    BigMConstants big_m;
    big_m.launch = static_cast<double>(procs) + 1.0;
    big_m.exposure = static_cast<double>(procs) + 1.0;
    return big_m;
  }
};

// -----------------------------------------------------------------------
// Indexed view
// -----------------------------------------------------------------------

// Dense-index compilation of a validated scenario. Nodes, slices and
// procedures are ordered by id so every downstream iteration order is a
// function of scenario content, not of file entry order; types keep catalog
// order, which is also the documented service-rate draw order.
class ScenarioIndex {
 public:
  struct Link {
    int from = -1;
    int to = -1;
    double delay = 0.0;
    double bandwidth = 0.0;
  };

  struct Step {
    int a = -1;  // type index of the step's source visit
    int b = -1;  // type index of the step's destination visit
  };

  struct Proc {
    int slice = -1;
    std::string slice_id;
    std::string id;
    std::string kind;
    double packet_rate = 0.0;
    double max_delay = 0.0;
    bool external = false;
    VirtualStructure vs;
    std::vector<int> chain_types;  // distinct types, first-appearance order
    std::vector<int> traverses;    // per type index; 0 if not on the chain
    std::vector<Step> steps;
    int first_vnf = -1;
  };

  explicit ScenarioIndex(const Scenario& sc) : scenario_(&sc) {
    for (const auto& t : sc.catalog) {
      type_of_[t.id] = static_cast<int>(types_.size());
      types_.push_back(&t);
    }
    std::vector<const PhysicalNode*> nodes(sc.topology.nodes.size());
    for (std::size_t i = 0; i < sc.topology.nodes.size(); ++i)
      nodes[i] = &sc.topology.nodes[i];
    std::sort(nodes.begin(), nodes.end(),
              [](const PhysicalNode* a, const PhysicalNode* b) {
                return a->id < b->id;
              });
    nodes_ = std::move(nodes);
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      node_of_[nodes_[i]->id] = static_cast<int>(i);

    const int n = num_nodes();
    link_at_.assign(static_cast<std::size_t>(n) * n, -1);
    for (const auto& l : sc.topology.links) {
      Link lk;
      lk.from = node_of_.at(l.from);
      lk.to = node_of_.at(l.to);
      lk.delay = l.delay;
      lk.bandwidth = l.bandwidth;
      link_at_[static_cast<std::size_t>(lk.from) * n + lk.to] =
          static_cast<int>(links_.size());
      links_.push_back(lk);
    }

    std::vector<const SliceRequest*> slices(sc.slices.size());
    for (std::size_t i = 0; i < sc.slices.size(); ++i)
      slices[i] = &sc.slices[i];
    std::sort(slices.begin(), slices.end(),
              [](const SliceRequest* a, const SliceRequest* b) {
                return a->id < b->id;
              });
    for (std::size_t s = 0; s < slices.size(); ++s) {
      slice_ids_.push_back(slices[s]->id);
      std::vector<const ProcedureSpec*> procs(slices[s]->procedures.size());
      for (std::size_t i = 0; i < procs.size(); ++i)
        procs[i] = &slices[s]->procedures[i];
      std::sort(procs.begin(), procs.end(),
                [](const ProcedureSpec* a, const ProcedureSpec* b) {
                  return a->id < b->id;
                });
      for (const ProcedureSpec* spec : procs) {
        Proc p;
        p.slice = static_cast<int>(s);
        p.slice_id = slices[s]->id;
        p.id = spec->id;
        p.kind = spec->kind.empty() ? spec->id : spec->kind;
        p.packet_rate = spec->packet_rate;
        p.max_delay = spec->max_delay;
        p.external = spec->external;
        p.vs = derive_virtual_structure(sc.catalog, spec->sequence);
        p.first_vnf = type_of_.at(p.vs.first_vnf);
        p.traverses.assign(types_.size(), 0);
        for (const auto& name : p.vs.stripped_sequence) {
          const int t = type_of_.at(name);
          if (p.traverses[t] == 0) p.chain_types.push_back(t);
          ++p.traverses[t];
        }
        for (const auto& [a, b] : p.vs.virtual_links)
          p.steps.push_back(Step{type_of_.at(a), type_of_.at(b)});
        procs_.push_back(std::move(p));
      }
    }

    inst_off_.resize(types_.size());
    int off = 0;
    for (std::size_t t = 0; t < types_.size(); ++t) {
      inst_off_[t] = off;
      off += types_[t]->instance_budget;
    }
    total_instances_ = off;

    interchangeable_nodes_ = detect_interchangeable();
  }

  const Scenario& scenario() const { return *scenario_; }
  int num_types() const { return static_cast<int>(types_.size()); }
  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  int num_links() const { return static_cast<int>(links_.size()); }
  int num_procs() const { return static_cast<int>(procs_.size()); }
  int num_slices() const { return static_cast<int>(slice_ids_.size()); }

  const VnfTypeSpec& type(int t) const { return *types_[t]; }
  const PhysicalNode& node(int n) const { return *nodes_[n]; }
  const Link& link(int l) const { return links_[l]; }
  const Proc& proc(int p) const { return procs_[p]; }
  const std::string& slice_id(int s) const { return slice_ids_[s]; }

  int type_index(const std::string& id) const {
    auto it = type_of_.find(id);
    return it == type_of_.end() ? -1 : it->second;
  }
  int node_index(const std::string& id) const {
    auto it = node_of_.find(id);
    return it == node_of_.end() ? -1 : it->second;
  }
  // Directed link lookup; -1 when the nodes are not adjacent.
  int link_between(int from, int to) const {
    return link_at_[static_cast<std::size_t>(from) * num_nodes() + to];
  }

  // Flat instance indexing: instance (t, i) maps to instance_offset(t) + i.
  int instance_offset(int t) const { return inst_off_[t]; }
  int total_instances() const { return total_instances_; }

  // True when all nodes have equal capacity and every ordered pair is
  // connected with identical delay and bandwidth: unused nodes are then
  // mutually substitutable and the search may collapse them.
  bool interchangeable_nodes() const { return interchangeable_nodes_; }

 private:
  bool detect_interchangeable() const {
    const int n = num_nodes();
    if (n <= 1) return true;
    const double cap = nodes_[0]->max_capacity;
    for (const auto* nd : nodes_)
      if (nd->max_capacity != cap) return false;
    double delay = 0.0, bandwidth = 0.0;
    bool first = true;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (a == b) continue;
        const int l = link_between(a, b);
        if (l < 0) return false;
        if (first) {
          delay = links_[l].delay;
          bandwidth = links_[l].bandwidth;
          first = false;
        } else if (links_[l].delay != delay ||
                   links_[l].bandwidth != bandwidth) {
          return false;
        }
      }
    }
    return true;
  }

  const Scenario* scenario_;
  std::vector<const VnfTypeSpec*> types_;
  std::vector<const PhysicalNode*> nodes_;
  std::vector<Link> links_;
  std::vector<int> link_at_;
  std::vector<std::string> slice_ids_;
  std::vector<Proc> procs_;
  std::map<std::string, int> type_of_;
  std::map<std::string, int> node_of_;
  std::vector<int> inst_off_;
  int total_instances_ = 0;
  bool interchangeable_nodes_ = false;
};

// -----------------------------------------------------------------------
// Placement
// -----------------------------------------------------------------------

// Explicit decision tables. All four tables are stored raw so a checker can
// observe any inconsistency a hand-built or deserialized placement carries:
//   gamma  instance (t,i) at node n serves procedure p
//   beta   instance (t,i) is active at node n
//   chi    step k of procedure p, between its mapped instances, rides link l
//   omega  instance (t,i) at node n is exposed through slice s
class Placement {
 public:
  Placement() = default;

  explicit Placement(const ScenarioIndex& ix)
      : num_nodes_(ix.num_nodes()),
        num_procs_(ix.num_procs()),
        num_slices_(ix.num_slices()),
        num_links_(ix.num_links()) {
    budgets_.resize(ix.num_types());
    inst_off_.resize(ix.num_types());
    int off = 0;
    for (int t = 0; t < ix.num_types(); ++t) {
      budgets_[t] = ix.type(t).instance_budget;
      inst_off_[t] = off;
      off += budgets_[t];
    }
    total_instances_ = off;
    gamma.assign(static_cast<std::size_t>(off) * num_nodes_ * num_procs_, 0);
    beta.assign(static_cast<std::size_t>(off) * num_nodes_, 0);
    omega.assign(static_cast<std::size_t>(off) * num_nodes_ * num_slices_, 0);
    steps_per_proc_.resize(num_procs_);
    chi_off_.resize(num_procs_);
    std::size_t chi_total = 0;
    for (int p = 0; p < num_procs_; ++p) {
      steps_per_proc_[p] = static_cast<int>(ix.proc(p).steps.size());
      chi_off_[p] = chi_total;
      chi_total += static_cast<std::size_t>(steps_per_proc_[p]) * num_links_;
    }
    chi.assign(chi_total, 0);
  }

  int num_nodes() const { return num_nodes_; }
  int num_procs() const { return num_procs_; }
  int num_slices() const { return num_slices_; }
  int num_links() const { return num_links_; }
  int total_instances() const { return total_instances_; }
  int budget(int t) const { return budgets_[t]; }
  int num_types() const { return static_cast<int>(budgets_.size()); }
  int steps(int p) const { return steps_per_proc_[p]; }

  std::uint8_t get_gamma(int n, int t, int i, int p) const {
    return gamma[gamma_at(n, t, i, p)];
  }
  void set_gamma(int n, int t, int i, int p, bool v) {
    gamma[gamma_at(n, t, i, p)] = v ? 1 : 0;
  }
  std::uint8_t get_beta(int n, int t, int i) const {
    return beta[beta_at(n, t, i)];
  }
  void set_beta(int n, int t, int i, bool v) {
    beta[beta_at(n, t, i)] = v ? 1 : 0;
  }
  std::uint8_t get_omega(int n, int s, int t, int i) const {
    return omega[omega_at(n, s, t, i)];
  }
  void set_omega(int n, int s, int t, int i, bool v) {
    omega[omega_at(n, s, t, i)] = v ? 1 : 0;
  }
  std::uint8_t get_chi(int p, int step, int l) const {
    return chi[chi_at(p, step, l)];
  }
  void set_chi(int p, int step, int l, bool v) {
    chi[chi_at(p, step, l)] = v ? 1 : 0;
  }

  // Position of (n, s, t, i) inside an omega-shaped table.
  std::size_t omega_index(int n, int s, int t, int i) const {
    return omega_at(n, s, t, i);
  }

  // The instance serving (p, t), when the assignment rule holds for it.
  std::optional<std::pair<int, int>> mapped_instance(int p, int t) const {
    std::optional<std::pair<int, int>> found;  // (instance, node)
    for (int i = 0; i < budgets_[t]; ++i) {
      for (int n = 0; n < num_nodes_; ++n) {
        if (!get_gamma(n, t, i, p)) continue;
        if (found) return std::nullopt;  // mapped more than once
        found = std::make_pair(i, n);
      }
    }
    return found;
  }

  // Assigns procedure p's visits of type t to instance i at node n,
  // activating the instance.
  void assign(int p, int t, int i, int n) {
    set_gamma(n, t, i, p, true);
    set_beta(n, t, i, true);
  }

  // Rebuilds chi and omega from gamma for a placement whose every chain
  // type is mapped exactly once. Flow rule: a step between instances on
  // distinct nodes rides exactly the direct link; co-located steps ride
  // nothing. Requires adjacency for every split step.
  void finalize_flows(const ScenarioIndex& ix) {
    std::fill(chi.begin(), chi.end(), 0);
    std::fill(omega.begin(), omega.end(), 0);
    for (int p = 0; p < num_procs_; ++p) {
      const auto& pr = ix.proc(p);
      for (int k = 0; k < steps_per_proc_[p]; ++k) {
        const auto ma = mapped_instance(p, pr.steps[k].a);
        const auto mb = mapped_instance(p, pr.steps[k].b);
        if (!ma || !mb)
          throw std::logic_error("finalize_flows on a partial placement");
        if (ma->second == mb->second) continue;
        const int l = ix.link_between(ma->second, mb->second);
        if (l < 0)
          throw std::logic_error("finalize_flows: split step with no link");
        set_chi(p, k, l, true);
      }
      if (pr.external) {
        const auto mf = mapped_instance(p, pr.first_vnf);
        if (mf) set_omega(mf->second, pr.slice, pr.first_vnf, mf->first, true);
      }
    }
  }

  friend bool operator==(const Placement& a, const Placement& b) {
    return a.budgets_ == b.budgets_ && a.num_nodes_ == b.num_nodes_ &&
           a.num_procs_ == b.num_procs_ && a.num_slices_ == b.num_slices_ &&
           a.num_links_ == b.num_links_ && a.gamma == b.gamma &&
           a.beta == b.beta && a.chi == b.chi && a.omega == b.omega;
  }
  friend bool operator!=(const Placement& a, const Placement& b) {
    return !(a == b);
  }

  std::vector<std::uint8_t> gamma;
  std::vector<std::uint8_t> beta;
  std::vector<std::uint8_t> chi;
  std::vector<std::uint8_t> omega;

 private:
  std::size_t gamma_at(int n, int t, int i, int p) const {
    return (static_cast<std::size_t>(inst_off_[t] + i) * num_nodes_ + n) *
               num_procs_ +
           p;
  }
  std::size_t beta_at(int n, int t, int i) const {
    return static_cast<std::size_t>(inst_off_[t] + i) * num_nodes_ + n;
  }
  std::size_t omega_at(int n, int s, int t, int i) const {
    return (static_cast<std::size_t>(inst_off_[t] + i) * num_nodes_ + n) *
               num_slices_ +
           s;
  }
  std::size_t chi_at(int p, int step, int l) const {
    return chi_off_[p] + static_cast<std::size_t>(step) * num_links_ + l;
  }

  int num_nodes_ = 0;
  int num_procs_ = 0;
  int num_slices_ = 0;
  int num_links_ = 0;
  int total_instances_ = 0;
  std::vector<int> budgets_;
  std::vector<int> inst_off_;
  std::vector<int> steps_per_proc_;
  std::vector<std::size_t> chi_off_;
};

}  // namespace sliceguard

#endif  // SLICEGUARD_CORE_HPP
