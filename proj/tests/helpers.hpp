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

// Shared scenario fixtures for the test suite.

#ifndef SLICEGUARD_TESTS_HELPERS_HPP
#define SLICEGUARD_TESTS_HELPERS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sliceguard/catalog.hpp"
#include "sliceguard/core.hpp"
#include "sliceguard/model.hpp"

namespace fixtures {

inline sliceguard::VnfTypeSpec serving_type(std::string id, double rate) {
  sliceguard::VnfTypeSpec t;
  t.id = std::move(id);
  t.service_rate = rate;
  return t;
}

inline sliceguard::VnfTypeSpec endpoint_type(std::string id) {
  sliceguard::VnfTypeSpec t;
  t.id = std::move(id);
  t.base_capacity = 0.0;
  t.per_unit_capacity = 0.0;
  t.service_rate = 0.0;
  t.max_capacity = 0.0;
  t.max_traffic_capacity = 0.0;
  t.pseudo = true;
  return t;
}

// Types A, B, C at 1000 packets/sec plus one endpoint entity E.
inline std::vector<sliceguard::VnfTypeSpec> mini_catalog() {
  return {serving_type("A", 1000.0), serving_type("B", 1000.0),
          serving_type("C", 1000.0), endpoint_type("E")};
}

inline sliceguard::ProcedureSpec proc(std::string id,
                                      std::vector<std::string> sequence,
                                      double packet_rate = 1.0,
                                      double max_delay = 1.0) {
  sliceguard::ProcedureSpec p;
  p.id = std::move(id);
  p.sequence = std::move(sequence);
  p.packet_rate = packet_rate;
  p.max_delay = max_delay;
  return p;
}

// One node of capacity 10, one type, one single-visit procedure. The only
// feasible shape activates exactly one instance.
inline sliceguard::Scenario single_vnf() {
  sliceguard::Scenario sc;
  sc.topology.nodes = {{"n1", 10.0}};
  sc.catalog = {serving_type("A", 1000.0)};
  sliceguard::SliceRequest sl;
  sl.id = "s1";
  sl.procedures.push_back(proc("p1", {"A"}));
  sc.slices.push_back(sl);
  return sc;
}

// Two equal nodes joined both ways (5 ms, 40 packets/sec), types A and B,
// one procedure visiting A then B.
inline sliceguard::Scenario two_node_chain() {
  sliceguard::Scenario sc;
  sc.topology.nodes = {{"n1", 10.0}, {"n2", 10.0}};
  sc.topology.links = {{"n1", "n2", 0.005, 40.0}, {"n2", "n1", 0.005, 40.0}};
  sc.catalog = {serving_type("A", 1000.0), serving_type("B", 1000.0)};
  sliceguard::SliceRequest sl;
  sl.id = "s1";
  sl.procedures.push_back(proc("p1", {"A", "B"}));
  sc.slices.push_back(sl);
  return sc;
}

// Random valid scenario small enough for exhaustive solving: at most two
// nodes, three serving types (sometimes plus an endpoint), two procedures.
// Toggles come from the low seed bits so a seed range covers all four
// combinations. Pure function of the seed.
inline sliceguard::Scenario random_tiny(std::uint64_t seed) {
  using namespace sliceguard;
  for (std::uint64_t attempt = 0;; ++attempt) {
    SplitMix64 rng(seed * 0x100000001B3ULL + attempt);
    Scenario sc;
    sc.seed = seed;

    const int num_nodes = 1 + static_cast<int>(rng.next() % 2);
    for (int n = 0; n < num_nodes; ++n) {
      PhysicalNode node;
      node.id = "n" + std::to_string(n + 1);
      node.max_capacity = rng.next_range(5.0, 12.0);
      sc.topology.nodes.push_back(node);
    }
    for (int a = 0; a < num_nodes; ++a) {
      for (int b = 0; b < num_nodes; ++b) {
        if (a == b) continue;
        PhysicalLink l;
        l.from = sc.topology.nodes[a].id;
        l.to = sc.topology.nodes[b].id;
        l.delay = rng.next_range(0.001, 0.008);
        l.bandwidth = rng.next_range(1.5, 8.0);
        sc.topology.links.push_back(l);
      }
    }

    const int num_types = 1 + static_cast<int>(rng.next() % 3);
    std::vector<std::string> names;
    for (int t = 0; t < num_types; ++t) {
      VnfTypeSpec spec = serving_type(std::string(1, char('A' + t)),
                                      rng.next_range(500.0, 2000.0));
      spec.max_capacity = rng.next_range(4.0, 10.0);
      spec.max_traffic_capacity = rng.next_range(1.0, 3.0);
      spec.instance_budget = 1 + static_cast<int>(rng.next() % 3);
      sc.catalog.push_back(spec);
      names.push_back(spec.id);
    }
    const bool with_endpoint = rng.next() % 2 == 0;
    if (with_endpoint) {
      sc.catalog.push_back(endpoint_type("E"));
      names.push_back("E");
    }

    const int num_procs = 1 + static_cast<int>(rng.next() % 2);
    SliceRequest sl;
    sl.id = "s1";
    for (int p = 0; p < num_procs; ++p) {
      const int len = 1 + static_cast<int>(rng.next() % 4);
      std::vector<std::string> seq;
      for (int k = 0; k < len; ++k)
        seq.push_back(names[rng.next() % names.size()]);
      // Guarantee a serving entity somewhere in the chain.
      seq[rng.next() % seq.size()] = names[rng.next() % num_types];
      ProcedureSpec ps = proc("p" + std::to_string(p + 1), seq,
                              rng.next_range(0.5, 2.0),
                              rng.next() % 4 == 0 ? 0.02 : 1.0);
      ps.external = rng.next() % 2 == 0;
      sl.procedures.push_back(ps);
    }
    sc.slices.push_back(sl);

    sc.toggles.exposure = (seed & 1) != 0;
    sc.toggles.max_traffic = (seed & 2) != 0;
    if (validate_scenario(sc).empty()) return sc;
  }
}

// One deliberately broken placement per constraint family. Each must be
// reported in its own family exactly once and nowhere else.
struct BrokenCase {
  std::string name;
  sliceguard::ConstraintFamily family;
  sliceguard::Scenario scenario;
  sliceguard::Placement placement;
  sliceguard::Toggles toggles{true, true};
};

inline std::vector<BrokenCase> broken_cases() {
  using namespace sliceguard;
  std::vector<BrokenCase> out;

  const auto chain_on = [](const ScenarioIndex& ix, int node_a, int node_b) {
    Placement pl(ix);
    pl.assign(0, ix.type_index("A"), 0, node_a);
    pl.assign(0, ix.type_index("B"), 0, node_b);
    pl.finalize_flows(ix);
    return pl;
  };

  {
    BrokenCase c;
    c.name = "unserved chain type";
    c.family = ConstraintFamily::assignment_coverage;
    c.scenario = two_node_chain();
    ScenarioIndex ix(c.scenario);
    Placement pl(ix);
    pl.assign(0, ix.type_index("A"), 0, 0);  // B never mapped
    c.placement = pl;
    out.push_back(c);
  }
  {
    BrokenCase c;
    c.name = "serving without activation";
    c.family = ConstraintFamily::launch_before_serve;
    c.scenario = two_node_chain();
    ScenarioIndex ix(c.scenario);
    Placement pl = chain_on(ix, 0, 0);
    pl.set_beta(0, ix.type_index("B"), 0, false);
    c.placement = pl;
    out.push_back(c);
  }
  {
    BrokenCase c;
    c.name = "active instance serving nothing";
    c.family = ConstraintFamily::no_idle_instance;
    c.scenario = two_node_chain();
    ScenarioIndex ix(c.scenario);
    Placement pl = chain_on(ix, 0, 0);
    pl.set_beta(1, ix.type_index("A"), 1, true);
    c.placement = pl;
    out.push_back(c);
  }
  {
    BrokenCase c;
    c.name = "instance active on two nodes";
    c.family = ConstraintFamily::single_node_instance;
    c.scenario = two_node_chain();
    c.scenario.slices[0].procedures.push_back(proc("p2", {"A", "B"}));
    ScenarioIndex ix(c.scenario);
    Placement pl(ix);
    const int a = ix.type_index("A");
    const int b = ix.type_index("B");
    pl.assign(0, a, 0, 0);
    pl.assign(0, b, 0, 0);
    pl.assign(1, a, 0, 1);  // same A instance, other node
    pl.assign(1, b, 0, 0);
    pl.finalize_flows(ix);
    c.placement = pl;
    out.push_back(c);
  }
  {
    BrokenCase c;
    c.name = "instance above its capacity limit";
    c.family = ConstraintFamily::instance_capacity;
    c.scenario = two_node_chain();
    c.scenario.catalog[0].max_capacity = 1.5;  // base 1 + traffic 1 = 2
    c.scenario.catalog[0].max_traffic_capacity = 1.5;
    c.scenario.topology.nodes[0].max_capacity = 100.0;
    ScenarioIndex ix(c.scenario);
    c.placement = chain_on(ix, 0, 0);
    out.push_back(c);
  }
  {
    BrokenCase c;
    c.name = "node above its capacity";
    c.family = ConstraintFamily::node_capacity;
    c.scenario = two_node_chain();
    c.scenario.topology.nodes[0].max_capacity = 3.0;  // needs 4
    ScenarioIndex ix(c.scenario);
    c.placement = chain_on(ix, 0, 0);
    out.push_back(c);
  }
  {
    BrokenCase c;
    c.name = "split step not riding the direct link";
    c.family = ConstraintFamily::flow_consistency;
    c.scenario = two_node_chain();
    ScenarioIndex ix(c.scenario);
    Placement pl = chain_on(ix, 0, 1);
    pl.set_chi(0, 0, ix.link_between(0, 1), false);  // drop the hop
    c.placement = pl;
    out.push_back(c);
  }
  {
    BrokenCase c;
    c.name = "link carrying more than its bandwidth";
    c.family = ConstraintFamily::link_bandwidth;
    c.scenario = two_node_chain();
    c.scenario.topology.links[0].bandwidth = 0.5;
    c.scenario.topology.links[1].bandwidth = 0.5;
    c.scenario.slices[0].procedures[0].packet_rate = 1.0;
    ScenarioIndex ix(c.scenario);
    c.placement = chain_on(ix, 0, 1);
    out.push_back(c);
  }
  {
    BrokenCase c;
    c.name = "procedure past its deadline";
    c.family = ConstraintFamily::deadline;
    c.scenario = two_node_chain();
    c.scenario.slices[0].procedures[0].max_delay = 0.005;  // split needs 9ms
    ScenarioIndex ix(c.scenario);
    c.placement = chain_on(ix, 0, 1);
    out.push_back(c);
  }
  {
    BrokenCase c;
    c.name = "instance past its admitted-traffic limit";
    c.family = ConstraintFamily::traffic_limit;
    c.scenario = two_node_chain();
    c.scenario.slices[0].procedures[0].packet_rate = 3.0;  // limit 2 on A
    c.scenario.catalog[1].max_traffic_capacity = 10.0;
    ScenarioIndex ix(c.scenario);
    c.placement = chain_on(ix, 0, 0);
    out.push_back(c);
  }
  {
    BrokenCase c;
    c.name = "omega disagreeing with its definition";
    c.family = ConstraintFamily::exposure_definition;
    c.scenario = two_node_chain();
    c.scenario.slices[0].procedures[0].external = true;
    ScenarioIndex ix(c.scenario);
    Placement pl = chain_on(ix, 0, 0);
    // The entry point must be recorded exposed; clearing the mark breaks
    // the definition without creating any sharing.
    pl.set_omega(0, 0, ix.type_index("A"), 0, false);
    c.placement = pl;
    out.push_back(c);
  }
  {
    BrokenCase c;
    c.name = "internal procedure riding an exposed instance";
    c.family = ConstraintFamily::exposure_isolation;
    c.scenario = two_node_chain();
    c.scenario.slices[0].procedures[0].external = true;
    c.scenario.slices[0].procedures.push_back(proc("p2", {"A"}));
    ScenarioIndex ix(c.scenario);
    Placement pl(ix);
    const int a = ix.type_index("A");
    pl.assign(0, a, 0, 0);
    pl.assign(0, ix.type_index("B"), 0, 0);
    pl.assign(1, a, 0, 0);  // internal p2 shares the exposed instance
    pl.finalize_flows(ix);
    c.placement = pl;
    out.push_back(c);
  }
  {
    BrokenCase c;
    c.name = "instance loaded past its service rate";
    c.family = ConstraintFamily::stability;
    c.scenario = two_node_chain();
    c.scenario.slices[0].procedures[0].packet_rate = 1000.0;
    c.scenario.catalog[0].max_capacity = 4000.0;
    c.scenario.catalog[0].max_traffic_capacity = 4000.0;
    c.scenario.catalog[1].max_capacity = 4000.0;
    c.scenario.catalog[1].max_traffic_capacity = 4000.0;
    c.scenario.catalog[1].service_rate = 5000.0;
    c.scenario.topology.nodes[0].max_capacity = 5000.0;
    c.scenario.topology.links[0].bandwidth = 5000.0;
    c.scenario.topology.links[1].bandwidth = 5000.0;
    ScenarioIndex ix(c.scenario);
    c.placement = chain_on(ix, 0, 0);  // A saturates at rate 1000
    out.push_back(c);
  }

  return out;
}

}  // namespace fixtures

#endif  // SLICEGUARD_TESTS_HELPERS_HPP
