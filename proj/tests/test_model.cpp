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

// Capacity, delay, and constraint checks against hand-computed values.
// Expected numbers were derived independently with exact rational
// arithmetic and are frozen here.

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "sliceguard/model.hpp"

using namespace sliceguard;
using Catch::Matchers::WithinAbs;

namespace {

// 1/1000 + 1/999: one visit to a rate-1000 instance carrying one packet/sec.
constexpr double kLoadedVisit = 0.002001001001001001;

Placement chain_placement(const ScenarioIndex& ix, int node_a, int node_b) {
  Placement pl(ix);
  pl.assign(0, ix.type_index("A"), 0, node_a);
  pl.assign(0, ix.type_index("B"), 0, node_b);
  pl.finalize_flows(ix);
  return pl;
}

}  // namespace

TEST_CASE("admitted load sums packet rates of served procedures") {
  auto sc = fixtures::two_node_chain();
  sc.slices[0].procedures.push_back(fixtures::proc("p2", {"A"}, 3.0));
  sc.slices[0].procedures[0].packet_rate = 2.0;
  const ScenarioIndex ix(sc);
  const int a = ix.type_index("A");

  Placement pl(ix);
  pl.assign(0, a, 0, 0);  // p1 (lambda 2)
  pl.assign(1, a, 0, 0);  // p2 (lambda 3)
  pl.assign(0, ix.type_index("B"), 0, 0);
  pl.finalize_flows(ix);

  CHECK_THAT(instance_load(ix, pl, 0, a, 0), WithinAbs(5.0, 0.0));
  CHECK_THAT(instance_load(ix, pl, 1, a, 0), WithinAbs(0.0, 0.0));
}

TEST_CASE("capacity charges traffic once per traverse, procedure traffic "
          "once per procedure") {
  auto sc = fixtures::two_node_chain();
  sc.slices[0].procedures[0].sequence = {"A", "B", "A"};
  const ScenarioIndex ix(sc);
  const int a = ix.type_index("A");

  const Placement pl = chain_placement(ix, 0, 0);
  CHECK_THAT(traffic_capacity(ix, pl, 0, a, 0), WithinAbs(2.0, 0.0));
  CHECK_THAT(procedure_traffic(ix, pl, 0, a, 0), WithinAbs(1.0, 0.0));
  CHECK_THAT(total_capacity(ix, pl, 0, a, 0), WithinAbs(3.0, 0.0));

  const int b = ix.type_index("B");
  CHECK_THAT(total_capacity(ix, pl, 0, b, 0), WithinAbs(2.0, 0.0));
  CHECK_THAT(total_capacity(ix, pl, 1, b, 0), WithinAbs(0.0, 0.0));
}

TEST_CASE("one visit to a loaded instance takes the processing share plus "
          "the queueing share") {
  const auto sc = fixtures::two_node_chain();
  const ScenarioIndex ix(sc);
  const Placement pl = chain_placement(ix, 0, 0);

  const int a = ix.type_index("A");
  CHECK_THAT(instance_delay(ix, pl, 0, a, 0), WithinAbs(kLoadedVisit, 1e-12));

  // An activated but unloaded instance still has its processing share.
  Placement idle(ix);
  idle.set_beta(1, a, 1, true);
  CHECK_THAT(instance_delay(ix, idle, 1, a, 1), WithinAbs(0.002, 1e-12));
}

TEST_CASE("endpoint entities respond instantly") {
  auto sc = fixtures::two_node_chain();
  sc.catalog.push_back(fixtures::endpoint_type("E"));
  sc.slices[0].procedures[0].sequence = {"A", "E", "B"};
  const ScenarioIndex ix(sc);
  Placement pl(ix);
  pl.assign(0, ix.type_index("A"), 0, 0);
  pl.assign(0, ix.type_index("E"), 0, 0);
  pl.assign(0, ix.type_index("B"), 0, 0);
  pl.finalize_flows(ix);
  CHECK_THAT(instance_delay(ix, pl, 0, ix.type_index("E"), 0),
             WithinAbs(0.0, 0.0));
  CHECK_THAT(procedure_delay(ix, pl, 0), WithinAbs(2 * kLoadedVisit, 1e-12));
}

TEST_CASE("saturated instances are rejected") {
  auto sc = fixtures::two_node_chain();
  sc.slices[0].procedures[0].packet_rate = 1000.0;
  sc.catalog[0].max_capacity = 2000.0;
  sc.catalog[0].max_traffic_capacity = 2000.0;
  const ScenarioIndex ix(sc);
  const Placement pl = chain_placement(ix, 0, 0);
  CHECK_THROWS_AS(instance_delay(ix, pl, 0, ix.type_index("A"), 0),
                  UnstableInstanceError);
}

TEST_CASE("procedure delay is per-traverse response plus per-hop "
          "propagation") {
  const auto sc = fixtures::two_node_chain();
  const ScenarioIndex ix(sc);

  const Placement together = chain_placement(ix, 0, 0);
  CHECK_THAT(procedure_delay(ix, together, 0),
             WithinAbs(0.004002002002002002, 1e-12));

  const Placement split = chain_placement(ix, 0, 1);
  CHECK_THAT(procedure_delay(ix, split, 0),
             WithinAbs(0.009002002002002002, 1e-12));
}

TEST_CASE("unmapped chain types make the delay undefined") {
  const auto sc = fixtures::two_node_chain();
  const ScenarioIndex ix(sc);
  Placement pl(ix);
  pl.assign(0, ix.type_index("A"), 0, 0);
  CHECK_THROWS_AS(procedure_delay(ix, pl, 0), UnmappedVnfError);
}

TEST_CASE("objective is the weighted capacity and delay total") {
  const auto sc = fixtures::single_vnf();
  const ScenarioIndex ix(sc);
  Placement pl(ix);
  pl.assign(0, 0, 0, 0);
  pl.finalize_flows(ix);

  CHECK_THAT(objective(ix, pl, Weights{1.0, 1.0}),
             WithinAbs(2.002001001001001, 1e-12));
  CHECK_THAT(objective(ix, pl, Weights{2.0, 0.5}),
             WithinAbs(4.0 + 0.5 * kLoadedVisit, 1e-12));

  const auto q = evaluate(ix, pl, Weights{1.0, 1.0});
  CHECK_THAT(q.capacity_total, WithinAbs(2.0, 0.0));
  CHECK_THAT(q.delay_total, WithinAbs(kLoadedVisit, 1e-12));
  CHECK_THAT(q.objective, WithinAbs(2.002001001001001, 1e-12));
  CHECK_THAT(q.node_used[0], WithinAbs(2.0, 0.0));
}

TEST_CASE("exposure table marks the first serving function of external "
          "procedures") {
  auto sc = fixtures::two_node_chain();
  sc.slices[0].procedures[0].external = true;
  const ScenarioIndex ix(sc);
  const Placement pl = chain_placement(ix, 0, 1);

  const auto omega = compute_exposure(ix, pl);
  CHECK(omega == pl.omega);
  CHECK(omega[pl.omega_index(0, 0, ix.type_index("A"), 0)] == 1);
  CHECK(omega[pl.omega_index(1, 0, ix.type_index("B"), 0)] == 0);
}

TEST_CASE("a consistent placement passes every check") {
  const auto sc = fixtures::two_node_chain();
  const ScenarioIndex ix(sc);
  const Placement pl = chain_placement(ix, 0, 0);
  const auto rep = check_placement(ix, pl, Toggles{true, true});
  CHECK(rep.ok());
}

TEST_CASE("each broken placement is flagged in its own family only") {
  for (const auto& c : fixtures::broken_cases()) {
    INFO(c.name);
    const ScenarioIndex ix(c.scenario);
    const auto rep = check_placement(ix, c.placement, c.toggles);
    CHECK(rep.count(c.family) == 1);
    CHECK(static_cast<int>(rep.violations.size()) == 1);
  }
}

TEST_CASE("protections report only when switched on") {
  auto sc = fixtures::two_node_chain();
  sc.slices[0].procedures[0].packet_rate = 3.0;  // past the traffic limit
  const ScenarioIndex ix(sc);
  const Placement pl = chain_placement(ix, 0, 0);

  CHECK(check_security(ix, pl, Toggles{false, false}).ok());
  // Both chain types carry 3 units against a limit of 2.
  CHECK(check_security(ix, pl, Toggles{false, true})
            .count(ConstraintFamily::traffic_limit) == 2);
}

TEST_CASE("one exposing slice per instance") {
  // Two slices, each with an external single-visit procedure on the same
  // instance: two exposing slices, one isolation violation.
  Scenario sc;
  sc.topology.nodes = {{"n1", 10.0}};
  sc.catalog = {fixtures::serving_type("A", 1000.0)};
  for (int s = 1; s <= 2; ++s) {
    SliceRequest sl;
    sl.id = "s" + std::to_string(s);
    auto p = fixtures::proc("p1", {"A"});
    p.external = true;
    sl.procedures.push_back(p);
    sc.slices.push_back(sl);
  }
  const ScenarioIndex ix(sc);
  Placement pl(ix);
  pl.assign(0, 0, 0, 0);
  pl.assign(1, 0, 0, 0);
  pl.finalize_flows(ix);

  const auto rep = check_security(ix, pl, Toggles{true, true});
  CHECK(rep.count(ConstraintFamily::exposure_isolation) == 1);

  // Separate instances satisfy isolation.
  Placement apart(ix);
  apart.assign(0, 0, 0, 0);
  apart.assign(1, 0, 1, 0);
  apart.finalize_flows(ix);
  CHECK(check_placement(ix, apart, Toggles{true, true}).ok());
}
