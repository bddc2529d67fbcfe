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

/// \file catalog.hpp
/// \brief Builtin 5G control-plane catalog, reference scenario, named
///        presets, and parameter sweeps.

#ifndef SLICEGUARD_CATALOG_HPP
#define SLICEGUARD_CATALOG_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sliceguard/core.hpp"

namespace sliceguard {

// ----------------------------------------------------------------------
// Seeded service-rate draws
// ----------------------------------------------------------------------

// 64-bit splittable generator; one value per step, full period 2^64.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // Uniform in [lo, hi).
  double next_range(double lo, double hi) {
    return lo + (hi - lo) * next_unit();
  }

 private:
  std::uint64_t state_;
};

// ----------------------------------------------------------------------
// Builtin catalog
// ----------------------------------------------------------------------

// Catalog declaration order is the service-rate draw order: one draw per
// non-pseudo entry, top to bottom. Reordering this list changes seeded
// scenarios, so it is append-only.
inline std::vector<VnfTypeSpec> builtin_catalog() {
  auto vnf = [](std::string id) {
    VnfTypeSpec t;
    t.id = std::move(id);
    t.base_capacity = 1.0;
    t.per_unit_capacity = 1.0;
    t.max_capacity = 10.0;
    t.max_traffic_capacity = 2.0;
    t.instance_budget = 4;
    t.pseudo = false;
    return t;
  };
  auto endpoint = [](std::string id) {
    VnfTypeSpec t;
    t.id = std::move(id);
    t.base_capacity = 0.0;
    t.per_unit_capacity = 0.0;
    t.service_rate = 0.0;
    t.max_capacity = 0.0;
    t.max_traffic_capacity = 0.0;
    t.instance_budget = 4;
    t.pseudo = true;
    return t;
  };
  return {
      vnf("AMF"),  vnf("NewAMF"), vnf("OldAMF"), vnf("InitialAMF"),
      vnf("TargetAMF"), vnf("SMF"), vnf("UPF"), vnf("UDM"), vnf("SDM"),
      vnf("AUSF"), vnf("SEAF"), vnf("ARPF"), vnf("PCF"), vnf("NRF"),
      vnf("NSSF"),
      endpoint("UE"), endpoint("RAN"), endpoint("SourceRAN"),
      endpoint("TargetRAN"),
  };
}

// ----------------------------------------------------------------------
// Builtin procedures
// ----------------------------------------------------------------------

inline const std::vector<std::string>& builtin_procedure_kinds() {
  static const std::vector<std::string> kinds = {
      "general-registration",
      "amf-reallocation",
      "handover",
      "authentication",
  };
  return kinds;
}

// Entity visit order of each control-plane procedure, verbatim. Leading
// endpoint entities are kept here; chain derivation strips them.
inline const std::vector<std::string>& builtin_procedure(
    const std::string& kind) {
  static const std::vector<std::string> general_registration = {
      "UE",  "RAN", "NewAMF", "OldAMF", "NewAMF", "AUSF", "UDM",
      "NewAMF", "UDM", "NewAMF", "SDM", "NewAMF", "SDM", "NewAMF",
      "PCF", "NewAMF", "SMF", "NewAMF", "UE", "NewAMF",
  };
  static const std::vector<std::string> amf_reallocation = {
      "RAN", "InitialAMF", "UDM", "InitialAMF", "NSSF", "InitialAMF",
      "OldAMF", "InitialAMF", "NRF", "InitialAMF", "RAN", "InitialAMF",
      "TargetAMF",
  };
  static const std::vector<std::string> handover = {
      "TargetRAN", "AMF", "SMF", "UPF", "SMF", "SourceRAN",
      "TargetRAN", "SMF", "AMF", "TargetRAN", "SourceRAN",
  };
  static const std::vector<std::string> authentication = {
      "ARPF", "UDM", "AUSF", "SEAF", "UE", "SEAF", "AUSF", "SEAF", "UE",
  };
  if (kind == "general-registration") return general_registration;
  if (kind == "amf-reallocation") return amf_reallocation;
  if (kind == "handover") return handover;
  if (kind == "authentication") return authentication;
  throw std::invalid_argument("unknown builtin procedure kind: " + kind);
}

// ----------------------------------------------------------------------
// Reference scenario
// ----------------------------------------------------------------------

// Three equal nodes in a full mesh, the builtin catalog with service rates
// drawn uniformly from [1000, 2000) packets/sec, and two slices: one
// running AMF re-allocation, the other general registration, both also
// running handover and authentication. Pure function of the seed.
inline Scenario build_paper_scenario(std::uint64_t seed) {
  Scenario sc;
  sc.seed = seed;

  for (int n = 1; n <= 3; ++n) {
    PhysicalNode node;
    node.id = "node-" + std::to_string(n);
    node.max_capacity = 30.0;
    sc.topology.nodes.push_back(node);
  }
  for (const auto& a : sc.topology.nodes) {
    for (const auto& b : sc.topology.nodes) {
      if (a.id == b.id) continue;
      PhysicalLink l;
      l.from = a.id;
      l.to = b.id;
      l.delay = 0.005;
      l.bandwidth = 40.0;
      sc.topology.links.push_back(l);
    }
  }

  sc.catalog = builtin_catalog();
  SplitMix64 rng(seed);
  for (auto& t : sc.catalog) {
    if (!t.pseudo) t.service_rate = rng.next_range(1000.0, 2000.0);
  }

  auto make_proc = [](std::string id, const std::string& kind) {
    ProcedureSpec p;
    p.id = std::move(id);
    p.kind = kind;
    p.sequence = builtin_procedure(kind);
    p.packet_rate = 1.0;
    p.max_delay = 1.0;
    p.external = false;
    return p;
  };
  SliceRequest s1;
  s1.id = "slice-1";
  s1.procedures.push_back(make_proc("p1-amf-reallocation", "amf-reallocation"));
  s1.procedures.push_back(make_proc("p2-handover", "handover"));
  s1.procedures.push_back(make_proc("p3-authentication", "authentication"));
  SliceRequest s2;
  s2.id = "slice-2";
  s2.procedures.push_back(
      make_proc("p1-general-registration", "general-registration"));
  s2.procedures.push_back(make_proc("p2-handover", "handover"));
  s2.procedures.push_back(make_proc("p3-authentication", "authentication"));
  sc.slices.push_back(std::move(s1));
  sc.slices.push_back(std::move(s2));

  sc.toggles.exposure = true;
  sc.toggles.max_traffic = true;
  sc.weights = Weights{};
  return sc;
}

// ----------------------------------------------------------------------
// Presets and sweeps
// ----------------------------------------------------------------------

inline const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {
      "paper-base",
      "paper-exposure-sweep",
      "paper-maxtraffic-sweep",
      "paper-nodecap",
  };
  return names;
}

// Marks the first `count` procedures, in (slice id, procedure id) order, as
// externally sourced; the rest become internal.
inline void mark_external_procedures(Scenario& sc, int count) {
  std::vector<std::pair<std::pair<std::string, std::string>, ProcedureSpec*>>
      order;
  for (auto& sl : sc.slices)
    for (auto& p : sl.procedures)
      order.push_back({{sl.id, p.id}, &p});
  std::sort(order.begin(), order.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t k = 0; k < order.size(); ++k)
    order[k].second->external = static_cast<int>(k) < count;
}

inline Scenario make_preset(const std::string& name, std::uint64_t seed) {
  Scenario sc = build_paper_scenario(seed);
  if (name == "paper-base" || name == "paper-nodecap") {
    // The node-capacity study configuration: both protections on, traffic
    // limit at its default, the AMF re-allocation procedure external.
    sc.toggles = Toggles{true, true};
    mark_external_procedures(sc, 1);
  } else if (name == "paper-exposure-sweep") {
    sc.toggles = Toggles{true, false};
    mark_external_procedures(sc, 0);
  } else if (name == "paper-maxtraffic-sweep") {
    sc.toggles = Toggles{false, true};
    mark_external_procedures(sc, 1);
  } else {
    throw std::invalid_argument("unknown preset: " + name);
  }
  return sc;
}

struct SweepSpec {
  enum class Variable { external_count, max_traffic_limit, time_limit };
  Variable variable = Variable::external_count;
  std::vector<double> values;
  std::optional<Toggles> toggles;  // applied to every variant when set
};

inline const char* to_string(SweepSpec::Variable v) {
  switch (v) {
    case SweepSpec::Variable::external_count: return "external_count";
    case SweepSpec::Variable::max_traffic_limit: return "max_traffic_limit";
    case SweepSpec::Variable::time_limit: return "time_limit";
  }
  return "unknown";
}

inline std::optional<SweepSpec::Variable> sweep_variable_from(
    const std::string& name) {
  if (name == "external_count") return SweepSpec::Variable::external_count;
  if (name == "max_traffic_limit")
    return SweepSpec::Variable::max_traffic_limit;
  if (name == "time_limit") return SweepSpec::Variable::time_limit;
  return std::nullopt;
}

struct ScenarioVariant {
  Scenario scenario;
  double sweep_value = 0.0;
  std::optional<double> time_limit;  // per-variant solver budget override
};

inline std::vector<ScenarioVariant> apply_sweep(const Scenario& base,
                                                const SweepSpec& sweep) {
  std::vector<ScenarioVariant> out;
  for (const double value : sweep.values) {
    ScenarioVariant v;
    v.scenario = base;
    v.sweep_value = value;
    if (sweep.toggles) v.scenario.toggles = *sweep.toggles;
    switch (sweep.variable) {
      case SweepSpec::Variable::external_count:
        mark_external_procedures(v.scenario,
                                 static_cast<int>(std::llround(value)));
        break;
      case SweepSpec::Variable::max_traffic_limit:
        for (auto& t : v.scenario.catalog) {
          if (t.pseudo) continue;
          t.max_traffic_capacity = std::min(value, t.max_capacity);
        }
        break;
      case SweepSpec::Variable::time_limit:
        v.time_limit = value;
        break;
    }
    out.push_back(std::move(v));
  }
  return out;
}

// The sweep each preset was named for; presets without a canonical sweep
// default to a single unmodified run.
inline SweepSpec default_sweep(const std::string& preset) {
  SweepSpec s;
  if (preset == "paper-exposure-sweep") {
    s.variable = SweepSpec::Variable::external_count;
    s.values = {0, 1, 2, 3, 4};
  } else if (preset == "paper-maxtraffic-sweep") {
    s.variable = SweepSpec::Variable::max_traffic_limit;
    s.values = {1, 2, 3, 4, 5};
  } else {
    s.variable = SweepSpec::Variable::external_count;
    s.values = {0};
    if (preset == "paper-base" || preset == "paper-nodecap") s.values = {1};
  }
  return s;
}

}  // namespace sliceguard

#endif  // SLICEGUARD_CATALOG_HPP
