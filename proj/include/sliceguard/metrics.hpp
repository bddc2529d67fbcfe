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

/// \file metrics.hpp
/// \brief Experiment metrics over solved placements and their CSV/JSON
///        serialization.
///
/// Sharing is judged on (type, instance) pairs regardless of node, a
/// procedure never exposes itself, and pseudo instances never count: they
/// carry no capacity, so "sharing" one says nothing about attack surface.
/// All tables are emitted in a fixed sort order and all numbers through one
/// formatter, making byte-identical reruns the default rather than an
/// accident.

#ifndef SLICEGUARD_METRICS_HPP
#define SLICEGUARD_METRICS_HPP

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "sliceguard/core.hpp"
#include "sliceguard/model.hpp"

namespace sliceguard {

struct ExposureRow {
  double sweep_value = 0.0;
  int exposed_first_vnf = 0;
  int exposed_any_shared = 0;
  int activated_instances = 0;
  double objective = 0.0;
};

struct NodeCapacityRow {
  std::string node_id;
  double capacity_used = 0.0;
  double capacity_fraction = 0.0;
};

struct VnfNodeCapacityRow {
  std::string vnf_type;
  std::string node_id;
  double capacity_units = 0.0;
};

struct UtilizationRow {
  std::string vnf_type;
  int instance_index = 0;
  std::string node_id;
  double traffic_capacity = 0.0;
  double fraction = 0.0;
};

struct DelayRow {
  std::string procedure_kind;
  double mean_delay_seconds = 0.0;
};

struct TypeUtilization {
  std::string vnf_type;
  double mean_fraction = 0.0;
};

struct MetricsBundle {
  int exposed_procedures_first_vnf = 0;
  int exposed_procedures_any_shared = 0;
  int activated_instances = 0;
  std::vector<NodeCapacityRow> node_capacity;
  std::vector<VnfNodeCapacityRow> vnf_node_capacity;
  std::vector<UtilizationRow> utilization;
  std::vector<TypeUtilization> vnf_utilization;
  std::vector<DelayRow> procedure_delays;
  double objective = 0.0;
};

// ----------------------------------------------------------------------
// Metric computation
// ----------------------------------------------------------------------

// Exposure counts: how many non-external procedures share (a) an instance
// hosting some external procedure's first VNF, (b) any instance an
// external procedure runs on. Pseudo instances are skipped on both sides.
inline std::pair<int, int> exposure_metrics(const ScenarioIndex& ix,
                                            const Placement& pl) {
  std::set<std::pair<int, int>> first_instances;  // (type, instance)
  std::set<std::pair<int, int>> any_instances;
  for (int p = 0; p < ix.num_procs(); ++p) {
    const auto& pr = ix.proc(p);
    if (!pr.external) continue;
    for (const int t : pr.chain_types) {
      if (ix.type(t).pseudo) continue;
      for (int i = 0; i < ix.type(t).instance_budget; ++i) {
        bool mapped = false;
        for (int n = 0; n < ix.num_nodes() && !mapped; ++n)
          if (pl.get_gamma(n, t, i, p)) mapped = true;
        if (!mapped) continue;
        any_instances.insert({t, i});
        if (t == pr.first_vnf) first_instances.insert({t, i});
      }
    }
  }
  int first_count = 0;
  int any_count = 0;
  for (int q = 0; q < ix.num_procs(); ++q) {
    const auto& qr = ix.proc(q);
    if (qr.external) continue;
    bool hits_first = false;
    bool hits_any = false;
    for (const int t : qr.chain_types) {
      if (ix.type(t).pseudo) continue;
      for (int i = 0; i < ix.type(t).instance_budget; ++i) {
        bool mapped = false;
        for (int n = 0; n < ix.num_nodes() && !mapped; ++n)
          if (pl.get_gamma(n, t, i, q)) mapped = true;
        if (!mapped) continue;
        if (first_instances.count({t, i})) hits_first = true;
        if (any_instances.count({t, i})) hits_any = true;
      }
    }
    if (hits_first) ++first_count;
    if (hits_any) ++any_count;
  }
  return {first_count, any_count};
}

// Full bundle. Delay rows and the delay share of the objective cover only
// procedures that are completely mapped onto stable instances, so the
// function is total even on partial placements (an empty placement yields
// an all-zero bundle).
inline MetricsBundle compute_metrics(const ScenarioIndex& ix,
                                     const Placement& pl,
                                     const Weights& weights) {
  MetricsBundle out;
  const auto exposure = exposure_metrics(ix, pl);
  out.exposed_procedures_first_vnf = exposure.first;
  out.exposed_procedures_any_shared = exposure.second;

  // Activation and capacity tables.
  double capacity_sum = 0.0;
  std::vector<double> node_used(ix.num_nodes(), 0.0);
  struct InstanceInfo {
    int type = -1;
    int index = -1;
    int node = -1;
    double traffic = 0.0;
    double total = 0.0;
  };
  std::vector<InstanceInfo> active;
  for (int t = 0; t < ix.num_types(); ++t) {
    const auto& spec = ix.type(t);
    for (int i = 0; i < spec.instance_budget; ++i) {
      for (int n = 0; n < ix.num_nodes(); ++n) {
        if (!pl.get_beta(n, t, i)) continue;
        const double traffic = traffic_capacity(ix, pl, n, t, i);
        const double total = total_capacity(ix, pl, n, t, i);
        node_used[n] += total;
        capacity_sum += total;
        if (!spec.pseudo) {
          ++out.activated_instances;
          active.push_back(InstanceInfo{t, i, n, traffic, total});
        }
      }
    }
  }

  for (int n = 0; n < ix.num_nodes(); ++n) {
    NodeCapacityRow row;
    row.node_id = ix.node(n).id;
    row.capacity_used = node_used[n];
    row.capacity_fraction = ix.node(n).max_capacity > 0.0
                                ? node_used[n] / ix.node(n).max_capacity
                                : 0.0;
    out.node_capacity.push_back(std::move(row));
  }

  std::map<std::pair<std::string, std::string>, double> per_type_node;
  for (const auto& info : active)
    per_type_node[{ix.type(info.type).id, ix.node(info.node).id}] +=
        info.total;
  for (const auto& [key, units] : per_type_node)
    out.vnf_node_capacity.push_back(
        VnfNodeCapacityRow{key.first, key.second, units});

  std::sort(active.begin(), active.end(),
            [&](const InstanceInfo& a, const InstanceInfo& b) {
              const auto& ta = ix.type(a.type).id;
              const auto& tb = ix.type(b.type).id;
              if (ta != tb) return ta < tb;
              return a.index < b.index;
            });
  std::map<std::string, std::pair<double, int>> util_accum;
  for (const auto& info : active) {
    const auto& spec = ix.type(info.type);
    UtilizationRow row;
    row.vnf_type = spec.id;
    row.instance_index = info.index;
    row.node_id = ix.node(info.node).id;
    row.traffic_capacity = info.traffic;
    row.fraction =
        spec.max_capacity > 0.0 ? info.traffic / spec.max_capacity : 0.0;
    auto& acc = util_accum[spec.id];
    acc.first += row.fraction;
    acc.second += 1;
    out.utilization.push_back(std::move(row));
  }
  for (const auto& [type_id, acc] : util_accum)
    out.vnf_utilization.push_back(
        TypeUtilization{type_id, acc.first / acc.second});

  // Delays per procedure kind, averaged across slices.
  std::map<std::string, std::pair<double, int>> kind_accum;
  double delay_sum = 0.0;
  for (int p = 0; p < ix.num_procs(); ++p) {
    const auto& pr = ix.proc(p);
    bool computable = true;
    for (const int t : pr.chain_types) {
      const auto mapped = pl.mapped_instance(p, t);
      if (!mapped) {
        computable = false;
        break;
      }
      const auto& spec = ix.type(t);
      if (spec.pseudo) continue;
      const double load =
          instance_load(ix, pl, mapped->second, t, mapped->first);
      if (load > spec.service_rate - kStabilityMargin) {
        computable = false;
        break;
      }
    }
    if (!computable) continue;
    const double d = procedure_delay(ix, pl, p);
    delay_sum += d;
    auto& acc = kind_accum[pr.kind];
    acc.first += d;
    acc.second += 1;
  }
  for (const auto& [kind, acc] : kind_accum)
    out.procedure_delays.push_back(DelayRow{kind, acc.first / acc.second});

  out.objective =
      weights.capacity * capacity_sum + weights.delay * delay_sum;
  return out;
}

// One exposure table row for a single solve; the sweep value defaults to
// the scenario's external procedure count.
inline ExposureRow exposure_row(const ScenarioIndex& ix,
                                const MetricsBundle& bundle,
                                std::optional<double> sweep_value = {}) {
  ExposureRow row;
  if (sweep_value) {
    row.sweep_value = *sweep_value;
  } else {
    int externals = 0;
    for (int p = 0; p < ix.num_procs(); ++p)
      if (ix.proc(p).external) ++externals;
    row.sweep_value = externals;
  }
  row.exposed_first_vnf = bundle.exposed_procedures_first_vnf;
  row.exposed_any_shared = bundle.exposed_procedures_any_shared;
  row.activated_instances = bundle.activated_instances;
  row.objective = bundle.objective;
  return row;
}

// ----------------------------------------------------------------------
// Serialization
// ----------------------------------------------------------------------

// One formatter for every numeric cell keeps reruns byte-identical.
inline std::string format_number(double v) {
  if (v == 0.0) return "0";  // fold -0 into 0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::string(buf);
}

namespace detail {

inline std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (const char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

inline void write_text_file(const std::string& path,
                            const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << content;
  if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace detail

inline std::string exposure_csv(const std::vector<ExposureRow>& rows) {
  std::string s =
      "sweep_value,exposed_first_vnf,exposed_any_shared,"
      "activated_instances,objective\n";
  for (const auto& r : rows) {
    s += format_number(r.sweep_value) + ',' +
         std::to_string(r.exposed_first_vnf) + ',' +
         std::to_string(r.exposed_any_shared) + ',' +
         std::to_string(r.activated_instances) + ',' +
         format_number(r.objective) + '\n';
  }
  return s;
}

inline std::string capacity_csv(const std::vector<NodeCapacityRow>& rows) {
  std::string s = "node_id,capacity_used,capacity_fraction\n";
  for (const auto& r : rows)
    s += detail::csv_cell(r.node_id) + ',' + format_number(r.capacity_used) +
         ',' + format_number(r.capacity_fraction) + '\n';
  return s;
}

inline std::string vnf_capacity_csv(
    const std::vector<VnfNodeCapacityRow>& rows) {
  std::string s = "vnf_type,node_id,capacity_units\n";
  for (const auto& r : rows)
    s += detail::csv_cell(r.vnf_type) + ',' + detail::csv_cell(r.node_id) +
         ',' + format_number(r.capacity_units) + '\n';
  return s;
}

inline std::string utilization_csv(const std::vector<UtilizationRow>& rows) {
  std::string s =
      "vnf_type,instance_index,node_id,traffic_capacity,fraction\n";
  for (const auto& r : rows)
    s += detail::csv_cell(r.vnf_type) + ',' +
         std::to_string(r.instance_index) + ',' +
         detail::csv_cell(r.node_id) + ',' +
         format_number(r.traffic_capacity) + ',' +
         format_number(r.fraction) + '\n';
  return s;
}

inline std::string delays_csv(const std::vector<DelayRow>& rows) {
  std::string s = "procedure_kind,mean_delay_seconds\n";
  for (const auto& r : rows)
    s += detail::csv_cell(r.procedure_kind) + ',' +
         format_number(r.mean_delay_seconds) + '\n';
  return s;
}

// JSON mirrors: arrays of objects, field names identical to the CSV
// columns, in column order.
inline nlohmann::ordered_json exposure_json(
    const std::vector<ExposureRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows)
    arr.push_back({{"sweep_value", r.sweep_value},
                   {"exposed_first_vnf", r.exposed_first_vnf},
                   {"exposed_any_shared", r.exposed_any_shared},
                   {"activated_instances", r.activated_instances},
                   {"objective", r.objective}});
  return arr;
}

inline nlohmann::ordered_json capacity_json(
    const std::vector<NodeCapacityRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows)
    arr.push_back({{"node_id", r.node_id},
                   {"capacity_used", r.capacity_used},
                   {"capacity_fraction", r.capacity_fraction}});
  return arr;
}

inline nlohmann::ordered_json vnf_capacity_json(
    const std::vector<VnfNodeCapacityRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows)
    arr.push_back({{"vnf_type", r.vnf_type},
                   {"node_id", r.node_id},
                   {"capacity_units", r.capacity_units}});
  return arr;
}

inline nlohmann::ordered_json utilization_json(
    const std::vector<UtilizationRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows)
    arr.push_back({{"vnf_type", r.vnf_type},
                   {"instance_index", r.instance_index},
                   {"node_id", r.node_id},
                   {"traffic_capacity", r.traffic_capacity},
                   {"fraction", r.fraction}});
  return arr;
}

inline nlohmann::ordered_json delays_json(const std::vector<DelayRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows)
    arr.push_back({{"procedure_kind", r.procedure_kind},
                   {"mean_delay_seconds", r.mean_delay_seconds}});
  return arr;
}

// Writes the five tables (CSV plus JSON mirror) into a directory that must
// already exist.
inline void write_metrics_files(const std::string& dir,
                                const std::vector<ExposureRow>& exposure,
                                const MetricsBundle& bundle) {
  detail::write_text_file(dir + "/exposure.csv", exposure_csv(exposure));
  detail::write_text_file(dir + "/exposure.json",
                          exposure_json(exposure).dump(2) + "\n");
  detail::write_text_file(dir + "/capacity.csv",
                          capacity_csv(bundle.node_capacity));
  detail::write_text_file(dir + "/capacity.json",
                          capacity_json(bundle.node_capacity).dump(2) + "\n");
  detail::write_text_file(dir + "/vnf_capacity.csv",
                          vnf_capacity_csv(bundle.vnf_node_capacity));
  detail::write_text_file(
      dir + "/vnf_capacity.json",
      vnf_capacity_json(bundle.vnf_node_capacity).dump(2) + "\n");
  detail::write_text_file(dir + "/utilization.csv",
                          utilization_csv(bundle.utilization));
  detail::write_text_file(dir + "/utilization.json",
                          utilization_json(bundle.utilization).dump(2) + "\n");
  detail::write_text_file(dir + "/delays.csv",
                          delays_csv(bundle.procedure_delays));
  detail::write_text_file(
      dir + "/delays.json",
      delays_json(bundle.procedure_delays).dump(2) + "\n");
}

}  // namespace sliceguard

#endif  // SLICEGUARD_METRICS_HPP
