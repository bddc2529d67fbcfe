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

/// \file io.hpp
/// \brief JSON (de)serialization for scenarios, placements, and solve
///        reports.
///
/// A scenario file is one self-describing JSON document with sections
/// topology, catalog, slices, toggles, weights, seed. Placement files
/// store the explicit assignment, activation, flow, and exposure tables
/// using human-readable ids plus the feasibility verdict recorded at write
/// time, so a reloaded placement can be re-checked independently.

#ifndef SLICEGUARD_IO_HPP
#define SLICEGUARD_IO_HPP

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "sliceguard/core.hpp"
#include "sliceguard/model.hpp"
#include "sliceguard/solver.hpp"

namespace sliceguard {

using Json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline const Json* find_key(const Json& j, const char* key) {
  if (!j.is_object()) return nullptr;
  const auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

inline double get_number(const Json& j, const std::string& ctx,
                         const char* key, bool required,
                         double fallback = 0.0) {
  const Json* v = find_key(j, key);
  if (!v) {
    if (required) throw ParseError(ctx + "." + key + ": missing");
    return fallback;
  }
  if (!v->is_number()) throw ParseError(ctx + "." + key + ": not a number");
  return v->get<double>();
}

inline std::string get_string(const Json& j, const std::string& ctx,
                              const char* key) {
  const Json* v = find_key(j, key);
  if (!v) throw ParseError(ctx + "." + key + ": missing");
  if (!v->is_string()) throw ParseError(ctx + "." + key + ": not a string");
  return v->get<std::string>();
}

inline std::string get_string_or(const Json& j, const std::string& ctx,
                                 const char* key,
                                 const std::string& fallback) {
  const Json* v = find_key(j, key);
  if (!v) return fallback;
  if (!v->is_string()) throw ParseError(ctx + "." + key + ": not a string");
  return v->get<std::string>();
}

inline bool get_bool(const Json& j, const std::string& ctx, const char* key,
                     bool fallback) {
  const Json* v = find_key(j, key);
  if (!v) return fallback;
  if (!v->is_boolean()) throw ParseError(ctx + "." + key + ": not a boolean");
  return v->get<bool>();
}

inline const Json& get_array(const Json& j, const std::string& ctx,
                             const char* key) {
  const Json* v = find_key(j, key);
  if (!v) throw ParseError(ctx + "." + key + ": missing");
  if (!v->is_array()) throw ParseError(ctx + "." + key + ": not an array");
  return *v;
}

inline int get_int(const Json& j, const std::string& ctx, const char* key,
                   bool required, int fallback = 0) {
  const double d = get_number(j, ctx, key, required, fallback);
  const int i = static_cast<int>(d);
  if (static_cast<double>(i) != d)
    throw ParseError(ctx + "." + key + ": not an integer");
  return i;
}

}  // namespace detail

// ----------------------------------------------------------------------
// Scenario
// ----------------------------------------------------------------------

inline Json scenario_to_json(const Scenario& sc) {
  Json j;
  Json nodes = Json::array();
  for (const auto& n : sc.topology.nodes)
    nodes.push_back({{"id", n.id}, {"max_capacity", n.max_capacity}});
  Json links = Json::array();
  for (const auto& l : sc.topology.links)
    links.push_back({{"from", l.from},
                     {"to", l.to},
                     {"delay", l.delay},
                     {"bandwidth", l.bandwidth}});
  j["topology"] = {{"nodes", nodes}, {"links", links}};

  Json catalog = Json::array();
  for (const auto& v : sc.catalog)
    catalog.push_back({{"id", v.id},
                       {"base_capacity", v.base_capacity},
                       {"per_unit_capacity", v.per_unit_capacity},
                       {"service_rate", v.service_rate},
                       {"max_capacity", v.max_capacity},
                       {"max_traffic_capacity", v.max_traffic_capacity},
                       {"instance_budget", v.instance_budget},
                       {"pseudo", v.pseudo}});
  j["catalog"] = catalog;

  Json slices = Json::array();
  for (const auto& s : sc.slices) {
    Json procs = Json::array();
    for (const auto& p : s.procedures) {
      Json seq = Json::array();
      for (const auto& t : p.sequence) seq.push_back(t);
      procs.push_back({{"id", p.id},
                       {"kind", p.kind},
                       {"sequence", seq},
                       {"packet_rate", p.packet_rate},
                       {"max_delay", p.max_delay},
                       {"external", p.external}});
    }
    slices.push_back({{"id", s.id}, {"procedures", procs}});
  }
  j["slices"] = slices;

  j["toggles"] = {{"exposure", sc.toggles.exposure},
                  {"max_traffic", sc.toggles.max_traffic}};
  j["weights"] = {{"capacity", sc.weights.capacity},
                  {"delay", sc.weights.delay}};
  j["seed"] = sc.seed;
  return j;
}

inline Scenario scenario_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("scenario: not a JSON object");
  Scenario sc;

  const Json* topo = detail::find_key(j, "topology");
  if (!topo) throw ParseError("scenario.topology: missing");
  {
    const auto& nodes = detail::get_array(*topo, "topology", "nodes");
    int idx = 0;
    for (const auto& n : nodes) {
      const std::string ctx = "topology.nodes[" + std::to_string(idx++) + "]";
      PhysicalNode node;
      node.id = detail::get_string(n, ctx, "id");
      node.max_capacity = detail::get_number(n, ctx, "max_capacity", true);
      sc.topology.nodes.push_back(std::move(node));
    }
    const Json* links = detail::find_key(*topo, "links");
    if (links) {
      if (!links->is_array())
        throw ParseError("topology.links: not an array");
      int lidx = 0;
      for (const auto& l : *links) {
        const std::string ctx =
            "topology.links[" + std::to_string(lidx++) + "]";
        PhysicalLink link;
        link.from = detail::get_string(l, ctx, "from");
        link.to = detail::get_string(l, ctx, "to");
        link.delay = detail::get_number(l, ctx, "delay", true);
        link.bandwidth = detail::get_number(l, ctx, "bandwidth", true);
        sc.topology.links.push_back(std::move(link));
      }
    }
  }

  const auto& catalog = detail::get_array(j, "scenario", "catalog");
  {
    int idx = 0;
    for (const auto& v : catalog) {
      const std::string ctx = "catalog[" + std::to_string(idx++) + "]";
      VnfTypeSpec spec;
      spec.id = detail::get_string(v, ctx, "id");
      spec.pseudo = detail::get_bool(v, ctx, "pseudo", false);
      const VnfTypeSpec defaults;
      spec.base_capacity = detail::get_number(
          v, ctx, "base_capacity", false,
          spec.pseudo ? 0.0 : defaults.base_capacity);
      spec.per_unit_capacity = detail::get_number(
          v, ctx, "per_unit_capacity", false,
          spec.pseudo ? 0.0 : defaults.per_unit_capacity);
      spec.service_rate = detail::get_number(
          v, ctx, "service_rate", false,
          spec.pseudo ? 0.0 : defaults.service_rate);
      spec.max_capacity = detail::get_number(
          v, ctx, "max_capacity", false,
          spec.pseudo ? 0.0 : defaults.max_capacity);
      spec.max_traffic_capacity = detail::get_number(
          v, ctx, "max_traffic_capacity", false,
          spec.pseudo ? 0.0 : defaults.max_traffic_capacity);
      spec.instance_budget = detail::get_int(v, ctx, "instance_budget", false,
                                             defaults.instance_budget);
      sc.catalog.push_back(std::move(spec));
    }
  }

  const auto& slices = detail::get_array(j, "scenario", "slices");
  {
    int sidx = 0;
    for (const auto& s : slices) {
      const std::string sctx = "slices[" + std::to_string(sidx++) + "]";
      SliceRequest slice;
      slice.id = detail::get_string(s, sctx, "id");
      const auto& procs = detail::get_array(s, sctx, "procedures");
      int pidx = 0;
      for (const auto& p : procs) {
        const std::string pctx =
            sctx + ".procedures[" + std::to_string(pidx++) + "]";
        ProcedureSpec proc;
        proc.id = detail::get_string(p, pctx, "id");
        proc.kind = detail::get_string_or(p, pctx, "kind", proc.id);
        const auto& seq = detail::get_array(p, pctx, "sequence");
        for (const auto& t : seq) {
          if (!t.is_string())
            throw ParseError(pctx + ".sequence: entries must be strings");
          proc.sequence.push_back(t.get<std::string>());
        }
        const ProcedureSpec defaults;
        proc.packet_rate = detail::get_number(p, pctx, "packet_rate", false,
                                              defaults.packet_rate);
        proc.max_delay =
            detail::get_number(p, pctx, "max_delay", false,
                               defaults.max_delay);
        proc.external = detail::get_bool(p, pctx, "external", false);
        slice.procedures.push_back(std::move(proc));
      }
      sc.slices.push_back(std::move(slice));
    }
  }

  const Json* toggles = detail::find_key(j, "toggles");
  if (toggles) {
    sc.toggles.exposure =
        detail::get_bool(*toggles, "toggles", "exposure", true);
    sc.toggles.max_traffic =
        detail::get_bool(*toggles, "toggles", "max_traffic", true);
  }
  const Json* weights = detail::find_key(j, "weights");
  if (weights) {
    sc.weights.capacity =
        detail::get_number(*weights, "weights", "capacity", false, 1.0);
    sc.weights.delay =
        detail::get_number(*weights, "weights", "delay", false, 1.0);
  }
  const Json* seed = detail::find_key(j, "seed");
  if (seed) {
    if (!seed->is_number_integer() && !seed->is_number_unsigned())
      throw ParseError("scenario.seed: not an integer");
    sc.seed = seed->get<std::uint64_t>();
  }
  return sc;
}

inline Json parse_json_text(const std::string& text,
                            const std::string& what) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError(what + ": malformed JSON");
  return j;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline Scenario load_scenario_file(const std::string& path) {
  return scenario_from_json(parse_json_text(read_text_file(path), path));
}

// ----------------------------------------------------------------------
// Placement
// ----------------------------------------------------------------------

// Explicit tables keyed by ids. The feasibility verdict present at write
// time rides along so a reload can be audited against a fresh check.
inline Json placement_to_json(const ScenarioIndex& ix, const Placement& pl,
                              const Toggles& toggles) {
  Json j;
  Json assignments = Json::array();
  for (int p = 0; p < ix.num_procs(); ++p) {
    const auto& pr = ix.proc(p);
    for (int t = 0; t < ix.num_types(); ++t)
      for (int i = 0; i < ix.type(t).instance_budget; ++i)
        for (int n = 0; n < ix.num_nodes(); ++n)
          if (pl.get_gamma(n, t, i, p))
            assignments.push_back({{"slice", pr.slice_id},
                                   {"procedure", pr.id},
                                   {"vnf_type", ix.type(t).id},
                                   {"instance", i},
                                   {"node", ix.node(n).id}});
  }
  j["assignments"] = assignments;

  Json activations = Json::array();
  for (int t = 0; t < ix.num_types(); ++t)
    for (int i = 0; i < ix.type(t).instance_budget; ++i)
      for (int n = 0; n < ix.num_nodes(); ++n)
        if (pl.get_beta(n, t, i))
          activations.push_back({{"vnf_type", ix.type(t).id},
                                 {"instance", i},
                                 {"node", ix.node(n).id}});
  j["activations"] = activations;

  Json flows = Json::array();
  for (int p = 0; p < ix.num_procs(); ++p) {
    const auto& pr = ix.proc(p);
    for (std::size_t k = 0; k < pr.steps.size(); ++k)
      for (int l = 0; l < ix.num_links(); ++l)
        if (pl.get_chi(p, static_cast<int>(k), l))
          flows.push_back({{"slice", pr.slice_id},
                           {"procedure", pr.id},
                           {"step", static_cast<int>(k)},
                           {"from", ix.node(ix.link(l).from).id},
                           {"to", ix.node(ix.link(l).to).id}});
  }
  j["flows"] = flows;

  Json exposures = Json::array();
  for (int n = 0; n < ix.num_nodes(); ++n)
    for (int s = 0; s < ix.num_slices(); ++s)
      for (int t = 0; t < ix.num_types(); ++t)
        for (int i = 0; i < ix.type(t).instance_budget; ++i)
          if (pl.get_omega(n, s, t, i))
            exposures.push_back({{"node", ix.node(n).id},
                                 {"slice", ix.slice_id(s)},
                                 {"vnf_type", ix.type(t).id},
                                 {"instance", i}});
  j["exposures"] = exposures;

  const ConstraintReport feas = check_placement(ix, pl, toggles);
  j["feasible"] = feas.ok();
  j["violation_count"] = static_cast<int>(feas.violations.size());
  return j;
}

namespace detail {

inline int proc_index_by_ids(const ScenarioIndex& ix, const std::string& ctx,
                             const std::string& slice,
                             const std::string& proc) {
  for (int p = 0; p < ix.num_procs(); ++p)
    if (ix.proc(p).slice_id == slice && ix.proc(p).id == proc) return p;
  throw ParseError(ctx + ": unknown procedure " + slice + "/" + proc);
}

inline int type_index_checked(const ScenarioIndex& ix, const std::string& ctx,
                              const std::string& id) {
  const int t = ix.type_index(id);
  if (t < 0) throw ParseError(ctx + ": unknown vnf_type " + id);
  return t;
}

inline int node_index_checked(const ScenarioIndex& ix, const std::string& ctx,
                              const std::string& id) {
  const int n = ix.node_index(id);
  if (n < 0) throw ParseError(ctx + ": unknown node " + id);
  return n;
}

inline int instance_checked(const ScenarioIndex& ix, const std::string& ctx,
                            int t, int i) {
  if (i < 0 || i >= ix.type(t).instance_budget)
    throw ParseError(ctx + ": instance index out of range");
  return i;
}

}  // namespace detail

// Rebuilds the explicit tables exactly as stored; nothing is derived, so
// deliberately inconsistent files stay inconsistent for the checker.
inline Placement placement_from_json(const ScenarioIndex& ix, const Json& j) {
  if (!j.is_object()) throw ParseError("placement: not a JSON object");
  Placement pl(ix);

  int idx = 0;
  for (const auto& a : detail::get_array(j, "placement", "assignments")) {
    const std::string ctx = "assignments[" + std::to_string(idx++) + "]";
    const int p = detail::proc_index_by_ids(
        ix, ctx, detail::get_string(a, ctx, "slice"),
        detail::get_string(a, ctx, "procedure"));
    const int t = detail::type_index_checked(
        ix, ctx, detail::get_string(a, ctx, "vnf_type"));
    const int i = detail::instance_checked(
        ix, ctx, t, detail::get_int(a, ctx, "instance", true));
    const int n = detail::node_index_checked(
        ix, ctx, detail::get_string(a, ctx, "node"));
    pl.set_gamma(n, t, i, p, 1);
  }

  idx = 0;
  for (const auto& a : detail::get_array(j, "placement", "activations")) {
    const std::string ctx = "activations[" + std::to_string(idx++) + "]";
    const int t = detail::type_index_checked(
        ix, ctx, detail::get_string(a, ctx, "vnf_type"));
    const int i = detail::instance_checked(
        ix, ctx, t, detail::get_int(a, ctx, "instance", true));
    const int n = detail::node_index_checked(
        ix, ctx, detail::get_string(a, ctx, "node"));
    pl.set_beta(n, t, i, 1);
  }

  idx = 0;
  for (const auto& f : detail::get_array(j, "placement", "flows")) {
    const std::string ctx = "flows[" + std::to_string(idx++) + "]";
    const int p = detail::proc_index_by_ids(
        ix, ctx, detail::get_string(f, ctx, "slice"),
        detail::get_string(f, ctx, "procedure"));
    const int step = detail::get_int(f, ctx, "step", true);
    if (step < 0 || step >= static_cast<int>(ix.proc(p).steps.size()))
      throw ParseError(ctx + ": step index out of range");
    const int from = detail::node_index_checked(
        ix, ctx, detail::get_string(f, ctx, "from"));
    const int to = detail::node_index_checked(
        ix, ctx, detail::get_string(f, ctx, "to"));
    const int l = ix.link_between(from, to);
    if (l < 0) throw ParseError(ctx + ": no such physical link");
    pl.set_chi(p, step, l, 1);
  }

  idx = 0;
  for (const auto& e : detail::get_array(j, "placement", "exposures")) {
    const std::string ctx = "exposures[" + std::to_string(idx++) + "]";
    const int n = detail::node_index_checked(
        ix, ctx, detail::get_string(e, ctx, "node"));
    const std::string slice = detail::get_string(e, ctx, "slice");
    int s = -1;
    for (int k = 0; k < ix.num_slices(); ++k)
      if (ix.slice_id(k) == slice) s = k;
    if (s < 0) throw ParseError(ctx + ": unknown slice " + slice);
    const int t = detail::type_index_checked(
        ix, ctx, detail::get_string(e, ctx, "vnf_type"));
    const int i = detail::instance_checked(
        ix, ctx, t, detail::get_int(e, ctx, "instance", true));
    pl.set_omega(n, s, t, i, 1);
  }

  return pl;
}

// ----------------------------------------------------------------------
// Solve report
// ----------------------------------------------------------------------

inline Json report_to_json(const SolveReport& report) {
  Json j;
  j["status"] = to_string(report.status);
  j["solver"] = report.solver;
  j["objective"] = report.objective;
  j["proven_optimal"] = report.proven_optimal;
  j["nodes_explored"] = report.nodes_explored;
  j["wall_seconds"] = report.wall_seconds;
  Json hist = Json::array();
  for (const auto& rec : report.incumbents)
    hist.push_back({{"wall_seconds", rec.wall_seconds},
                    {"nodes", rec.nodes},
                    {"objective", rec.objective}});
  j["incumbents"] = hist;
  return j;
}

}  // namespace sliceguard

#endif  // SLICEGUARD_IO_HPP
