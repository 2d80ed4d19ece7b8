#include "domchrom/serialize.hpp"

#include <sstream>

namespace domchrom {
namespace {

Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }
Json optional_bool(const std::optional<bool>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json to_json(const VertexLabeling& labels) {
  Json out = Json::object();
  Json vertices = Json::object();
  for (const auto& [name, v] : labels.vertices) vertices[name] = v;
  Json sets = Json::object();
  for (const auto& [name, vs] : labels.sets) sets[name] = vs;
  out["vertices"] = std::move(vertices);
  out["sets"] = std::move(sets);
  return out;
}

Json to_json(const Coloring& c) {
  Json out = Json::array();
  for (VertexMask cls : c.classes) out.push_back(mask_to_vector(cls));
  return out;
}

Json to_json(const DominatingWitness& w) { return mask_to_vector(w.vertices); }

Json to_json(const InvariantReport& r, bool with_witnesses) {
  Json out;
  out["n"] = r.n;
  out["edge_count"] = r.edge_count;
  out["gamma"] = r.gamma;
  out["gamma_t"] = optional_int(r.gamma_t);
  out["chi"] = r.chi;
  out["chi_d"] = r.chi_d;
  out["chi_dom"] = optional_int(r.chi_dom);
  out["dk"] = optional_int(r.dk);
  out["graph6"] = r.graph6;
  if (with_witnesses) {
    Json w;
    w["gamma"] = to_json(r.gamma_witness);
    w["gamma_t"] = r.gamma_t_witness ? to_json(*r.gamma_t_witness) : Json(nullptr);
    w["chi"] = to_json(r.chi_witness);
    w["chi_d"] = to_json(r.chi_d_witness);
    w["chi_dom"] = r.chi_dom_witness ? to_json(*r.chi_dom_witness) : Json(nullptr);
    out["witnesses"] = std::move(w);
  }
  return out;
}

Json to_json(const PlanarityVerdict& v) {
  Json out;
  out["planar"] = v.planar;
  if (v.planar) {
    out["rotation"] = v.rotation;
  } else if (v.witness) {
    Json w;
    w["kind"] = to_string(v.witness->kind);
    w["branch_vertices"] = v.witness->branch_vertices;
    w["paths"] = v.witness->paths;
    out["kuratowski"] = std::move(w);
  }
  return out;
}

Json to_json(const ChainWitness& c) {
  Json out;
  out["classes"] = c.classes;
  out["vertices"] = c.vertices;
  return out;
}

Json to_json(const Theorem1Report& r) {
  Json out;
  out["k"] = r.k;
  out["colorings_checked"] = r.colorings_checked;
  out["all_classes_dominated"] = r.all_classes_dominated;
  out["every_vertex_dominates_exactly_one"] = r.every_vertex_dominates_exactly_one;
  out["failures_total"] = r.failures_total;
  Json cex = Json::array();
  for (const auto& f : r.counterexamples) {
    Json e;
    e["coloring"] = to_json(f.coloring);
    e["index"] = f.index;
    e["kind"] = to_string(f.kind);
    cex.push_back(std::move(e));
  }
  out["counterexamples"] = std::move(cex);
  out["min_dominated"] = r.min_dominated;
  out["max_dominated"] = r.max_dominated;
  out["own_singleton_only"] = r.own_singleton_only;
  return out;
}

Json to_json(const D3Blueprint& bp) {
  Json out;
  out["a"] = bp.a;
  out["b"] = bp.b;
  out["rule2_set"] = bp.rule2_set;
  out["rule3_set"] = bp.rule3_set;
  out["v1_to_v3"] = bp.v1_to_v3;
  out["v2_to_v3"] = bp.v2_to_v3;
  return out;
}

D3Blueprint blueprint_from_json(const Json& j) {
  D3Blueprint bp;
  bp.a = j.at("a").get<int>();
  bp.b = j.at("b").get<int>();
  bp.rule2_set = j.value("rule2_set", std::vector<int>{});
  bp.rule3_set = j.value("rule3_set", std::vector<int>{});
  bp.v1_to_v3 = j.value("v1_to_v3", std::vector<bool>{});
  bp.v2_to_v3 = j.value("v2_to_v3", std::vector<bool>{});
  return bp;
}

Json to_json(const D3Membership& m) {
  Json out;
  out["blueprint"] = to_json(m.blueprint);
  out["vertex_of"] = m.vertex_of;
  return out;
}

Json to_json(const BlueprintVerdict& v) {
  Json out;
  out["valid"] = v.valid;
  Json list = Json::array();
  for (const auto& viol : v.violations) {
    Json e;
    e["rule"] = viol.rule;
    e["message"] = viol.message;
    e["witness"] = viol.witness ? Json::array({viol.witness->first, viol.witness->second}) : Json(nullptr);
    list.push_back(std::move(e));
  }
  out["violations"] = std::move(list);
  return out;
}

Json to_json(const ScanRecord& r) {
  Json out;
  out["index"] = r.index;
  out["line"] = r.line;
  out["graph6"] = r.graph6;
  if (!r.parsed) {
    out["error"] = r.error.value_or("parse error");
    return out;
  }
  out["n"] = r.n;
  out["edge_count"] = r.edge_count;
  out["connected"] = r.connected;
  if (r.report) {
    out["gamma"] = r.report->gamma;
    out["gamma_t"] = optional_int(r.report->gamma_t);
    out["chi"] = r.report->chi;
    out["chi_d"] = r.report->chi_d;
    out["chi_dom"] = optional_int(r.report->chi_dom);
    out["dk"] = optional_int(r.report->dk);
  }
  if (r.complete_bipartite) out["complete_bipartite"] = *r.complete_bipartite;
  if (r.planar) out["planar"] = *r.planar;
  if (r.d3_member) out["d3_member"] = *r.d3_member;
  if (r.theorem1_holds) out["theorem1"] = *r.theorem1_holds;
  if (r.error) out["error"] = *r.error;
  return out;
}

Json to_json(const ScanSummary& s) {
  Json out;
  out["source"] = s.source;
  out["checks"] = s.checks;
  out["records"] = s.records;
  out["errors"] = s.errors;
  out["disconnected"] = s.disconnected;
  Json by_k = Json::array();
  for (const auto& [k, st] : s.by_k) {
    Json e;
    e["k"] = k;
    e["count"] = st.count;
    e["min_order"] = st.min_order;
    e["witness"] = st.witness;
    e["planar"] = st.planar;
    e["complete_bipartite"] = st.complete_bipartite;
    by_k.push_back(std::move(e));
  }
  out["by_k"] = std::move(by_k);
  out["complete"] = s.complete;
  return out;
}

ScanSummary summary_from_json(const Json& j) {
  ScanSummary s;
  s.source = j.at("source").get<std::string>();
  s.checks = j.at("checks").get<std::string>();
  s.records = j.at("records").get<std::size_t>();
  s.errors = j.at("errors").get<std::size_t>();
  s.disconnected = j.at("disconnected").get<std::size_t>();
  for (const auto& e : j.at("by_k")) {
    DkStats st;
    st.count = e.at("count").get<std::size_t>();
    st.min_order = e.at("min_order").get<int>();
    st.witness = e.at("witness").get<std::string>();
    st.planar = e.at("planar").get<std::size_t>();
    st.complete_bipartite = e.at("complete_bipartite").get<std::size_t>();
    s.by_k[e.at("k").get<int>()] = st;
  }
  s.complete = j.at("complete").get<bool>();
  return s;
}

Json to_json(const SurveyResult& s) {
  Json out;
  out["reading"] = "smallest order of any connected graph with gamma = chi = chi_d = k";
  out["k"] = s.k;
  out["n_max"] = s.n_max;
  out["min_order"] = optional_int(s.min_order);
  out["result"] = s.min_order ? "found" : "none <= " + std::to_string(s.n_max);
  out["witness"] = s.witness_graph6.empty() ? Json(nullptr) : Json(s.witness_graph6);
  out["witness_verified"] = s.witness_verified;
  out["witness_in_class_d3"] = optional_bool(s.witness_in_class_d3);
  out["partial"] = s.partial;
  out["orders_missing"] = s.orders_missing;
  Json counts = Json::object();
  for (const auto& [n, c] : s.graphs_per_order) counts[std::to_string(n)] = c;
  out["graphs_per_order"] = std::move(counts);
  return out;
}

std::string invariant_csv_header() { return "n,edge_count,gamma,gamma_t,chi,chi_d,chi_dom,dk,graph6"; }

std::string to_csv_row(const InvariantReport& r) {
  auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
  std::ostringstream out;
  out << r.n << ',' << r.edge_count << ',' << r.gamma << ',' << opt(r.gamma_t) << ',' << r.chi << ','
      << r.chi_d << ',' << opt(r.chi_dom) << ',' << opt(r.dk) << ',' << r.graph6;
  return out.str();
}

}  // namespace domchrom
