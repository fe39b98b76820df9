// JSON views of analysis results. Field names are part of the report format.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "block_reduction.hpp"
#include "graph6.hpp"
#include "structural.hpp"

namespace cactusdim {

using json = nlohmann::ordered_json;

inline json edges_json(const Graph& g) {
  json out = json::array();
  for (const Edge& e : g.edges()) out.push_back({e.u, e.v});
  return out;
}

inline json witness_json(const GeneratorWitness& w) {
  return {{"mode", to_string(w.mode)}, {"size", w.size}, {"set", w.set}};
}

inline json item_json(const Graph& g, const Item& x) {
  if (!x.is_edge) return x.index;
  const Edge& e = g.edges()[x.index];
  return json::array({e.u, e.v});
}

inline json pairs_json(const Graph& g, const std::vector<ItemPair>& pairs) {
  json out = json::array();
  for (const auto& p : pairs) out.push_back({item_json(g, p.first), item_json(g, p.second)});
  return out;
}

inline json breakdown_json(const DimensionBreakdown& d) {
  json j;
  j["c"] = d.c;
  j["L"] = d.L;
  j["B"] = d.B;
  j["b"] = d.b;
  j["girth"] = d.girth;
  j["c_abc"] = d.c_abc;
  j["c_ade"] = d.c_ade;
  j["tau_vi"] = d.tau_vi;
  j["tau_ei"] = d.tau_ei;
  j["dim_formula"] = d.dim_formula;
  j["edim_formula"] = d.edim_formula;
  std::vector<int> abc, ade;
  for (int i = 0; i < d.c; ++i) {
    if (d.abc_positive[i]) abc.push_back(i);
    if (d.ade_positive[i]) ade.push_back(i);
  }
  j["abc_positive"] = abc;
  j["ade_positive"] = ade;
  j["nice_set_vertex"] = d.nice_set_vertex.set;
  j["nice_set_edge"] = d.nice_set_edge.set;
  j["g_vi"] = edges_json(d.g_vi);
  j["g_ei"] = edges_json(d.g_ei);
  j["cover_vi"] = d.cover_vi.set;
  j["cover_ei"] = d.cover_ei.set;
  j["diagnostics"] = d.diagnostics;
  return j;
}

/// Breakdown record for one cactus, with exact values and witnesses when available.
inline json breakdown_record(const Graph& g, const DimensionBreakdown& d, const GeneratorWitness* dim = nullptr,
                             const GeneratorWitness* edim = nullptr, const json& extremal = nullptr) {
  json j;
  j["graph6"] = encode_graph6(g);
  j["n"] = g.order();
  j["m"] = g.size();
  json parts = breakdown_json(d);
  for (auto& [k, v] : parts.items()) j[k] = v;
  j["dim_exact"] = dim ? json(dim->size) : json(nullptr);
  j["edim_exact"] = edim ? json(edim->size) : json(nullptr);
  j["extremal"] = extremal;
  json w = json::object();
  if (dim) w["dim"] = dim->set;
  if (edim) w["edim"] = edim->set;
  j["witnesses"] = w;
  return j;
}

inline json extremal_json(const ExtremalClassification& r) {
  return {{"c", r.c},
          {"L", r.L},
          {"leafless", r.leafless},
          {"is_daisy", r.is_daisy},
          {"has_odd_petal", r.has_odd_petal},
          {"end_cycles", r.end_cycles},
          {"nearly_bound", r.nearly_bound},
          {"predicted_dim_nearly", r.predicted_dim_nearly},
          {"predicted_edim_nearly", r.predicted_edim_nearly},
          {"predicted_edim_nearly_vertex_incidence", r.predicted_edim_nearly_vertex_incidence},
          {"predicted_leafless_dim_equal", r.predicted_leafless_dim_equal},
          {"predicted_leafless_edim_equal", r.predicted_leafless_edim_equal},
          {"dim_exact", r.dim_exact},
          {"edim_exact", r.edim_exact},
          {"dim_nearly", r.dim_nearly},
          {"edim_nearly", r.edim_nearly},
          {"findings", r.findings},
          {"notes", r.notes}};
}

inline json gamma_edges_json(const std::vector<std::pair<int, vertex_t>>& edges) {
  json out = json::array();
  for (auto [b, v] : edges) out.push_back({{"block", b}, {"v", v}});
  return out;
}

inline json certificate_json(const CompositionCertificate& c) {
  json j;
  j["mode"] = to_string(c.mode);
  j["blocks"] = c.block_vertices;
  j["block_index"] = c.blocks;
  j["per_block_dim"] = c.per_block_dim;
  j["per_block_set"] = c.per_block_set;
  j["p"] = c.p;
  j["q"] = c.q;
  j["S"] = c.s;
  j["S_prime"] = c.s_prime;
  j["S_star"] = c.s_star;
  j["bound"] = c.bound;
  j["achieved"] = c.achieved;
  j["verified"] = c.verified;
  j["gamma_edges"] = gamma_edges_json(c.gamma.edges);
  j["gamma_roots"] = c.gamma.roots;
  j["E_prime"] = gamma_edges_json(c.gamma.e_prime);
  json paths = json::array();
  for (const auto& p : c.v_paths) paths.push_back({{"block", p.block}, {"v", p.v}, {"path", p.vertices}, {"repair", p.repair}});
  j["v_paths"] = paths;
  return j;
}

inline json block_chain_json(const BlockChainRecord& r) {
  return {{"c", r.c},
          {"p", r.p},
          {"q", r.q},
          {"block_c", r.block_c},
          {"block_dim", r.block_dim},
          {"block_edim", r.block_edim},
          {"hypothesis_dim", r.hypothesis_dim},
          {"hypothesis_edim", r.hypothesis_edim},
          {"block_sum_bound_dim", r.block_sum_bound_dim},
          {"block_sum_bound_edim", r.block_sum_bound_edim},
          {"hypothesis_bound", r.hypothesis_bound},
          {"proof_expression", r.proof_expression},
          {"slack_dim", r.block_sum_bound_dim - r.dim},
          {"slack_edim", r.block_sum_bound_edim - r.edim},
          {"dim", r.dim},
          {"edim", r.edim},
          {"chain_dim", r.chain_dim},
          {"chain_edim", r.chain_edim},
          {"disjoint_blocks", r.disjoint_blocks},
          {"strictness_dim", r.strictness_dim},
          {"strictness_edim", r.strictness_edim},
          {"proof_expression_binds_dim", r.proof_expression_binds_dim},
          {"proof_expression_binds_edim", r.proof_expression_binds_edim}};
}

inline json delta3_json(const Delta3Record& r) {
  return {{"n_minus_1", r.n_minus_1}, {"two_c_minus_1", r.two_c_minus_1}, {"two_m", 2 * r.m},     {"three_n", 3 * r.n},
          {"chain_holds", r.chain_holds}, {"dim", r.dim},                   {"edim", r.edim},      {"strict", r.strict}};
}

}  // namespace cactusdim
