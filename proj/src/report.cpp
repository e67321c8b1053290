#include "lefkit/report.hpp"

namespace lefkit {

Json to_json(const Rational& q) { return q.get_str(); }

Json to_json(const HilbertSeries& h) {
  Json j;
  j["offset"] = h.offset();
  j["coeffs"] = h.coeffs();
  return j;
}

Json to_json(const LinearForm& g, const VariableSet& vars) {
  return print_polynomial(g.to_polynomial(), vars);
}

Json to_json(const LefschetzStats& s) {
  Json j;
  j["sperner"] = s.sperner;
  j["cosperner"] = s.cosperner;
  if (s.sperner_vector) {
    j["sperner_vector"] = *s.sperner_vector;
  } else {
    j["sperner_vector"] = nullptr;
    j["sperner_vector_note"] = s.sperner_vector_note;
  }
  return j;
}

Json to_json(const LefschetzVerdict& v, const VariableSet& vars) {
  Json j;
  j["property"] = to_string(v.property);
  j["status"] = to_string(v.status);
  if (v.witness) j["witness"] = to_json(*v.witness, vars);
  if (v.certificate) {
    Json c;
    c["kind"] = v.certificate->kind;
    c["degree"] = v.certificate->degree;
    if (!v.certificate->socle_element.empty()) {
      Json coords = Json::array();
      for (const auto& q : v.certificate->socle_element) coords.push_back(to_json(q));
      c["socle_element"] = coords;
    }
    c["detail"] = v.certificate->detail;
    j["certificate"] = c;
  }
  j["trials"] = v.trials;
  if (!v.per_degree.empty()) {
    Json checks = Json::array();
    for (const auto& d : v.per_degree) {
      Json e;
      e["from_degree"] = d.from_degree;
      e["power"] = d.power;
      e["dim_from"] = d.dim_from;
      e["dim_to"] = d.dim_to;
      e["rank"] = d.rank;
      e["ok"] = d.ok;
      checks.push_back(e);
    }
    j["per_degree"] = checks;
  }
  j["cross_check_ok"] = v.cross_check_ok;
  return j;
}

Json to_json(const JordanProfile& p) {
  Json blocks = Json::array();
  for (const auto& b : p.blocks) blocks.push_back(Json::array({b.size, b.multiplicity}));
  Json j;
  j["blocks"] = blocks;
  j["block_count"] = p.block_count();
  j["nilpotency_index"] = p.nilpotency_index();
  j["rank_sequence"] = p.rank_sequence;
  return j;
}

Json to_json(const CSMDecomposition& d, const VariableSet& vars) {
  Json j;
  j["z"] = to_json(d.z, vars);
  j["profile"] = to_json(d.profile);
  Json mods = Json::array();
  for (const auto& m : d.modules) {
    Json e;
    e["block_size"] = m.block_size;
    e["multiplicity"] = m.multiplicity;
    e["hilbert"] = to_json(m.u.hilbert);
    e["hilbert_extended"] = to_json(m.h_tilde);
    mods.push_back(e);
  }
  j["modules"] = mods;
  return j;
}

Json to_json(const CsmStructureReport& r, const VariableSet& vars) {
  Json j;
  j["decomposition"] = to_json(r.decomposition, vars);
  j["product_formula_ok"] = r.product_formula_ok;
  j["sum_identity_ok"] = r.sum_identity_ok;
  j["modules_symmetric_ok"] = r.modules_symmetric_ok;
  j["reflecting_degree_ok"] = r.reflecting_degree_ok;
  j["sperner_additivity_applicable"] = r.sperner_additivity_applicable;
  j["sperner_additivity_ok"] = r.sperner_additivity_ok;
  j["sigma_drop_ok"] = r.sigma_drop_ok;
  j["h_tilde_sum"] = to_json(r.h_tilde_sum);
  j["ok"] = r.ok();
  return j;
}

Json to_json(const CsmSlpTransferReport& r, const VariableSet& vars) {
  Json j;
  j["decomposition"] = to_json(r.decomposition, vars);
  Json per = Json::array();
  for (const auto& v : r.per_module) per.push_back(to_json(v, vars));
  j["per_module"] = per;
  j["common_witness"] = r.common_witness ? to_json(*r.common_witness, vars) : Json(nullptr);
  if (r.slp_on_a) j["slp_on_algebra"] = to_json(*r.slp_on_a, vars);
  j["forward_applicable"] = r.forward_applicable;
  j["forward_ok"] = r.forward_ok;
  j["z_witnesses_algebra"] = r.z_witnesses_a;
  j["concentration_ok"] = r.concentration_ok;
  j["ok"] = r.ok();
  return j;
}

Json to_json(const PrincipalCsmReport& r, const VariableSet& vars) {
  Json j;
  Json chain = Json::array();
  for (const auto& s : r.chain) {
    Json e;
    e["power"] = s.power;
    e["unit"] = s.unit;
    if (!s.unit) {
      Json degs = Json::array();
      for (const auto& [deg, count] : s.generator_degrees)
        degs.push_back(Json::array({deg, count}));
      e["minimal_generators"] = degs;
    }
    chain.push_back(e);
  }
  j["colon_chain"] = chain;
  j["chain_unit_power"] = r.chain_unit_power;
  j["decomposition"] = to_json(r.decomposition, vars);
  j["principal_ok"] = r.principal_ok;
  j["symmetric_ok"] = r.symmetric_ok;
  j["ok"] = r.ok();
  return j;
}

Json to_json(const JordanInvarianceReport& r) {
  Json j;
  j["profile_on_algebra"] = to_json(r.on_algebra);
  j["profile_on_graded"] = to_json(r.on_graded);
  j["equal"] = r.equal;
  return j;
}

Json to_json(const LefschetzTransferReport& r, const VariableSet& vars) {
  Json j;
  j["algebra_wlp"] = to_json(r.a_wlp, vars);
  j["algebra_slp"] = to_json(r.a_slp, vars);
  j["graded_wlp"] = to_json(r.gr_wlp, vars);
  j["graded_slp"] = to_json(r.gr_slp, vars);
  j["wlp_flag"] = to_string(r.wlp_flag);
  j["slp_flag"] = to_string(r.slp_flag);
  return j;
}

Json to_json(const HilbertTripleReport& r) {
  Json j;
  j["h_algebra"] = to_json(r.h_algebra);
  j["h_initial_ideal"] = to_json(r.h_initial);
  j["h_lowest_part_ideal"] = to_json(r.h_lowest_part);
  j["equal"] = r.equal;
  return j;
}

Json to_json(const TensorWlpReport& r, const VariableSet& vars) {
  Json j;
  j["slp_on_algebra"] = to_json(r.slp_on_a, vars);
  // Witnesses on the extensions mention the adjoined truncation variable.
  const VariableSet extended =
      r.extension_variable.empty() ? vars : vars.with_fresh_variable(r.extension_variable);
  j["extension_variable"] = r.extension_variable;
  Json per = Json::array();
  for (std::size_t i = 0; i < r.wlp_per_alpha.size(); ++i) {
    Json e;
    e["alpha"] = i + 1;
    e["wlp"] = to_json(r.wlp_per_alpha[i], extended);
    per.push_back(e);
  }
  j["wlp_per_alpha"] = per;
  j["contradiction"] = r.contradiction;
  j["consistent"] = r.consistent;
  return j;
}

}  // namespace lefkit
