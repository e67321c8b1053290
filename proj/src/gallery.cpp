#include "lefkit/gallery.hpp"

#include <algorithm>

#include "lefkit/errors.hpp"

namespace lefkit {

namespace {

VariableSet ring(std::initializer_list<const char*> names) {
  std::vector<std::string> v;
  for (const char* n : names) v.emplace_back(n);
  return VariableSet(std::move(v));
}

IdealHandle parse_ideal(const VariableSet& vars, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> ps;
  for (const char* g : gens) ps.push_back(parse_polynomial(g, vars));
  return IdealHandle(vars, std::move(ps));
}

void check(GalleryResult& r, const std::string& name, bool pass, const std::string& detail = "") {
  r.checks.push_back({name, pass, detail});
}

HilbertSeries series(std::vector<std::int64_t> coeffs, int offset = 0) {
  return HilbertSeries(offset, std::move(coeffs));
}

GalleryResult remark_3_9(const SearchParams& params) {
  GalleryResult r;
  r.name = "remark-3.9";
  const VariableSet vars = ring({"x", "y", "z"});
  IdealHandle ideal = parse_ideal(vars, {"x^2", "(x+y)^2", "(x+y+z)^2"});
  ArtinianAlgebra a = ArtinianAlgebra::build(ideal);

  check(r, "hilbert (1,3,3,1)", a.hilbert() == series({1, 3, 3, 1}), a.hilbert().to_string());

  IdealHandle expected_in =
      parse_ideal(vars, {"x^2", "x*y", "x*z", "y^3", "y^2*z", "z^3"});
  check(r, "initial ideal matches", ideal_equals(leading_term_ideal(ideal), expected_in));

  IdealHandle expected_low =
      parse_ideal(vars, {"x^2", "2*x*y + y^2", "x*z + y*z", "y^3", "y^2*z", "z^3"});
  const LinearForm z = LinearForm::variable(2, 3);
  GrAlgebra gr = gr_algebra(a, z);
  check(r, "lowest part ideal matches", ideal_equals(gr.algebra.ideal(), expected_low));

  LefschetzVerdict gr_slp = find_witness(gr.algebra, LefschetzProperty::SLP, params);
  check(r, "associated graded has an SLP witness", gr_slp.is_witness());

  ArtinianAlgebra in_alg = ArtinianAlgebra::build(expected_in);
  LefschetzVerdict in_slp = find_witness(in_alg, LefschetzProperty::SLP, params);
  check(r, "initial-ideal algebra: SLP definitely_no via socle obstruction",
        in_slp.status == VerdictStatus::DefinitelyNo && in_slp.certificate &&
            in_slp.certificate->kind == "socle_obstruction");

  HilbertTripleReport triple = check_hilbert_triple(ideal, z);
  check(r, "Hilbert triple identical", triple.equal);

  LefschetzVerdict a_slp = find_witness(a, LefschetzProperty::SLP, params);
  check(r, "algebra has an SLP witness", a_slp.is_witness());

  r.data["hilbert"] = to_json(a.hilbert());
  r.data["gr_slp"] = to_json(gr_slp, vars);
  r.data["initial_slp"] = to_json(in_slp, vars);
  return r;
}

GalleryResult lemma_6_1_demo(const SearchParams& params) {
  GalleryResult r;
  r.name = "lemma-6.1-demo";
  const VariableSet vars = ring({"x", "y"});
  IdealHandle ideal = parse_ideal(vars, {"x^3", "y^4"});
  ArtinianAlgebra a = ArtinianAlgebra::build(ideal);
  const LinearForm z = LinearForm::variable(1, 2);

  IdealHandle eq = parse_ideal(vars, {"x^3", "y^2"});
  check(r, "colon by y^2 equals (x^3, y^2)",
        ideal_equals(colon_power(ideal, parse_polynomial("y", vars), 2), eq));

  ColonQuotient q = quotient_by_colon(a, z, 2);
  check(r, "quotient by the colon has hilbert (1,2,2,1)",
        !q.zero && q.algebra->hilbert() == series({1, 2, 2, 1}));

  CSMDecomposition dec = csm_decompose(a, z);
  check(r, "single central simple module", dec.modules.size() == 1);
  ArtinianAlgebra mod_z = ArtinianAlgebra::build(parse_ideal(vars, {"x^3", "y"}));
  check(r, "module matches A/(z)",
        dec.modules.size() == 1 && dec.modules[0].u.hilbert == mod_z.hilbert());

  LefschetzVerdict mw = find_module_witness(a, dec.modules[0].u, params);
  check(r, "module has an SLP witness", mw.is_witness());

  CsmSlpTransferReport transfer = check_csm_slp_transfer(a, z, params);
  check(r, "SLP transfer consistent", transfer.ok() && transfer.forward_applicable);

  r.data["decomposition"] = to_json(dec, vars);
  return r;
}

GalleryResult example_6_2(const SearchParams& params) {
  GalleryResult r;
  r.name = "example-6.2";
  // n = 3 with fixed quadrics and d_3 = 3.
  const VariableSet vars = ring({"x", "y", "z"});
  IdealHandle ideal = parse_ideal(vars, {"x^2 + y*z", "y^2 + x*z", "z^3"});
  ArtinianAlgebra a = ArtinianAlgebra::build(ideal);

  check(r, "complete intersection", minimal_generator_count(ideal) == 3);
  check(r, "dimension 12", a.dimension() == 12, std::to_string(a.dimension()));

  const LinearForm z = LinearForm::variable(2, 3);
  CSMDecomposition dec = csm_decompose(a, z);
  check(r, "single central simple module", dec.modules.size() == 1);
  ArtinianAlgebra mod_z = ArtinianAlgebra::build(parse_ideal(vars, {"x^2", "y^2", "z"}));
  check(r, "module matches A/(z)",
        dec.modules.size() == 1 && dec.modules[0].u.hilbert == mod_z.hilbert());

  LefschetzVerdict slp = find_witness(a, LefschetzProperty::SLP, params);
  check(r, "SLP witness found", slp.is_witness());

  r.data["hilbert"] = to_json(a.hilbert());
  r.data["slp"] = to_json(slp, vars);
  return r;
}

IdealHandle symmetric_power_ideal(const VariableSet& vars, unsigned r_exp, unsigned s_exp) {
  const std::size_t n = vars.size();
  std::vector<Polynomial> gens;
  for (unsigned i = 1; i + 1 <= n; ++i) gens.push_back(elementary_symmetric(i, n, r_exp));
  gens.push_back(elementary_symmetric(static_cast<unsigned>(n), n, s_exp));
  return IdealHandle(vars, std::move(gens));
}

GalleryResult example_6_4(const SearchParams& params) {
  GalleryResult r;
  r.name = "example-6.4";
  // n = 3, (r, s) = (2, 2).
  const VariableSet vars = ring({"x", "y", "z"});
  IdealHandle ideal = symmetric_power_ideal(vars, 2, 2);
  ArtinianAlgebra a = ArtinianAlgebra::build(ideal);

  std::vector<Polynomial> rewritten{elementary_symmetric(1, 3, 2), elementary_symmetric(2, 3, 2),
                                    parse_polynomial("z^6", vars)};
  check(r, "ideal equals (f_1, f_2, z^6)",
        ideal_equals(ideal, IdealHandle(vars, std::move(rewritten))));

  const LinearForm z = LinearForm::variable(2, 3);
  CSMDecomposition dec = csm_decompose(a, z);
  check(r, "single central simple module", dec.modules.size() == 1);
  ArtinianAlgebra mod_z = ArtinianAlgebra::build(
      IdealHandle(vars, {elementary_symmetric(1, 3, 2), elementary_symmetric(2, 3, 2),
                         Polynomial::variable(3, 2)}));
  check(r, "module matches A/(z)",
        dec.modules.size() == 1 && dec.modules[0].u.hilbert == mod_z.hilbert());

  LefschetzVerdict slp = find_witness(a, LefschetzProperty::SLP, params);
  check(r, "SLP witness found", slp.is_witness());

  r.data["hilbert"] = to_json(a.hilbert());
  r.data["decomposition"] = to_json(dec, vars);
  return r;
}

GalleryResult example_6_5(const SearchParams& params) {
  GalleryResult r;
  r.name = "example-6.5";
  // Quotients A/0:z^k of the (r, s) = (2, 2) instance, k = 1..sn.
  const VariableSet vars = ring({"x", "y", "z"});
  IdealHandle ideal = symmetric_power_ideal(vars, 2, 2);
  ArtinianAlgebra a = ArtinianAlgebra::build(ideal);
  const LinearForm z = LinearForm::variable(2, 3);

  for (unsigned k = 1; k < 6; ++k) {
    ColonQuotient q = quotient_by_colon(a, z, k);
    bool ok = !q.zero;
    std::string detail;
    if (ok) {
      LefschetzVerdict v = find_witness(*q.algebra, LefschetzProperty::SLP, params);
      ok = v.is_witness();
      detail = q.algebra->hilbert().to_string();
    }
    check(r, "A/0:z^" + std::to_string(k) + " has an SLP witness", ok, detail);
  }
  ColonQuotient q6 = quotient_by_colon(a, z, 6);
  check(r, "A/0:z^6 is the zero algebra", q6.zero);
  return r;
}

GalleryResult example_6_8(const SearchParams& params) {
  GalleryResult r;
  r.name = "example-6.8";
  // n = 3, (r, s) = (3, 1).
  const VariableSet vars = ring({"x", "y", "z"});
  IdealHandle ideal = symmetric_power_ideal(vars, 3, 1);
  ArtinianAlgebra a = ArtinianAlgebra::build(ideal);
  const LinearForm z = LinearForm::variable(2, 3);
  const Polynomial zp = Polynomial::variable(3, 2);

  CSMDecomposition dec = csm_decompose(a, z);
  check(r, "exactly two central simple modules", dec.modules.size() == 2);

  // The two modules match quotients of K[x,y], built here as their own
  // oracle, up to a recorded degree shift.
  const VariableSet vars2 = ring({"x1", "x2"});
  ArtinianAlgebra u1 =
      ArtinianAlgebra::build(parse_ideal(vars2, {"x1^3 + x2^3", "x1*x2"}));
  ArtinianAlgebra u2 =
      ArtinianAlgebra::build(parse_ideal(vars2, {"x1^3 + x2^3", "(x1*x2)^2"}));
  if (dec.modules.size() == 2) {
    const HilbertSeries& h1 = dec.modules[0].u.hilbert;
    const HilbertSeries& h2 = dec.modules[1].u.hilbert;
    const int shift1 = h1.offset() - u1.hilbert().offset();
    const int shift2 = h2.offset() - u2.hilbert().offset();
    check(r, "first module matches K[x1,x2]/(x1^3+x2^3, x1*x2) up to shift",
          h1 == u1.hilbert().shifted(shift1), "shift " + std::to_string(shift1));
    check(r, "second module matches K[x1,x2]/(x1^3+x2^3, (x1*x2)^2) up to shift",
          h2 == u2.hilbert().shifted(shift2), "shift " + std::to_string(shift2));
    r.data["shift_first"] = shift1;
    r.data["shift_second"] = shift2;
  }

  // Colon formulas of the construction: for k <= s, (f_1, f_2, (xy)^s z^{s-k});
  // for s < k < (n-1)r + s, (f_1, z^{(n-1)r-(k-s)}, (xy)^s); unit beyond.
  const Polynomial f1 = elementary_symmetric(1, 3, 3);
  const Polynomial f2 = elementary_symmetric(2, 3, 3);
  const Polynomial xy = parse_polynomial("x*y", vars);
  bool colon_ok = true;
  {
    IdealHandle expected(vars, {f1, f2, xy});
    colon_ok = colon_ok && ideal_equals(colon_power(ideal, zp, 1), expected);
  }
  for (unsigned k = 2; k <= 6; ++k) {
    IdealHandle expected(vars, {f1, Polynomial::variable(3, 2).pow(7 - k), xy});
    colon_ok = colon_ok && ideal_equals(colon_power(ideal, zp, k), expected);
  }
  check(r, "colon chain formulas verified", colon_ok);
  check(r, "colon at power 7 is the unit ideal", colon_power(ideal, zp, 7).is_unit_ideal());

  PrincipalCsmReport chain = check_principal_csm_chain(a, z);
  check(r, "central simple modules principal with symmetric series", chain.ok());

  LefschetzVerdict slp = find_witness(a, LefschetzProperty::SLP, params);
  check(r, "SLP witness found", slp.is_witness());

  r.data["decomposition"] = to_json(dec, vars);
  return r;
}

GalleryResult example_6_9(const SearchParams& params) {
  GalleryResult r;
  r.name = "example-6.9";
  // a = 2: the power sum ideal (p_2, p_3, p_4).
  const VariableSet vars = ring({"x", "y", "z"});
  const unsigned aa = 2;
  IdealHandle ideal(vars, {power_sum(aa, 3), power_sum(aa + 1, 3), power_sum(aa + 2, 3)});
  ArtinianAlgebra alg = ArtinianAlgebra::build(ideal);
  const LinearForm z = LinearForm::variable(2, 3);
  const Polynomial zp = Polynomial::variable(3, 2);

  const Polynomial f = parse_polynomial("(x-z)*(y-z)", vars);
  const Polynomial fp = parse_polynomial("-x-y+2*z", vars);

  IdealHandle c2 = colon_power(ideal, zp, aa);
  check(r, "colon at a equals (f, p_a, p_{a+1})",
        ideal_equals(c2, IdealHandle(vars, {f, power_sum(aa, 3), power_sum(aa + 1, 3)})));
  check(r, "colon at a minimally 3-generated", minimal_generator_count(c2) == 3);

  IdealHandle c4 = colon_power(ideal, zp, 2 * aa);
  check(r, "colon at 2a equals (f', f, z^a)",
        ideal_equals(c4, IdealHandle(vars, {fp, f, zp.pow(aa)})));
  check(r, "colon at 2a minimally 3-generated", minimal_generator_count(c4) == 3);

  check(r, "colon at 3a is the unit ideal", colon_power(ideal, zp, 3 * aa).is_unit_ideal());

  PrincipalCsmReport chain = check_principal_csm_chain(alg, z);
  check(r, "central simple modules principal with symmetric series", chain.ok());

  LefschetzVerdict slp = find_witness(alg, LefschetzProperty::SLP, params);
  check(r, "SLP witness found", slp.is_witness());

  r.data["hilbert"] = to_json(alg.hilbert());
  r.data["chain"] = to_json(chain, vars);
  return r;
}

GalleryResult example_6_10(const SearchParams& params) {
  GalleryResult r;
  r.name = "example-6.10";
  const VariableSet vars = ring({"u", "v", "w", "x", "y", "z"});
  IdealHandle ideal = parse_ideal(
      vars, {"y^2", "x^2", "w^2", "v^3", "u^3", "z^5 - z*(u^2*w*x + u*v*w*y + v^2*x*y)"});
  ArtinianAlgebra a = ArtinianAlgebra::build(ideal);

  check(r, "dimension 360", a.dimension() == 360, std::to_string(a.dimension()));
  check(r, "socle degree 11", a.socle_degree() == 11);
  check(r, "hilbert is the complete intersection product",
        a.hilbert() == complete_intersection_series({2, 2, 2, 3, 3, 5}));

  const LinearForm z = LinearForm::variable(5, 6);
  CSMDecomposition dec = csm_decompose(a, z);
  JordanProfile expected;
  expected.blocks = {{9, 12}, {5, 48}, {1, 12}};
  check(r, "Jordan profile (9^12, 5^48, 1^12)", dec.profile == expected);

  bool hs_ok = dec.modules.size() == 3;
  if (hs_ok) {
    hs_ok = dec.modules[0].u.hilbert == series({1, 5, 5, 1}) &&
            dec.modules[1].u.hilbert == series({7, 17, 17, 7}, 2) &&
            dec.modules[2].u.hilbert == series({1, 5, 5, 1}, 4);
  }
  check(r, "module Hilbert series match", hs_ok);

  HilbertSeries sum;
  for (const auto& m : dec.modules) sum = sum + m.h_tilde;
  check(r, "extended series sum to h_A", sum == a.hilbert());

  SearchParams wide = params;
  wide.trials = 16;
  if (dec.modules.size() == 3) {
    // The first and third modules are dual to each other, so the third
    // module's failure forces the first to fail as well.
    LefschetzVerdict w1 = find_module_witness(a, dec.modules[0].u, wide);
    LefschetzVerdict w2 = find_module_witness(a, dec.modules[1].u, params);
    LefschetzVerdict w3 = find_module_witness(a, dec.modules[2].u, wide);
    check(r, "second module has an SLP witness", w2.is_witness());
    check(r, "third module has no SLP witness in 16 trials", !w3.is_witness());
    check(r, "first module mirrors the third (no witness)", !w1.is_witness());
    r.data["module_witnesses"] =
        Json::array({to_json(w1, vars), to_json(w2, vars), to_json(w3, vars)});
  }

  if (dec.modules.size() == 3) {
    // The composed action over the support of the first module is a 1x1 map.
    auto act = module_action(a, dec.modules[0].u, LinearForm::ones(6));
    QMatrix composed = act[2] * act[1] * act[0];
    check(r, "first module's full-length action is 1x1",
          composed.rows() == 1 && composed.cols() == 1);
  }

  LefschetzVerdict slp = find_witness(a, LefschetzProperty::SLP, params);
  check(r, "algebra has an SLP witness", slp.is_witness());

  JordanInvarianceReport inv = check_gr_jordan_invariance(a, z);
  check(r, "Jordan profile matches the associated graded side", inv.equal);

  const VariableSet apolar_vars = ring({"u", "v", "w", "x", "y"});
  ArtinianAlgebra ann = apolar_algebra(
      parse_polynomial("w*u^2 + 2*x*u*v + y*v^2", apolar_vars), apolar_vars);
  check(r, "apolar algebra has hilbert (1,5,5,1)", ann.hilbert() == series({1, 5, 5, 1}));
  if (dec.modules.size() == 3)
    check(r, "apolar series equals the third module shifted by 4",
          dec.modules[2].u.hilbert == ann.hilbert().shifted(4));

  r.data["hilbert"] = to_json(a.hilbert());
  r.data["decomposition"] = to_json(dec, vars);
  r.data["slp"] = to_json(slp, vars);
  return r;
}

}  // namespace

std::vector<std::string> gallery_names() {
  return {"remark-3.9",  "lemma-6.1-demo", "example-6.2", "example-6.4",
          "example-6.5", "example-6.8",    "example-6.9", "example-6.10"};
}

GalleryResult run_gallery(const std::string& name, const SearchParams& params) {
  if (name == "remark-3.9") return remark_3_9(params);
  if (name == "lemma-6.1-demo") return lemma_6_1_demo(params);
  if (name == "example-6.2") return example_6_2(params);
  if (name == "example-6.4") return example_6_4(params);
  if (name == "example-6.5") return example_6_5(params);
  if (name == "example-6.8") return example_6_8(params);
  if (name == "example-6.9") return example_6_9(params);
  if (name == "example-6.10") return example_6_10(params);
  throw UnknownGalleryName(name);
}

}  // namespace lefkit
