#include "lefkit/jordan.hpp"

#include <algorithm>
#include <cassert>

#include "lefkit/errors.hpp"

namespace lefkit {

std::size_t JordanProfile::block_count() const {
  std::size_t r = 0;
  for (const auto& b : blocks) r += b.multiplicity;
  return r;
}

std::int64_t JordanProfile::total_dimension() const {
  std::int64_t t = 0;
  for (const auto& b : blocks) t += static_cast<std::int64_t>(b.size) * b.multiplicity;
  return t;
}

JordanProfile jordan_profile(const ArtinianAlgebra& a, const LinearForm& z) {
  if (z.is_zero()) throw ZeroLinearForm();
  JordanProfile p;
  if (a.is_zero_algebra()) return p;

  std::vector<std::size_t> r{static_cast<std::size_t>(a.dimension())};
  for (unsigned k = 1;; ++k) {
    const std::size_t rk = rank_of_power(a, z, k).global;
    r.push_back(rk);
    if (rk == 0) break;
  }
  // Convexity of the rank sequence (differences nonincreasing) is enforced
  // below: a violation shows up as a negative multiplicity.
  const unsigned p1 = static_cast<unsigned>(r.size()) - 1;  // least k with z^k = 0
  for (unsigned k = p1; k >= 1; --k) {
    const std::size_t up = k + 1 < r.size() ? r[k + 1] : 0;
    const std::int64_t m = static_cast<std::int64_t>(r[k - 1]) - 2 * static_cast<std::int64_t>(r[k]) +
                           static_cast<std::int64_t>(up);
    if (m < 0) throw Error("rank sequence is not convex; multiplication maps inconsistent");
    if (m > 0) p.blocks.push_back({k, static_cast<unsigned>(m)});
  }
  p.rank_sequence = std::move(r);
  assert(p.total_dimension() == a.dimension());
  return p;
}

std::size_t GradedSubquotient::dim(int degree) const {
  return static_cast<std::size_t>(hilbert.at(degree));
}

namespace {

// Kernel of x z^k : A_d -> A_{d+k} as a column matrix in the A_d basis.
QMatrix kernel_of_power(const ArtinianAlgebra& a, const std::vector<QMatrix>& zmaps, unsigned k,
                        int d) {
  const std::size_t nd = a.dim(d);
  if (k == 0) return QMatrix(nd, 0);
  const int c = a.socle_degree();
  QMatrix prod = zmaps[static_cast<std::size_t>(d)];
  for (unsigned s = 1; s < k; ++s) {
    const int level = d + static_cast<int>(s);
    if (level > c) {
      prod = QMatrix(0, nd);
      break;
    }
    prod = zmaps[static_cast<std::size_t>(level)] * prod;
  }
  return matrix_from_columns(nd, kernel_basis(prod));
}

// Column basis of ((0 : z^k) + (z))_d.
QMatrix chain_member(const ArtinianAlgebra& a, const std::vector<QMatrix>& zmaps, unsigned k,
                     int d) {
  QMatrix cols = kernel_of_power(a, zmaps, k, d);
  if (d >= 1) cols = cols.augment_columns(zmaps[static_cast<std::size_t>(d - 1)]);
  return column_echelon(cols);
}

}  // namespace

CSMDecomposition csm_decompose(const ArtinianAlgebra& a, const LinearForm& z) {
  if (z.is_zero()) throw ZeroLinearForm();
  CSMDecomposition dec;
  dec.z = z;
  dec.profile = jordan_profile(a, z);
  if (a.is_zero_algebra()) return dec;

  const auto zmaps = a.multiplication_maps(z);
  const int c = a.socle_degree();
  const std::size_t s = dec.profile.blocks.size();

  // Chain ideals per degree for each distinct block size plus f_{s+1} = 0.
  std::vector<std::vector<QMatrix>> chain(s + 1);
  for (std::size_t i = 0; i <= s; ++i) {
    const unsigned fi = i < s ? dec.profile.blocks[i].size : 0;
    for (int d = 0; d <= c; ++d) chain[i].push_back(chain_member(a, zmaps, fi, d));
  }

  for (std::size_t i = 0; i < s; ++i) {
    CentralSimpleModule mod;
    mod.block_size = dec.profile.blocks[i].size;
    mod.multiplicity = dec.profile.blocks[i].multiplicity;
    GradedSubquotient& u = mod.u;
    std::vector<std::int64_t> dims;
    for (int d = 0; d <= c; ++d) {
      QMatrix n = chain[i][static_cast<std::size_t>(d)];
      QMatrix dd = chain[i + 1][static_cast<std::size_t>(d)];
      // Representatives: numerator columns pivotal in [D | N].
      RrefResult r = rref(dd.augment_columns(n));
      std::vector<std::vector<Rational>> reps;
      for (std::size_t p : r.pivots) {
        if (p >= dd.cols()) reps.push_back(n.column(p - dd.cols()));
      }
      dims.push_back(static_cast<std::int64_t>(reps.size()));
      u.representatives.push_back(matrix_from_columns(a.dim(d), reps));
      u.numerator.push_back(std::move(n));
      u.denominator.push_back(std::move(dd));
    }
    u.hilbert = HilbertSeries(0, std::move(dims));
    if (u.hilbert.total() != static_cast<std::int64_t>(mod.multiplicity))
      throw Error("central simple module dimension disagrees with the block multiplicity");
    mod.h_tilde = u.hilbert.times_truncation(mod.block_size);
    dec.modules.push_back(std::move(mod));
  }
  return dec;
}

std::vector<QMatrix> module_action(const ArtinianAlgebra& a, const GradedSubquotient& u,
                                   const LinearForm& g) {
  const int c = a.socle_degree();
  const auto gmaps = a.multiplication_maps(g);
  std::vector<QMatrix> action;
  for (int d = 0; d <= c; ++d) {
    const QMatrix& reps = u.representatives[static_cast<std::size_t>(d)];
    const std::size_t target_dim = d + 1 <= c ? u.representatives[static_cast<std::size_t>(d + 1)].cols() : 0;
    if (d + 1 > c) {
      action.push_back(QMatrix(0, reps.cols()));
      continue;
    }
    const QMatrix& dd = u.denominator[static_cast<std::size_t>(d + 1)];
    const QMatrix& rr = u.representatives[static_cast<std::size_t>(d + 1)];
    QMatrix t(target_dim, reps.cols());
    if (reps.cols() > 0) {
      // Well-definedness: g maps the denominator into the denominator.
      const QMatrix& dcur = u.denominator[static_cast<std::size_t>(d)];
      if (dcur.cols() > 0) {
        QMatrix dimg = gmaps[static_cast<std::size_t>(d)] * dcur;
        if (!solve_columns(dd, dimg).has_value())
          throw Error("module action is not well defined on the denominator");
      }
      QMatrix img = gmaps[static_cast<std::size_t>(d)] * reps;
      auto x = solve_columns(dd.augment_columns(rr), img);
      if (!x) throw Error("module action leaves the numerator subspace");
      for (std::size_t r = 0; r < target_dim; ++r)
        for (std::size_t col = 0; col < reps.cols(); ++col) t.at(r, col) = x->at(dd.cols() + r, col);
    }
    action.push_back(std::move(t));
  }
  return action;
}

LefschetzVerdict check_module_slp(const ArtinianAlgebra& a, const GradedSubquotient& u,
                                  const LinearForm& g) {
  LefschetzVerdict v;
  v.property = LefschetzProperty::SLP;
  v.trials = 1;
  if (u.hilbert.is_zero()) {
    v.status = VerdictStatus::Witness;
    v.witness = g;
    return v;
  }
  const int lo = u.min_degree();
  const int hi = u.max_degree();
  for (int i = 0; 2 * i <= hi - lo; ++i) {
    if (u.dim(lo + i) != u.dim(hi - i)) {
      v.status = VerdictStatus::DefinitelyNo;
      NoCertificate cert;
      cert.kind = "asymmetric_hilbert";
      cert.degree = lo + i;
      cert.detail = "module dimensions differ in degrees " + std::to_string(lo + i) + " and " +
                    std::to_string(hi - i);
      v.certificate = cert;
      return v;
    }
  }
  const auto action = module_action(a, u, g);
  bool all_ok = true;
  for (int i = 0; 2 * i <= hi - lo; ++i) {
    const int from = lo + i;
    const unsigned p = static_cast<unsigned>(hi - lo - 2 * i);
    DegreeCheck d;
    d.from_degree = from;
    d.power = p;
    d.dim_from = u.dim(from);
    d.dim_to = u.dim(hi - i);
    if (p == 0) {
      d.rank = d.dim_from;
    } else {
      QMatrix prod = action[static_cast<std::size_t>(from)];
      for (unsigned s = 1; s < p; ++s) prod = action[static_cast<std::size_t>(from + s)] * prod;
      d.rank = (prod.rows() == 0 || prod.cols() == 0) ? 0 : rank(prod);
    }
    d.ok = d.rank == d.dim_from && d.rank == d.dim_to;
    all_ok = all_ok && d.ok;
    v.per_degree.push_back(d);
  }
  v.status = all_ok ? VerdictStatus::Witness : VerdictStatus::NoWitnessFound;
  if (all_ok) v.witness = g;
  return v;
}

LefschetzVerdict find_module_witness(const ArtinianAlgebra& a, const GradedSubquotient& u,
                                     const SearchParams& params) {
  LefschetzVerdict last;
  unsigned attempted = 0;
  for (const auto& g : witness_candidates(a.vars().size(), params)) {
    ++attempted;
    LefschetzVerdict v = check_module_slp(a, u, g);
    if (v.is_witness() || v.status == VerdictStatus::DefinitelyNo) {
      v.trials = attempted;
      return v;
    }
    last = v;
  }
  last.status = VerdictStatus::NoWitnessFound;
  last.witness.reset();
  last.trials = params.trials;
  return last;
}

CsmStructureReport check_csm_hilbert_structure(const ArtinianAlgebra& a, const LinearForm& z) {
  if (!is_gorenstein(a)) throw NotGorenstein();
  CsmStructureReport rep;
  rep.decomposition = csm_decompose(a, z);
  const auto& mods = rep.decomposition.modules;

  rep.product_formula_ok = true;
  for (const auto& m : mods)
    if (m.h_tilde != m.u.hilbert.times_truncation(m.block_size)) rep.product_formula_ok = false;

  HilbertSeries sum;
  for (const auto& m : mods) sum = sum + m.h_tilde;
  rep.h_tilde_sum = sum;
  rep.sum_identity_ok = sum == a.hilbert();

  rep.modules_symmetric_ok = true;
  for (const auto& m : mods)
    if (!m.u.hilbert.symmetric()) rep.modules_symmetric_ok = false;

  rep.reflecting_degree_ok = true;
  for (const auto& m : mods) {
    if (!m.h_tilde.symmetric() || m.h_tilde.twice_reflecting_degree() != a.socle_degree())
      rep.reflecting_degree_ok = false;
  }

  rep.sperner_additivity_applicable = true;
  for (const auto& m : mods)
    if (!m.h_tilde.unimodal()) rep.sperner_additivity_applicable = false;
  if (rep.sperner_additivity_applicable) {
    std::int64_t total = 0;
    for (const auto& m : mods) total += m.h_tilde.max_coeff();
    rep.sperner_additivity_ok = total == stats(a).sperner;
  }

  // sigma(A / 0:z^{f_s}) = sigma(A) - f_s, computed from kernel dimensions.
  // Meaningful only for s >= 2: with a single module z^{f_s} = 0 and the
  // quotient is zero.
  rep.sigma_drop_ok = true;
  if (mods.size() >= 2) {
    const unsigned fs = mods.back().block_size;
    const auto zmaps = a.multiplication_maps(z);
    const int c = a.socle_degree();
    int top = -1;
    for (int d = 0; d <= c; ++d) {
      const QMatrix k = kernel_of_power(a, zmaps, fs, d);
      if (k.cols() < a.dim(d)) top = d;
    }
    rep.sigma_drop_ok = (top + 1) == (a.sigma() - static_cast<int>(fs));
  }
  return rep;
}

CsmSlpTransferReport check_csm_slp_transfer(const ArtinianAlgebra& a, const LinearForm& z,
                                            const SearchParams& params) {
  if (!is_gorenstein(a)) throw NotGorenstein();
  CsmSlpTransferReport rep;
  rep.decomposition = csm_decompose(a, z);
  const auto& mods = rep.decomposition.modules;

  for (const auto& m : mods) rep.per_module.push_back(find_module_witness(a, m.u, params));

  // Hypothesis of the forward direction: one g works for every module.
  for (const auto& g : witness_candidates(a.vars().size(), params)) {
    bool common = true;
    for (const auto& m : mods)
      if (!check_module_slp(a, m.u, g).is_witness()) {
        common = false;
        break;
      }
    if (common) {
      rep.common_witness = g;
      break;
    }
  }
  if (rep.common_witness) {
    rep.forward_applicable = true;
    rep.slp_on_a = find_witness(a, LefschetzProperty::SLP, params);
    rep.forward_ok = rep.slp_on_a->is_witness();
  }

  // Reverse direction: z a strong Lefschetz element forces each U_i to sit
  // in the single degree i-1.
  const LefschetzVerdict zcheck = check_slp(a, z);
  rep.z_witnesses_a = zcheck.is_witness();
  if (rep.z_witnesses_a) {
    for (std::size_t i = 0; i < mods.size(); ++i) {
      const auto& h = mods[i].u.hilbert;
      if (h.offset() != static_cast<int>(i) || h.top_degree() != static_cast<int>(i))
        rep.concentration_ok = false;
    }
  }
  return rep;
}

PrincipalCsmReport check_principal_csm_chain(const ArtinianAlgebra& a, const LinearForm& z) {
  const std::size_t n = a.vars().size();
  if (minimal_generator_count(a.ideal()) != n)
    throw Error("hypothesis requires a complete intersection ideal");
  if (z.is_zero()) throw ZeroLinearForm();

  PrincipalCsmReport rep;
  rep.decomposition = csm_decompose(a, z);
  const Polynomial zp = z.to_polynomial();
  const unsigned bound = rep.decomposition.profile.nilpotency_index();

  IdealHandle cur = a.ideal();
  for (unsigned k = 1; k <= bound + 1; ++k) {
    cur = colon(cur, zp);
    ColonChainStep step;
    step.power = k;
    if (cur.is_unit_ideal()) {
      step.unit = true;
      rep.chain.push_back(step);
      rep.chain_unit_power = k;
      break;
    }
    step.generator_degrees = minimal_generators(cur);
    std::size_t count = 0;
    for (const auto& [d, c] : step.generator_degrees) count += c;
    rep.chain.push_back(step);
    if (count != n) throw HypothesisFails(k);
  }

  rep.principal_ok = true;
  rep.symmetric_ok = true;
  const int c = a.socle_degree();
  for (const auto& m : rep.decomposition.modules) {
    if (!m.u.hilbert.symmetric()) rep.symmetric_ok = false;
    // Graded Nakayama: dim U / mU with mU spanned by all variable images.
    std::vector<std::vector<QMatrix>> var_actions;
    for (std::size_t v = 0; v < n; ++v)
      var_actions.push_back(module_action(a, m.u, LinearForm::variable(v, n)));
    std::int64_t quotient_dim = 0;
    for (int d = 0; d <= c; ++d) {
      const std::size_t ud = m.u.dim(d);
      if (ud == 0) continue;
      QMatrix images(ud, 0);
      if (d >= 1) {
        for (std::size_t v = 0; v < n; ++v)
          images = images.augment_columns(var_actions[v][static_cast<std::size_t>(d - 1)]);
      }
      const std::size_t r = images.cols() == 0 ? 0 : rank(images);
      quotient_dim += static_cast<std::int64_t>(ud) - static_cast<std::int64_t>(r);
    }
    if (quotient_dim != 1) rep.principal_ok = false;
  }
  return rep;
}

bool direct_sum_extension_has_slp(const ArtinianAlgebra& a, const CSMDecomposition& dec,
                                  const LinearForm& g) {
  // Basis of the direct sum per total degree D: triples (module i, module
  // representative in degree d, truncation power k) with d + k = D and
  // k < f_i.  The operator is g on the module part plus the shift k -> k+1.
  struct Entry {
    std::size_t module;
    int degree;
    std::size_t rep;
    unsigned k;
  };
  const int c = a.socle_degree();
  const auto& mods = dec.modules;

  std::vector<std::vector<QMatrix>> actions;
  for (const auto& m : mods) actions.push_back(module_action(a, m.u, g));

  HilbertSeries total;
  for (const auto& m : mods) total = total + m.h_tilde;
  if (total.is_zero()) return true;
  const int lo = total.offset();
  const int hi = total.top_degree();

  std::vector<std::vector<Entry>> layer(static_cast<std::size_t>(hi + 2));
  for (std::size_t i = 0; i < mods.size(); ++i) {
    const unsigned fi = mods[i].block_size;
    for (int d = 0; d <= c; ++d) {
      const std::size_t ud = mods[i].u.dim(d);
      for (unsigned k = 0; k < fi; ++k) {
        const int total_deg = d + static_cast<int>(k);
        if (total_deg > hi + 1) break;
        for (std::size_t r = 0; r < ud; ++r)
          layer[static_cast<std::size_t>(total_deg)].push_back({i, d, r, k});
      }
    }
  }

  auto index_of = [&](int deg, const Entry& e) -> std::size_t {
    const auto& l = layer[static_cast<std::size_t>(deg)];
    for (std::size_t p = 0; p < l.size(); ++p)
      if (l[p].module == e.module && l[p].degree == e.degree && l[p].rep == e.rep && l[p].k == e.k)
        return p;
    throw Error("direct sum index lookup failed");
  };

  std::vector<QMatrix> op;
  for (int deg = lo; deg <= hi; ++deg) {
    const auto& src = layer[static_cast<std::size_t>(deg)];
    const auto& dst = layer[static_cast<std::size_t>(deg + 1)];
    QMatrix m(dst.size(), src.size());
    for (std::size_t col = 0; col < src.size(); ++col) {
      const Entry& e = src[col];
      // g-part: module action into degree e.degree + 1, same power k.
      if (e.degree + 1 <= c) {
        const QMatrix& act = actions[e.module][static_cast<std::size_t>(e.degree)];
        for (std::size_t r = 0; r < act.rows(); ++r) {
          if (act.at(r, e.rep) == 0) continue;
          const std::size_t row = index_of(deg + 1, {e.module, e.degree + 1, r, e.k});
          m.at(row, col) += act.at(r, e.rep);
        }
      }
      // t-part: shift the power.
      if (e.k + 1 < mods[e.module].block_size) {
        const std::size_t row = index_of(deg + 1, {e.module, e.degree, e.rep, e.k + 1});
        m.at(row, col) += 1;
      }
    }
    op.push_back(std::move(m));
  }

  for (int i = 0; 2 * i <= hi - lo; ++i) {
    const int from = lo + i;
    const unsigned p = static_cast<unsigned>(hi - lo - 2 * i);
    const std::size_t dim_from = layer[static_cast<std::size_t>(from)].size();
    const std::size_t dim_to = layer[static_cast<std::size_t>(hi - i)].size();
    std::size_t r;
    if (p == 0) {
      r = dim_from;
    } else {
      QMatrix prod = op[static_cast<std::size_t>(from - lo)];
      for (unsigned s = 1; s < p; ++s) prod = op[static_cast<std::size_t>(from - lo + s)] * prod;
      r = (prod.rows() == 0 || prod.cols() == 0) ? 0 : rank(prod);
    }
    if (r != dim_from || r != dim_to) return false;
  }
  return true;
}

}  // namespace lefkit
