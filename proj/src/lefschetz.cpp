#include "lefkit/lefschetz.hpp"

#include <algorithm>
#include <random>

namespace lefkit {

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Witness: return "witness";
    case VerdictStatus::DefinitelyNo: return "definitely_no";
    case VerdictStatus::NoWitnessFound: return "no_witness_found";
  }
  return "?";
}

std::string to_string(LefschetzProperty p) {
  return p == LefschetzProperty::WLP ? "WLP" : "SLP";
}

LefschetzStats stats(const HilbertSeries& h) {
  LefschetzStats s;
  if (h.is_zero()) return s;
  const int c = h.top_degree();
  s.sperner = h.max_coeff();
  for (int i = h.offset(); i < c; ++i) s.cosperner += std::min(h.at(i), h.at(i + 1));
  if (h.unimodal() && h.symmetric()) {
    std::vector<std::int64_t> sp;
    for (int k = 1; k <= c - h.offset(); ++k) {
      std::int64_t v = 0;
      for (int i = h.offset(); i <= c; ++i) v += std::max<std::int64_t>(h.at(i) - h.at(i - k), 0);
      sp.push_back(v);
    }
    s.sperner_vector = std::move(sp);
  } else {
    s.sperner_vector_note = "omitted: Hilbert series is not unimodal-symmetric";
  }
  return s;
}

LefschetzStats stats(const ArtinianAlgebra& a) { return stats(a.hilbert()); }

namespace {

// g plays no role in the asymmetric certificate; the socle certificates name
// an explicit element annihilated by all of A_1.
std::optional<NoCertificate> structural_certificate(const ArtinianAlgebra& a,
                                                    LefschetzProperty property) {
  if (a.is_zero_algebra()) return std::nullopt;
  const int c = a.socle_degree();
  if (property == LefschetzProperty::SLP) {
    for (int i = 0; 2 * i <= c; ++i) {
      if (a.dim(i) != a.dim(c - i)) {
        NoCertificate cert;
        cert.kind = "asymmetric_hilbert";
        cert.degree = i;
        cert.detail = "dim A_" + std::to_string(i) + " = " + std::to_string(a.dim(i)) +
                      " differs from dim A_" + std::to_string(c - i) + " = " +
                      std::to_string(a.dim(c - i));
        return cert;
      }
    }
  }
  const SocleData s = socle(a);
  for (int d = 0; d < c; ++d) {
    const QMatrix& basis = s.per_degree[static_cast<std::size_t>(d)];
    if (basis.cols() == 0) continue;
    const bool blocks = property == LefschetzProperty::WLP
                            ? a.dim(d) <= a.dim(d + 1)  // injectivity forced, yet impossible
                            : 2 * d < c;                // some positive power must be injective
    if (blocks) {
      NoCertificate cert;
      cert.kind = "socle_obstruction";
      cert.degree = d;
      cert.socle_element = basis.column(0);
      cert.detail = "socle element in degree " + std::to_string(d) +
                    " is annihilated by every linear form";
      return cert;
    }
  }
  return std::nullopt;
}

}  // namespace

LefschetzVerdict check_wlp(const ArtinianAlgebra& a, const LinearForm& g) {
  LefschetzVerdict v;
  v.property = LefschetzProperty::WLP;
  v.trials = 1;
  if (a.is_zero_algebra()) {
    v.status = VerdictStatus::Witness;
    v.witness = g;
    return v;
  }
  const int c = a.socle_degree();
  const auto maps = a.multiplication_maps(g);
  bool all_ok = true;
  std::size_t global_rank = 0;
  for (int i = 0; i < c; ++i) {
    DegreeCheck d;
    d.from_degree = i;
    d.power = 1;
    d.dim_from = a.dim(i);
    d.dim_to = a.dim(i + 1);
    d.rank = rank(maps[static_cast<std::size_t>(i)]);
    d.ok = (d.rank == d.dim_from) || (d.rank == d.dim_to);
    global_rank += d.rank;
    all_ok = all_ok && d.ok;
    v.per_degree.push_back(d);
  }
  // The map out of the socle degree is zero into the zero space; surjective.
  v.status = all_ok ? VerdictStatus::Witness : VerdictStatus::NoWitnessFound;
  if (all_ok) v.witness = g;

  // Rank and codimension criteria must agree with the definition.
  const LefschetzStats st = stats(a);
  const std::int64_t codim = a.dimension() - static_cast<std::int64_t>(global_rank);
  const bool by_rank = static_cast<std::int64_t>(global_rank) == st.cosperner;
  const bool by_codim = codim == st.sperner;
  v.cross_check_ok = (by_rank == all_ok) && (by_codim == all_ok) && codim >= st.sperner;
  return v;
}

LefschetzVerdict check_slp(const ArtinianAlgebra& a, const LinearForm& g) {
  LefschetzVerdict v;
  v.property = LefschetzProperty::SLP;
  v.trials = 1;
  if (a.is_zero_algebra()) {
    v.status = VerdictStatus::Witness;
    v.witness = g;
    return v;
  }
  const int c = a.socle_degree();
  for (int i = 0; 2 * i <= c; ++i) {
    if (a.dim(i) != a.dim(c - i)) {
      v.status = VerdictStatus::DefinitelyNo;
      NoCertificate cert;
      cert.kind = "asymmetric_hilbert";
      cert.degree = i;
      cert.detail = "dim A_" + std::to_string(i) + " != dim A_" + std::to_string(c - i);
      v.certificate = cert;
      return v;
    }
  }
  const auto maps = a.multiplication_maps(g);
  auto power_rank = [&](int from, unsigned k) -> std::size_t {
    if (k == 0) return a.dim(from);
    if (from + static_cast<int>(k) > c) return 0;
    QMatrix p = maps[static_cast<std::size_t>(from)];
    for (unsigned s = 1; s < k; ++s) p = maps[static_cast<std::size_t>(from + s)] * p;
    if (p.rows() == 0 || p.cols() == 0) return 0;
    return rank(p);
  };

  bool all_ok = true;
  for (int i = 0; 2 * i <= c; ++i) {
    DegreeCheck d;
    d.from_degree = i;
    d.power = static_cast<unsigned>(c - 2 * i);
    d.dim_from = a.dim(i);
    d.dim_to = a.dim(c - i);
    d.rank = power_rank(i, d.power);
    d.ok = d.rank == d.dim_from && d.rank == d.dim_to;
    all_ok = all_ok && d.ok;
    v.per_degree.push_back(d);
  }
  v.status = all_ok ? VerdictStatus::Witness : VerdictStatus::NoWitnessFound;
  if (all_ok) v.witness = g;

  // Cross-validation via the Sperner vector, available exactly when the
  // Hilbert series is unimodal and symmetric.
  const LefschetzStats st = stats(a);
  if (st.sperner_vector) {
    bool rank_criterion = true;
    for (int k = 1; k <= c; ++k) {
      std::size_t global = 0;
      for (int i = 0; i + k <= c; ++i) global += power_rank(i, static_cast<unsigned>(k));
      const std::int64_t expected = a.dimension() - (*st.sperner_vector)[static_cast<std::size_t>(k - 1)];
      if (static_cast<std::int64_t>(global) != expected) {
        rank_criterion = false;
        break;
      }
    }
    v.cross_check_ok = rank_criterion == all_ok;
  }
  return v;
}

std::vector<LinearForm> witness_candidates(std::size_t nvars, const SearchParams& params) {
  std::vector<LinearForm> out;
  for (std::size_t i = 0; i < nvars; ++i) out.push_back(LinearForm::variable(i, nvars));
  out.push_back(LinearForm::ones(nvars));
  std::mt19937_64 rng(params.seed);
  const std::uint64_t bound = params.coeff_bound == 0 ? 1 : params.coeff_bound;
  for (unsigned t = 0; t < params.trials; ++t) {
    std::vector<Rational> c(nvars);
    for (std::size_t i = 0; i < nvars; ++i)
      c[i] = Rational(static_cast<unsigned long>(1 + rng() % bound));
    out.push_back(LinearForm(std::move(c)));
  }
  return out;
}

LefschetzVerdict find_witness(const ArtinianAlgebra& a, LefschetzProperty property,
                              const SearchParams& params) {
  LefschetzVerdict v;
  v.property = property;
  if (auto cert = structural_certificate(a, property)) {
    v.status = VerdictStatus::DefinitelyNo;
    v.certificate = std::move(cert);
    return v;
  }
  unsigned attempted = 0;
  for (const auto& g : witness_candidates(a.vars().size(), params)) {
    ++attempted;
    LefschetzVerdict check =
        property == LefschetzProperty::WLP ? check_wlp(a, g) : check_slp(a, g);
    if (check.is_witness()) {
      check.trials = attempted;
      return check;
    }
    if (check.status == VerdictStatus::DefinitelyNo) {
      check.trials = attempted;
      return check;
    }
  }
  v.status = VerdictStatus::NoWitnessFound;
  v.trials = params.trials;
  return v;
}

TensorWlpReport check_truncated_extension_wlp(const ArtinianAlgebra& a, unsigned alpha_max,
                                              const SearchParams& params) {
  if (!a.hilbert().symmetric()) throw NonSymmetricHilbert();
  TensorWlpReport r;
  r.slp_on_a = find_witness(a, LefschetzProperty::SLP, params);
  for (unsigned alpha = 1; alpha <= alpha_max; ++alpha) {
    ArtinianAlgebra b = tensor_truncated(a, alpha, &r.extension_variable);
    r.wlp_per_alpha.push_back(find_witness(b, LefschetzProperty::WLP, params));
  }
  for (const auto& w : r.wlp_per_alpha) {
    if (r.slp_on_a.is_witness() && w.status == VerdictStatus::DefinitelyNo) {
      r.contradiction = true;
      r.consistent = false;
    }
    if (r.slp_on_a.is_witness() && w.status == VerdictStatus::NoWitnessFound) r.consistent = false;
    if (r.slp_on_a.status == VerdictStatus::DefinitelyNo && w.is_witness()) {
      // A definite SLP failure allows WLP for small alpha; only the full
      // quantifier would contradict.  Nothing to flag.
    }
  }
  return r;
}

}  // namespace lefkit
