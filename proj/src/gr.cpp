#include "lefkit/gr.hpp"

#include "lefkit/errors.hpp"

namespace lefkit {

std::string to_string(TransferFlag f) {
  switch (f) {
    case TransferFlag::Consistent: return "consistent";
    case TransferFlag::Contradiction: return "contradiction";
    case TransferFlag::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::pair<IdealHandle, CoordinateChange> normalize_last_variable(const IdealHandle& i,
                                                                 const LinearForm& z) {
  if (z.is_zero()) throw ZeroLinearForm();
  const std::size_t n = i.vars().size();
  if (z.nvars() != n) throw Error("linear form has the wrong variable count");

  std::size_t pivot = n;
  for (std::size_t j = n; j-- > 0;) {
    if (z.coeffs[j] != 0) {
      pivot = j;
      break;
    }
  }

  QMatrix forward = QMatrix::identity(n);
  const std::size_t last = n - 1;
  // Send the pivot variable to (x_n - sum of the other terms of z) / c_pivot
  // so that z maps exactly to x_n; swap roles with x_n when the pivot is
  // interior (its coefficient in z is then zero).
  const Rational cp = z.coeffs[pivot];
  for (std::size_t j = 0; j < n; ++j) forward.at(pivot, j) = 0;
  forward.at(pivot, last) = Rational(1) / cp;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == pivot) continue;
    if (z.coeffs[j] != 0) {
      Rational v = -z.coeffs[j] / cp;
      forward.at(pivot, j) = std::move(v);
    }
  }
  if (pivot != last) {
    for (std::size_t j = 0; j < n; ++j) forward.at(last, j) = 0;
    forward.at(last, pivot) = 1;
  }

  auto inv = inverse(forward);
  if (!inv) throw SingularMatrix();

  // The substitution must carry z to the last variable.
  if (z.to_polynomial().substitute_linear(forward) != Polynomial::variable(n, last))
    throw Error("normalization did not map z to the last variable");

  std::vector<Polynomial> gens;
  for (const auto& g : i.generators())
    gens.push_back(g.substitute_linear(forward).primitive_part());
  return {IdealHandle(i.vars(), std::move(gens)), CoordinateChange{forward, *inv}};
}

IdealHandle in_prime_ideal(const IdealHandle& i) {
  const GBasis& gb = i.reduced_groebner();
  std::vector<Polynomial> gens;
  for (const auto& g : gb.elements) gens.push_back(in_prime_part(g).primitive_part());
  return IdealHandle(i.vars(), std::move(gens));
}

GrAlgebra gr_algebra(const ArtinianAlgebra& a, const LinearForm& z) {
  if (z.is_zero()) throw ZeroLinearForm();
  auto [normalized_ideal, change] = normalize_last_variable(a.ideal(), z);
  IdealHandle lowest = in_prime_ideal(normalized_ideal);

  // In(In'(I)) = In(I) under grevlex with the distinguished variable last.
  const auto lm_orig = normalized_ideal.reduced_groebner().leading_monomials();
  const auto lm_low = lowest.reduced_groebner().leading_monomials();
  if (lm_orig != lm_low) throw Error("lowest-part ideal broke the initial-ideal identity");

  GrAlgebra out{ArtinianAlgebra::build(lowest), ArtinianAlgebra::build(normalized_ideal),
                LinearForm::variable(a.vars().size() - 1, a.vars().size()), change};
  if (out.algebra.hilbert() != a.hilbert())
    throw Error("associated graded algebra failed the Hilbert identity");
  return out;
}

JordanInvarianceReport check_gr_jordan_invariance(const ArtinianAlgebra& a, const LinearForm& z) {
  JordanInvarianceReport rep;
  rep.on_algebra = jordan_profile(a, z);
  GrAlgebra gr = gr_algebra(a, z);
  rep.on_graded = jordan_profile(gr.algebra, gr.z_star);
  rep.equal = rep.on_algebra == rep.on_graded;
  return rep;
}

namespace {

TransferFlag classify(const LefschetzVerdict& lhs, const LefschetzVerdict& rhs) {
  const bool lw = lhs.is_witness(), rw = rhs.is_witness();
  if (lw && rw) return TransferFlag::Consistent;
  if (!lw && !rw) return TransferFlag::Consistent;
  if ((lw && rhs.status == VerdictStatus::DefinitelyNo) ||
      (rw && lhs.status == VerdictStatus::DefinitelyNo))
    return TransferFlag::Contradiction;
  return TransferFlag::Inconclusive;
}

}  // namespace

LefschetzTransferReport check_gr_lefschetz_transfer(const ArtinianAlgebra& a, const LinearForm& z,
                                                    const SearchParams& params) {
  LefschetzTransferReport rep;
  GrAlgebra gr = gr_algebra(a, z);
  rep.a_wlp = find_witness(a, LefschetzProperty::WLP, params);
  rep.a_slp = find_witness(a, LefschetzProperty::SLP, params);
  rep.gr_wlp = find_witness(gr.algebra, LefschetzProperty::WLP, params);
  rep.gr_slp = find_witness(gr.algebra, LefschetzProperty::SLP, params);
  rep.wlp_flag = classify(rep.a_wlp, rep.gr_wlp);
  rep.slp_flag = classify(rep.a_slp, rep.gr_slp);
  return rep;
}

HilbertTripleReport check_hilbert_triple(const IdealHandle& i, const LinearForm& z) {
  HilbertTripleReport rep;
  ArtinianAlgebra a = ArtinianAlgebra::build(i);
  rep.h_algebra = a.hilbert();
  rep.h_initial = ArtinianAlgebra::build(leading_term_ideal(i)).hilbert();
  rep.h_lowest_part = gr_algebra(a, z).algebra.hilbert();
  rep.equal = rep.h_algebra == rep.h_initial && rep.h_algebra == rep.h_lowest_part;
  return rep;
}

}  // namespace lefkit
