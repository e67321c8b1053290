#pragma once

#include "lefkit/jordan.hpp"
#include "lefkit/lefschetz.hpp"

namespace lefkit {

/// Invertible change of variables carrying the chosen linear form to the
/// last variable: forward maps the lift of z exactly to x_n.
struct CoordinateChange {
  QMatrix forward;
  QMatrix inverse;
  bool is_identity() const { return forward == QMatrix::identity(forward.rows()); }
};

/// Rewrites the ideal in coordinates where z becomes the last variable.
/// The pivot is the last variable with a nonzero coefficient in z.
std::pair<IdealHandle, CoordinateChange> normalize_last_variable(const IdealHandle& i,
                                                                 const LinearForm& z);

/// Ideal generated by the lowest x_n-parts of a reduced grevlex basis.
/// Expects normalized coordinates (distinguished variable last); validity
/// is certified by the Hilbert-function identity checked in gr_algebra.
IdealHandle in_prime_ideal(const IdealHandle& i);

/// The associated graded algebra of A along (z), presented as R modulo the
/// lowest-part ideal in normalized coordinates.
struct GrAlgebra {
  ArtinianAlgebra algebra;      // R / In'(I_norm)
  ArtinianAlgebra normalized;   // R / I_norm, isomorphic to the input
  LinearForm z_star;            // the last variable
  CoordinateChange change;
};
GrAlgebra gr_algebra(const ArtinianAlgebra& a, const LinearForm& z);

/// The Jordan profile of x z on A matches that of x z* on the associated
/// graded algebra.
struct JordanInvarianceReport {
  JordanProfile on_algebra;
  JordanProfile on_graded;
  bool equal = false;
};
JordanInvarianceReport check_gr_jordan_invariance(const ArtinianAlgebra& a, const LinearForm& z);

enum class TransferFlag { Consistent, Contradiction, Inconclusive };
std::string to_string(TransferFlag f);

/// Witness searches for WLP and SLP on both A and Gr_(z)(A).  Consistent
/// when the verdicts agree; Contradiction only when a definite structural
/// certificate on one side meets a witness on the other.
struct LefschetzTransferReport {
  LefschetzVerdict a_wlp, a_slp, gr_wlp, gr_slp;
  TransferFlag wlp_flag = TransferFlag::Inconclusive;
  TransferFlag slp_flag = TransferFlag::Inconclusive;
  bool contradiction() const {
    return wlp_flag == TransferFlag::Contradiction || slp_flag == TransferFlag::Contradiction;
  }
};
LefschetzTransferReport check_gr_lefschetz_transfer(const ArtinianAlgebra& a, const LinearForm& z,
                                                    const SearchParams& params = {});

/// R/I, R/In(I) and R/In'(I) share one Hilbert series.
struct HilbertTripleReport {
  HilbertSeries h_algebra, h_initial, h_lowest_part;
  bool equal = false;
};
HilbertTripleReport check_hilbert_triple(const IdealHandle& i, const LinearForm& z);

}  // namespace lefkit
