#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lefkit/algebra.hpp"

namespace lefkit {

struct NonSymmetricHilbert : Error {
  NonSymmetricHilbert() : Error("Hilbert series is not symmetric") {}
};

enum class LefschetzProperty { WLP, SLP };

/// Sperner / CoSperner data.  The Sperner vector is only defined when the
/// Hilbert series is unimodal and symmetric (the usable content of the
/// SI-sequence hypothesis); otherwise a note says why it is omitted.
struct LefschetzStats {
  std::int64_t sperner = 0;
  std::int64_t cosperner = 0;
  std::optional<std::vector<std::int64_t>> sperner_vector;  // SP_1 .. SP_c
  std::string sperner_vector_note;
};

LefschetzStats stats(const ArtinianAlgebra& a);
LefschetzStats stats(const HilbertSeries& h);

enum class VerdictStatus { Witness, DefinitelyNo, NoWitnessFound };

std::string to_string(VerdictStatus s);
std::string to_string(LefschetzProperty p);

struct DegreeCheck {
  int from_degree = 0;
  unsigned power = 1;
  std::size_t dim_from = 0, dim_to = 0, rank = 0;
  bool ok = false;
};

/// Structural certificate behind a DefinitelyNo verdict: either the Hilbert
/// function is asymmetric (SLP only) or a socle element forces a required
/// injective map to fail for every linear form.
struct NoCertificate {
  std::string kind;  // "asymmetric_hilbert" or "socle_obstruction"
  int degree = -1;
  std::vector<Rational> socle_element;  // coordinates in the degree basis
  std::string detail;
};

struct LefschetzVerdict {
  LefschetzProperty property = LefschetzProperty::WLP;
  VerdictStatus status = VerdictStatus::NoWitnessFound;
  std::optional<LinearForm> witness;
  std::optional<NoCertificate> certificate;
  unsigned trials = 0;
  std::vector<DegreeCheck> per_degree;
  bool cross_check_ok = true;

  bool is_witness() const { return status == VerdictStatus::Witness; }
};

/// Definition-level WLP check for one form, cross-validated against the
/// rank and codimension criteria.
LefschetzVerdict check_wlp(const ArtinianAlgebra& a, const LinearForm& g);

/// Definition-level SLP check for one form; asymmetric Hilbert functions
/// yield DefinitelyNo regardless of g.
LefschetzVerdict check_slp(const ArtinianAlgebra& a, const LinearForm& g);

struct SearchParams {
  unsigned trials = 8;
  std::uint64_t seed = 0;
  std::uint64_t coeff_bound = 1000;
};

/// Candidate order: each single variable, the all-ones form, then seeded
/// uniform integer coefficient vectors in [1, coeff_bound].
std::vector<LinearForm> witness_candidates(std::size_t nvars, const SearchParams& params);

/// Returns the first witness in candidate order; DefinitelyNo when a
/// structural certificate applies; NoWitnessFound(trials) otherwise.
LefschetzVerdict find_witness(const ArtinianAlgebra& a, LefschetzProperty property,
                              const SearchParams& params = {});

/// WLP searches on A[u]/(u^alpha) for alpha = 1..alpha_max, compared with
/// the SLP verdict on A.  Requires a symmetric Hilbert series.
struct TensorWlpReport {
  LefschetzVerdict slp_on_a;
  std::vector<LefschetzVerdict> wlp_per_alpha;  // forms live on the extended ring
  std::string extension_variable;
  bool contradiction = false;  // definite certificate against a witness
  bool consistent = true;      // no alpha ran against the SLP verdict
};
TensorWlpReport check_truncated_extension_wlp(const ArtinianAlgebra& a, unsigned alpha_max,
                                              const SearchParams& params = {});

}  // namespace lefkit
