#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lefkit/lefschetz.hpp"

namespace lefkit {

struct JordanBlock {
  unsigned size = 0;
  unsigned multiplicity = 0;
  bool operator==(const JordanBlock& o) const {
    return size == o.size && multiplicity == o.multiplicity;
  }
};

/// Block-size multiset of the nilpotent operator x z, derived from the rank
/// sequence r_k = rank(x z^k), never from an eigen-decomposition.
struct JordanProfile {
  std::vector<JordanBlock> blocks;        // sizes strictly decreasing
  std::vector<std::size_t> rank_sequence; // r_0 = dim A, ..., first zero

  unsigned nilpotency_index() const { return blocks.empty() ? 0 : blocks.front().size; }
  std::size_t block_count() const;  // r = dim A/(z)
  std::int64_t total_dimension() const;
  bool operator==(const JordanProfile& o) const { return blocks == o.blocks; }
};

JordanProfile jordan_profile(const ArtinianAlgebra& a, const LinearForm& z);

/// Graded subquotient N/D of the algebra, held per degree as column-echelon
/// bases in standard-monomial coordinates, plus chosen representatives.
struct GradedSubquotient {
  std::vector<QMatrix> numerator;        // N_d, degree 0..c
  std::vector<QMatrix> denominator;      // D_d, contained in N_d
  std::vector<QMatrix> representatives;  // columns of N_d spanning U_d mod D_d
  HilbertSeries hilbert;

  std::size_t dim(int degree) const;
  int min_degree() const { return hilbert.offset(); }
  int max_degree() const { return hilbert.top_degree(); }
};

struct CentralSimpleModule {
  unsigned block_size = 0;    // f_i
  unsigned multiplicity = 0;  // m_i = dim U_i
  GradedSubquotient u;
  HilbertSeries h_tilde;  // h_{U_i} * (1 + q + ... + q^{f_i - 1})
};

/// The nonzero successive quotients of (0 : z^{f_i}) + (z) descending in i.
struct CSMDecomposition {
  LinearForm z;
  JordanProfile profile;
  std::vector<CentralSimpleModule> modules;
};

CSMDecomposition csm_decompose(const ArtinianAlgebra& a, const LinearForm& z);

/// Action of g on the quotient bases, induced from multiplication in the
/// ambient algebra; maps U_d -> U_{d+1} for d = 0..c.
std::vector<QMatrix> module_action(const ArtinianAlgebra& a, const GradedSubquotient& u,
                                   const LinearForm& g);

/// Module-level SLP: x g^{b-a-2i} : U_{a+i} -> U_{b-i} bijective across the
/// support [a, b].
LefschetzVerdict check_module_slp(const ArtinianAlgebra& a, const GradedSubquotient& u,
                                  const LinearForm& g);

LefschetzVerdict find_module_witness(const ArtinianAlgebra& a, const GradedSubquotient& u,
                                     const SearchParams& params = {});

/// Hilbert-series structure of the decomposition over a Gorenstein algebra:
/// the truncation product formula, the sum identity with h_A, symmetry of
/// every h_{U_i}, the common reflecting degree (sigma(A)-1)/2, Sperner
/// additivity when the h_tilde are unimodal, and the sigma drop of
/// A/0:z^{f_s}.  Throws NotGorenstein.
struct CsmStructureReport {
  CSMDecomposition decomposition;
  bool product_formula_ok = false;
  bool sum_identity_ok = false;
  bool modules_symmetric_ok = false;
  bool reflecting_degree_ok = false;
  bool sperner_additivity_applicable = false;
  bool sperner_additivity_ok = true;
  bool sigma_drop_ok = false;
  HilbertSeries h_tilde_sum;

  bool ok() const {
    return product_formula_ok && sum_identity_ok && modules_symmetric_ok &&
           reflecting_degree_ok && sperner_additivity_ok && sigma_drop_ok;
  }
};
CsmStructureReport check_csm_hilbert_structure(const ArtinianAlgebra& a, const LinearForm& z);

/// Instance-level test of the SLP correspondence between A and the central
/// simple modules of (A, z), both directions:
///  - a single g witnessing SLP for every U_i forces an SLP witness for A;
///  - z witnessing SLP for A forces U_i concentrated in degree i-1.
struct CsmSlpTransferReport {
  CSMDecomposition decomposition;
  std::vector<LefschetzVerdict> per_module;
  std::optional<LinearForm> common_witness;
  std::optional<LefschetzVerdict> slp_on_a;
  bool forward_applicable = false;
  bool forward_ok = true;
  bool z_witnesses_a = false;
  bool concentration_ok = true;

  bool ok() const { return forward_ok && concentration_ok; }
};
CsmSlpTransferReport check_csm_slp_transfer(const ArtinianAlgebra& a, const LinearForm& z,
                                            const SearchParams& params = {});

/// For complete intersections: walks the colon chain I : z^k, requiring each
/// quotient to be a complete intersection or zero (HypothesisFails
/// otherwise), then checks every central simple module is principal
/// (dim U/mU = 1) with a symmetric Hilbert series.
struct ColonChainStep {
  unsigned power = 0;
  bool unit = false;
  std::vector<std::pair<int, std::size_t>> generator_degrees;
};
struct PrincipalCsmReport {
  std::vector<ColonChainStep> chain;
  unsigned chain_unit_power = 0;  // least k with I : z^k = (1)
  CSMDecomposition decomposition;
  bool principal_ok = false;
  bool symmetric_ok = false;

  bool ok() const { return principal_ok && symmetric_ok; }
};
PrincipalCsmReport check_principal_csm_chain(const ArtinianAlgebra& a, const LinearForm& z);

/// Rank criterion for the direct sum of the extended modules U_i tensored
/// with truncated polynomial rings, under the block action of g plus the
/// truncation variable.  True when the direct sum has the SLP for this g.
bool direct_sum_extension_has_slp(const ArtinianAlgebra& a, const CSMDecomposition& dec,
                                  const LinearForm& g);

}  // namespace lefkit
