#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "lefkit/polynomial.hpp"
#include "lefkit/variables.hpp"

namespace lefkit {

/// Reduced Groebner basis: leading coefficients 1, no term of any element
/// divisible by another element's leading monomial.  Unique for the order.
struct GBasis {
  MonomialOrder order;
  std::vector<Polynomial> elements;

  /// Leading monomials under `order`.
  std::vector<Monomial> leading_monomials() const;
};

/// Homogeneous ideal with cached reduced Groebner bases per monomial order.
/// Handles share state; the cache fills idempotently under a lock.
class IdealHandle {
 public:
  IdealHandle(VariableSet vars, std::vector<Polynomial> generators);

  const VariableSet& vars() const { return impl_->vars; }
  const std::vector<Polynomial>& generators() const { return impl_->generators; }

  const GBasis& reduced_groebner(const MonomialOrder& order = MonomialOrder::grevlex()) const;

  bool is_zero_ideal() const { return impl_->generators.empty(); }
  /// True iff 1 lies in the ideal.
  bool is_unit_ideal() const;

 private:
  struct Impl {
    VariableSet vars;
    std::vector<Polynomial> generators;
    std::map<MonomialOrder, GBasis> cache;
    std::mutex mutex;
    Impl(VariableSet v, std::vector<Polynomial> g)
        : vars(std::move(v)), generators(std::move(g)) {}
  };
  std::shared_ptr<Impl> impl_;
};

/// Remainder of f on division by g: no term of the result is divisible by a
/// leading monomial of g, and f - result lies in the ideal spanned by g.
Polynomial normal_form(const Polynomial& f, const GBasis& g);

bool ideal_contains(const IdealHandle& i, const Polynomial& f);
bool ideal_equals(const IdealHandle& i, const IdealHandle& j);
IdealHandle ideal_sum(const IdealHandle& i, const IdealHandle& j);

/// I ∩ J by the auxiliary-variable construction: generators t·I + (1-t)·J
/// in a ring with t appended last, t eliminated with the block order.  The
/// transient non-homogeneity stays inside; the result is returned through
/// its homogeneous components.
IdealHandle intersection(const IdealHandle& i, const IdealHandle& j);

/// I : f = { g | g f ∈ I } for homogeneous nonzero f, via generators of
/// I ∩ (f) each divided exactly by f.
IdealHandle colon(const IdealHandle& i, const Polynomial& f);

/// I : f^k as k successive single colons.
IdealHandle colon_power(const IdealHandle& i, const Polynomial& f, unsigned k);

/// Degrees of a minimal homogeneous generating set, found degree by degree:
/// the count in degree d is dim I_d - dim(R_1 · I_{d-1}).
std::vector<std::pair<int, std::size_t>> minimal_generators(const IdealHandle& i);

std::size_t minimal_generator_count(const IdealHandle& i);

/// Monomial ideal spanned by the leading monomials of the reduced basis.
IdealHandle leading_term_ideal(const IdealHandle& i,
                               const MonomialOrder& order = MonomialOrder::grevlex());

/// Quotient of g by f when the division is exact; throws otherwise.
Polynomial exact_divide(const Polynomial& g, const Polynomial& f);

/// Buchberger criterion: every S-polynomial of the basis reduces to zero.
/// Test/verification helper; quadratic in the basis size.
bool is_groebner_basis(const GBasis& g);

namespace detail {
/// Reduced Groebner basis of arbitrary (possibly non-homogeneous)
/// generators.  The engine behind IdealHandle and intersection.
std::vector<Polynomial> buchberger_reduced(const std::vector<Polynomial>& gens,
                                           const MonomialOrder& order);
}  // namespace detail

}  // namespace lefkit
