#pragma once

#include <optional>
#include <vector>

#include "lefkit/matrix.hpp"
#include "lefkit/monomial.hpp"
#include "lefkit/rational.hpp"

namespace lefkit {

struct Term {
  Rational coeff;
  Monomial mono;
};

/// Sparse multivariate polynomial over the rationals.  Terms are kept
/// strictly decreasing in grevlex with no zero coefficients; this is the
/// canonical form all arithmetic maintains.
class Polynomial {
 public:
  Polynomial() : nvars_(0) {}
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  /// Normalizes (sorts, merges, drops zeros) an arbitrary term list.
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms);
  static Polynomial zero(std::size_t nvars) { return Polynomial(nvars); }
  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial monomial(std::size_t nvars, const Rational& c, const Monomial& m);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Largest term in grevlex; polynomial must be nonzero.
  const Term& leading_term() const { return terms_.front(); }

  /// Present iff all terms share one degree (and the polynomial is nonzero).
  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }
  int total_degree() const;  // -1 for the zero polynomial

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial pow(unsigned e) const;

  bool operator==(const Polynomial& rhs) const {
    if (nvars_ != rhs.nvars_ || terms_.size() != rhs.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (terms_[i].mono != rhs.terms_[i].mono || terms_[i].coeff != rhs.terms_[i].coeff)
        return false;
    return true;
  }
  bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

  /// Splits into homogeneous components, highest degree first.
  std::vector<Polynomial> homogeneous_components() const;

  /// Scales so that coefficients are coprime integers and the leading
  /// coefficient is positive.  Zero stays zero.
  Polynomial primitive_part() const;
  /// Divides by the leading coefficient.
  Polynomial monic() const;

  /// Image under the linear change of variables x_i -> sum_j m[i][j] x_j.
  /// Throws SingularMatrix when m is not invertible.
  Polynomial substitute_linear(const QMatrix& m) const;

  /// Appends `extra` fresh variables (exponents zero) at the end.
  Polynomial extend_variables(std::size_t extra) const;

 private:
  std::size_t nvars_;
  std::vector<Term> terms_;
};

/// Lowest part of f with respect to powers of the last variable: writing
/// f = sum_j f_j x_n^j with f_j free of x_n, returns f_j x_n^j for the
/// minimal j with f_j != 0.  Throws ZeroPolynomial on zero input.
Polynomial in_prime_part(const Polynomial& f);

/// e_i(x_1^r, ..., x_n^r); homogeneous of degree i*r.
Polynomial elementary_symmetric(unsigned i, std::size_t nvars, unsigned power = 1);

/// x_1^d + ... + x_n^d.
Polynomial power_sum(unsigned d, std::size_t nvars);

/// Sum of all monomials of degree d.
Polynomial complete_homogeneous(unsigned d, std::size_t nvars);

}  // namespace lefkit
