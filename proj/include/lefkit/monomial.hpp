#pragma once

#include <cstdint>
#include <vector>

namespace lefkit {

/// Exponent vector with cached total degree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exps);
  static Monomial one(std::size_t nvars);
  static Monomial variable(std::size_t index, std::size_t nvars);

  std::size_t nvars() const { return exps_.size(); }
  int exponent(std::size_t i) const { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }
  int degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  Monomial operator*(const Monomial& rhs) const;
  bool divides(const Monomial& divisor_of) const;  // *this | divisor_of
  Monomial divided_by(const Monomial& rhs) const;  // exact; caller checks divisibility
  Monomial lcm_with(const Monomial& rhs) const;
  bool coprime(const Monomial& rhs) const;

  bool operator==(const Monomial& rhs) const { return exps_ == rhs.exps_; }
  bool operator!=(const Monomial& rhs) const { return !(*this == rhs); }
  /// Arbitrary strict order for container keys (not a term order).
  bool operator<(const Monomial& rhs) const { return exps_ < rhs.exps_; }

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

/// Term orders used by the library: graded reverse lexicographic, and the
/// block order that eliminates a tail block of variables (monomials are
/// compared by tail-block subdegree first, grevlex breaking ties).
class MonomialOrder {
 public:
  enum class Kind { Grevlex, EliminationBlock };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0); }
  static MonomialOrder elimination_block(std::size_t tail_start) {
    return MonomialOrder(Kind::EliminationBlock, tail_start);
  }

  Kind kind() const { return kind_; }
  std::size_t tail_start() const { return tail_start_; }

  /// -1, 0 or 1 as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  bool operator==(const MonomialOrder& rhs) const {
    return kind_ == rhs.kind_ && tail_start_ == rhs.tail_start_;
  }
  bool operator<(const MonomialOrder& rhs) const {
    if (kind_ != rhs.kind_) return kind_ < rhs.kind_;
    return tail_start_ < rhs.tail_start_;
  }

 private:
  MonomialOrder(Kind k, std::size_t split) : kind_(k), tail_start_(split) {}

  Kind kind_;
  std::size_t tail_start_;
};

int grevlex_compare(const Monomial& a, const Monomial& b);

/// All monomials in `nvars` variables of total degree `degree`, listed in
/// decreasing grevlex order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree);

}  // namespace lefkit
