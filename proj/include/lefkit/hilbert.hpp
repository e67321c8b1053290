#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lefkit {

/// Integer coefficient vector with an offset: sum coeffs[k] q^{offset+k}.
/// Leading and trailing zeros are trimmed; the zero series is empty.
class HilbertSeries {
 public:
  HilbertSeries() = default;
  HilbertSeries(int offset, std::vector<std::int64_t> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  int offset() const { return offset_; }
  int top_degree() const { return offset_ + static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  std::int64_t at(int degree) const;
  std::int64_t total() const;
  std::int64_t max_coeff() const;

  bool symmetric() const;
  bool unimodal() const;
  /// For a symmetric series h with h(q) = q^d h(1/q): returns d = min + max
  /// degree, i.e. twice the reflecting degree.  Series must be nonzero.
  int twice_reflecting_degree() const { return offset_ + top_degree(); }

  HilbertSeries operator+(const HilbertSeries& rhs) const;
  HilbertSeries shifted(int k) const;
  /// Multiplication by 1 + q + ... + q^{len-1}.
  HilbertSeries times_truncation(unsigned len) const;

  bool operator==(const HilbertSeries& rhs) const {
    return (is_zero() && rhs.is_zero()) || (offset_ == rhs.offset_ && coeffs_ == rhs.coeffs_);
  }
  bool operator!=(const HilbertSeries& rhs) const { return !(*this == rhs); }

  std::string to_string() const;

 private:
  int offset_ = 0;
  std::vector<std::int64_t> coeffs_;
};

/// Hilbert series of a complete intersection with the given generator
/// degrees: product of (1 + q + ... + q^{d-1}).  Independent oracle for
/// algebra builds.
HilbertSeries complete_intersection_series(const std::vector<int>& degrees);

}  // namespace lefkit
