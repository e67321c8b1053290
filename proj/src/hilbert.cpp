#include "lefkit/hilbert.hpp"

#include <algorithm>

#include "lefkit/errors.hpp"

namespace lefkit {

HilbertSeries::HilbertSeries(int offset, std::vector<std::int64_t> coeffs)
    : offset_(offset), coeffs_(std::move(coeffs)) {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
  offset_ += static_cast<int>(lead);
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) offset_ = 0;
}

std::int64_t HilbertSeries::at(int degree) const {
  const int k = degree - offset_;
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

std::int64_t HilbertSeries::total() const {
  std::int64_t t = 0;
  for (auto c : coeffs_) t += c;
  return t;
}

std::int64_t HilbertSeries::max_coeff() const {
  std::int64_t m = 0;
  for (auto c : coeffs_) m = std::max(m, c);
  return m;
}

bool HilbertSeries::symmetric() const {
  if (coeffs_.empty()) return true;
  std::size_t n = coeffs_.size();
  for (std::size_t i = 0; i < n / 2; ++i)
    if (coeffs_[i] != coeffs_[n - 1 - i]) return false;
  return true;
}

bool HilbertSeries::unimodal() const {
  std::size_t i = 0;
  while (i + 1 < coeffs_.size() && coeffs_[i] <= coeffs_[i + 1]) ++i;
  while (i + 1 < coeffs_.size() && coeffs_[i] >= coeffs_[i + 1]) ++i;
  return i + 1 >= coeffs_.size() || coeffs_.empty();
}

HilbertSeries HilbertSeries::operator+(const HilbertSeries& rhs) const {
  if (is_zero()) return rhs;
  if (rhs.is_zero()) return *this;
  const int lo = std::min(offset_, rhs.offset_);
  const int hi = std::max(top_degree(), rhs.top_degree());
  std::vector<std::int64_t> c(static_cast<std::size_t>(hi - lo + 1), 0);
  for (int d = lo; d <= hi; ++d) c[static_cast<std::size_t>(d - lo)] = at(d) + rhs.at(d);
  return HilbertSeries(lo, std::move(c));
}

HilbertSeries HilbertSeries::shifted(int k) const {
  if (is_zero()) return *this;
  return HilbertSeries(offset_ + k, coeffs_);
}

HilbertSeries HilbertSeries::times_truncation(unsigned len) const {
  if (is_zero() || len == 0) return HilbertSeries();
  std::vector<std::int64_t> c(coeffs_.size() + len - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (unsigned j = 0; j < len; ++j) c[i + j] += coeffs_[i];
  return HilbertSeries(offset_, std::move(c));
}

std::string HilbertSeries::to_string() const {
  if (is_zero()) return "0";
  std::string s = "(";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(coeffs_[i]);
  }
  s += ")";
  if (offset_ != 0) s += " starting at q^" + std::to_string(offset_);
  return s;
}

HilbertSeries complete_intersection_series(const std::vector<int>& degrees) {
  HilbertSeries h(0, {1});
  for (int d : degrees) {
    if (d <= 0) throw Error("complete intersection degrees must be positive");
    h = h.times_truncation(static_cast<unsigned>(d));
  }
  return h;
}

}  // namespace lefkit
