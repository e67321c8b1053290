#include "lefkit/monomial.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace lefkit {

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), 0);
}

Monomial Monomial::one(std::size_t nvars) { return Monomial(std::vector<int>(nvars, 0)); }

Monomial Monomial::variable(std::size_t index, std::size_t nvars) {
  std::vector<int> e(nvars, 0);
  e[index] = 1;
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  assert(nvars() == rhs.nvars());
  std::vector<int> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += rhs.exps_[i];
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& m) const {
  assert(nvars() == m.nvars());
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > m.exps_[i]) return false;
  return true;
}

Monomial Monomial::divided_by(const Monomial& rhs) const {
  std::vector<int> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= rhs.exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::lcm_with(const Monomial& rhs) const {
  std::vector<int> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], rhs.exps_[i]);
  return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& rhs) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0 && rhs.exps_[i] > 0) return false;
  return true;
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  // Equal degree: the larger monomial has the negative last nonzero entry
  // of the exponent difference.
  for (std::size_t i = a.nvars(); i-- > 0;) {
    const int d = a.exponent(i) - b.exponent(i);
    if (d != 0) return d < 0 ? 1 : -1;
  }
  return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (kind_ == Kind::Grevlex) return grevlex_compare(a, b);
  int ta = 0, tb = 0;
  for (std::size_t i = tail_start_; i < a.nvars(); ++i) ta += a.exponent(i);
  for (std::size_t i = tail_start_; i < b.nvars(); ++i) tb += b.exponent(i);
  if (ta != tb) return ta < tb ? -1 : 1;
  return grevlex_compare(a, b);
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  std::vector<int> e(nvars, 0);
  // Enumerate all compositions of `degree` into nvars parts.
  auto rec = [&](auto&& self, std::size_t pos, int remaining) -> void {
    if (pos + 1 == nvars) {
      e[pos] = remaining;
      out.emplace_back(e);
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      e[pos] = v;
      self(self, pos + 1, remaining - v);
    }
    e[pos] = 0;
  };
  if (nvars == 0) {
    if (degree == 0) out.push_back(Monomial(std::vector<int>{}));
    return out;
  }
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return grevlex_compare(a, b) > 0; });
  return out;
}

}  // namespace lefkit
