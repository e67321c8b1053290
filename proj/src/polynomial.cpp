#include "lefkit/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "lefkit/errors.hpp"

namespace lefkit {

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grevlex_compare(a.mono, b.mono) > 0; });
  Polynomial p(nvars);
  for (auto& t : terms) {
    assert(t.mono.nvars() == nvars);
    if (t.coeff == 0) continue;
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  if (c != 0) p.terms_.push_back({c, Monomial::one(nvars)});
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  Polynomial p(nvars);
  p.terms_.push_back({Rational(1), Monomial::variable(index, nvars)});
  return p;
}

Polynomial Polynomial::monomial(std::size_t nvars, const Rational& c, const Monomial& m) {
  Polynomial p(nvars);
  if (c != 0) p.terms_.push_back({c, m});
  return p;
}

std::optional<int> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = terms_.front().mono.degree();
  for (const auto& t : terms_)
    if (t.mono.degree() != d) return std::nullopt;
  return d;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  assert(nvars_ == rhs.nvars_);
  Polynomial out(nvars_);
  out.terms_.reserve(terms_.size() + rhs.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < rhs.terms_.size()) {
    const int cmp = grevlex_compare(terms_[i].mono, rhs.terms_[j].mono);
    if (cmp > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      out.terms_.push_back(rhs.terms_[j++]);
    } else {
      Rational c = terms_[i].coeff + rhs.terms_[j].coeff;
      if (c != 0) out.terms_.push_back({std::move(c), terms_[i].mono});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
  for (; j < rhs.terms_.size(); ++j) out.terms_.push_back(rhs.terms_[j]);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const { return *this + (-rhs); }

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  assert(nvars_ == rhs.nvars_);
  std::map<Monomial, Rational> acc;
  for (const auto& a : terms_) {
    for (const auto& b : rhs.terms_) {
      Monomial m = a.mono * b.mono;
      Rational c = a.coeff * b.coeff;
      auto [it, inserted] = acc.emplace(std::move(m), c);
      if (!inserted) it->second += c;
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) terms.push_back({std::move(c), m});
  return from_terms(nvars_, std::move(terms));
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c == 0) return zero(nvars_);
  Polynomial out(*this);
  for (auto& t : out.terms_) {
    Rational v = t.coeff * c;
    t.coeff = std::move(v);
  }
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(nvars_, 1);
  Polynomial base(*this);
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

std::vector<Polynomial> Polynomial::homogeneous_components() const {
  std::map<int, std::vector<Term>> by_degree;
  for (const auto& t : terms_) by_degree[t.mono.degree()].push_back(t);
  std::vector<Polynomial> out;
  for (auto it = by_degree.rbegin(); it != by_degree.rend(); ++it)
    out.push_back(from_terms(nvars_, std::move(it->second)));
  return out;
}

Polynomial Polynomial::primitive_part() const {
  if (terms_.empty()) return *this;
  Integer den_lcm(1);
  for (const auto& t : terms_) den_lcm = lcm(den_lcm, t.coeff.get_den());
  Integer num_gcd(0);
  for (const auto& t : terms_) {
    Integer scaled = t.coeff.get_num() * (den_lcm / t.coeff.get_den());
    num_gcd = gcd(num_gcd, scaled);
  }
  Rational factor(den_lcm, num_gcd);
  if (terms_.front().coeff < 0) factor = -factor;
  factor.canonicalize();
  return *this * factor;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  Rational inv = 1 / terms_.front().coeff;
  return *this * inv;
}

Polynomial Polynomial::substitute_linear(const QMatrix& m) const {
  if (m.rows() != nvars_ || m.cols() != nvars_) throw Error("substitution matrix has wrong shape");
  if (rank(m) != nvars_) throw SingularMatrix();
  std::vector<Polynomial> image(nvars_, Polynomial::zero(nvars_));
  for (std::size_t i = 0; i < nvars_; ++i) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < nvars_; ++j)
      if (m.at(i, j) != 0) terms.push_back({m.at(i, j), Monomial::variable(j, nvars_)});
    image[i] = Polynomial::from_terms(nvars_, std::move(terms));
  }
  Polynomial out = Polynomial::zero(nvars_);
  for (const auto& t : terms_) {
    Polynomial prod = Polynomial::constant(nvars_, t.coeff);
    for (std::size_t i = 0; i < nvars_; ++i) {
      const int e = t.mono.exponent(i);
      if (e > 0) prod = prod * image[i].pow(static_cast<unsigned>(e));
    }
    out = out + prod;
  }
  return out;
}

Polynomial Polynomial::extend_variables(std::size_t extra) const {
  Polynomial out(nvars_ + extra);
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<int> e = t.mono.exponents();
    e.resize(nvars_ + extra, 0);
    terms.push_back({t.coeff, Monomial(std::move(e))});
  }
  return from_terms(nvars_ + extra, std::move(terms));
}

Polynomial in_prime_part(const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomial();
  const std::size_t last = f.nvars() - 1;
  int min_j = -1;
  for (const auto& t : f.terms()) {
    const int j = t.mono.exponent(last);
    if (min_j < 0 || j < min_j) min_j = j;
  }
  std::vector<Term> terms;
  for (const auto& t : f.terms())
    if (t.mono.exponent(last) == min_j) terms.push_back(t);
  return Polynomial::from_terms(f.nvars(), std::move(terms));
}

Polynomial elementary_symmetric(unsigned i, std::size_t nvars, unsigned power) {
  if (i < 1 || i > nvars) throw IndexOutOfRange("elementary symmetric index out of range");
  std::vector<Term> terms;
  std::vector<std::size_t> subset(i);
  auto rec = [&](auto&& self, std::size_t pos, std::size_t next) -> void {
    if (pos == i) {
      std::vector<int> e(nvars, 0);
      for (std::size_t k : subset) e[k] = static_cast<int>(power);
      terms.push_back({Rational(1), Monomial(std::move(e))});
      return;
    }
    for (std::size_t v = next; v < nvars; ++v) {
      subset[pos] = v;
      self(self, pos + 1, v + 1);
    }
  };
  rec(rec, 0, 0);
  return Polynomial::from_terms(nvars, std::move(terms));
}

Polynomial power_sum(unsigned d, std::size_t nvars) {
  std::vector<Term> terms;
  for (std::size_t v = 0; v < nvars; ++v) {
    std::vector<int> e(nvars, 0);
    e[v] = static_cast<int>(d);
    terms.push_back({Rational(1), Monomial(std::move(e))});
  }
  return Polynomial::from_terms(nvars, std::move(terms));
}

Polynomial complete_homogeneous(unsigned d, std::size_t nvars) {
  std::vector<Term> terms;
  for (const auto& m : monomials_of_degree(nvars, static_cast<int>(d)))
    terms.push_back({Rational(1), m});
  return Polynomial::from_terms(nvars, std::move(terms));
}

}  // namespace lefkit
