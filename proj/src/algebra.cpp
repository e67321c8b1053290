#include "lefkit/algebra.hpp"

#include <algorithm>
#include <cassert>

#include "lefkit/errors.hpp"

namespace lefkit {

LinearForm LinearForm::variable(std::size_t index, std::size_t nvars) {
  std::vector<Rational> c(nvars, Rational(0));
  c[index] = 1;
  return LinearForm(std::move(c));
}

LinearForm LinearForm::ones(std::size_t nvars) {
  return LinearForm(std::vector<Rational>(nvars, Rational(1)));
}

bool LinearForm::is_zero() const {
  for (const auto& c : coeffs)
    if (c != 0) return false;
  return true;
}

Polynomial LinearForm::to_polynomial() const {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) terms.push_back({coeffs[i], Monomial::variable(i, coeffs.size())});
  return Polynomial::from_terms(coeffs.size(), std::move(terms));
}

ArtinianAlgebra ArtinianAlgebra::zero_algebra(const VariableSet& vars) {
  IdealHandle unit(vars, {Polynomial::constant(vars.size(), 1)});
  auto impl = std::make_shared<Impl>(std::move(unit));
  impl->zero = true;
  return ArtinianAlgebra(std::move(impl));
}

ArtinianAlgebra ArtinianAlgebra::build(const IdealHandle& ideal) {
  const std::size_t n = ideal.vars().size();
  const GBasis& gb = ideal.reduced_groebner();
  const std::vector<Monomial> leads = gb.leading_monomials();

  for (const auto& m : leads) {
    if (m.is_one()) {
      // Unit ideal: the quotient is the zero algebra, a sentinel not an error.
      auto impl = std::make_shared<Impl>(ideal);
      impl->zero = true;
      return ArtinianAlgebra(std::move(impl));
    }
  }

  // Artinian iff the leading term ideal contains a pure power of every
  // variable.
  for (std::size_t v = 0; v < n; ++v) {
    bool found = false;
    for (const auto& m : leads) {
      if (m.exponent(v) == 0) continue;
      bool pure = true;
      for (std::size_t w = 0; w < n && pure; ++w)
        if (w != v && m.exponent(w) != 0) pure = false;
      if (pure) {
        found = true;
        break;
      }
    }
    if (!found) throw NotArtinian(ideal.vars().name(v));
  }

  auto impl = std::make_shared<Impl>(ideal);
  std::vector<std::int64_t> dims;
  for (int d = 0;; ++d) {
    std::vector<Monomial> standard;
    for (const auto& m : monomials_of_degree(n, d)) {
      bool reducible = false;
      for (const auto& lm : leads)
        if (lm.divides(m)) {
          reducible = true;
          break;
        }
      if (!reducible) standard.push_back(m);
    }
    if (standard.empty()) break;
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < standard.size(); ++i) index[standard[i]] = i;
    impl->basis.push_back(std::move(standard));
    impl->basis_index.push_back(std::move(index));
    dims.push_back(static_cast<std::int64_t>(impl->basis.back().size()));
  }
  impl->socle_degree = static_cast<int>(dims.size()) - 1;
  impl->hilbert = HilbertSeries(0, dims);
  impl->dimension = impl->hilbert.total();
  return ArtinianAlgebra(std::move(impl));
}

std::size_t ArtinianAlgebra::dim(int degree) const {
  if (degree < 0 || degree > impl_->socle_degree) return 0;
  return impl_->basis[static_cast<std::size_t>(degree)].size();
}

const std::vector<Monomial>& ArtinianAlgebra::basis(int degree) const {
  static const std::vector<Monomial> empty;
  if (degree < 0 || degree > impl_->socle_degree) return empty;
  return impl_->basis[static_cast<std::size_t>(degree)];
}

std::vector<Rational> ArtinianAlgebra::coordinates(const Polynomial& f, int degree) const {
  std::vector<Rational> v(dim(degree), Rational(0));
  if (is_zero_algebra()) return v;
  const Polynomial nf = normal_form(f, impl_->ideal.reduced_groebner());
  if (degree < 0 || degree > impl_->socle_degree) {
    if (!nf.is_zero()) throw Error("nonzero normal form outside the socle range");
    return v;
  }
  const auto& index = impl_->basis_index[static_cast<std::size_t>(degree)];
  for (const auto& t : nf.terms()) {
    auto it = index.find(t.mono);
    if (it == index.end()) throw Error("normal form term is not a standard monomial of the degree");
    v[it->second] = t.coeff;
  }
  return v;
}

std::vector<QMatrix> ArtinianAlgebra::multiplication_maps(const Polynomial& f,
                                                          int degree_hint) const {
  const int c = impl_->socle_degree;
  int e = degree_hint;
  if (!f.is_zero()) {
    auto hd = f.homogeneous_degree();
    if (!hd) throw NonHomogeneousInput();
    e = *hd;
  }
  std::vector<QMatrix> maps;
  if (is_zero_algebra()) return maps;
  const GBasis& gb = impl_->ideal.reduced_groebner();
  for (int i = 0; i <= c; ++i) {
    QMatrix m(dim(i + e), dim(i));
    if (!f.is_zero() && m.rows() > 0) {
      const auto& index = impl_->basis_index[static_cast<std::size_t>(i + e)];
      const auto& source = basis(i);
      for (std::size_t j = 0; j < source.size(); ++j) {
        Polynomial prod = f * Polynomial::monomial(f.nvars(), Rational(1), source[j]);
        Polynomial nf = normal_form(prod, gb);
        for (const auto& t : nf.terms()) m.at(index.at(t.mono), j) = t.coeff;
      }
    }
    maps.push_back(std::move(m));
  }
  return maps;
}

const std::vector<std::vector<QMatrix>>& ArtinianAlgebra::variable_maps() const {
  std::lock_guard<std::mutex> lock(impl_->cache_mutex);
  if (impl_->var_maps.empty() && !is_zero_algebra()) {
    const std::size_t n = vars().size();
    for (std::size_t v = 0; v < n; ++v)
      impl_->var_maps.push_back(multiplication_maps(Polynomial::variable(n, v)));
  }
  return impl_->var_maps;
}

std::vector<QMatrix> ArtinianAlgebra::multiplication_maps(const LinearForm& g) const {
  const auto& vm = variable_maps();
  std::vector<QMatrix> maps;
  if (is_zero_algebra()) return maps;
  const int c = impl_->socle_degree;
  for (int i = 0; i <= c; ++i) {
    QMatrix m(dim(i + 1), dim(i));
    for (std::size_t v = 0; v < g.coeffs.size(); ++v) {
      if (g.coeffs[v] == 0) continue;
      const QMatrix& mv = vm[v][static_cast<std::size_t>(i)];
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t col = 0; col < m.cols(); ++col) {
          if (mv.at(r, col) == 0) continue;
          m.at(r, col) += g.coeffs[v] * mv.at(r, col);
        }
    }
    maps.push_back(std::move(m));
  }
  return maps;
}

bool AlgebraElement::is_zero() const {
  for (const auto& [d, v] : coords)
    for (const auto& c : v)
      if (c != 0) return false;
  return true;
}

AlgebraElement element_of(const ArtinianAlgebra& a, const Polynomial& f) {
  AlgebraElement e;
  if (a.is_zero_algebra()) return e;
  const Polynomial nf = normal_form(f, a.ideal().reduced_groebner());
  for (const auto& comp : nf.homogeneous_components()) {
    const int d = *comp.homogeneous_degree();
    std::vector<Rational> v(a.dim(d), Rational(0));
    for (const auto& t : comp.terms()) {
      // Terms of a normal form are standard monomials.
      const auto& b = a.basis(d);
      auto it = std::find(b.begin(), b.end(), t.mono);
      v[static_cast<std::size_t>(it - b.begin())] = t.coeff;
    }
    e.coords[d] = std::move(v);
  }
  return e;
}

PowerRanks rank_of_power(const ArtinianAlgebra& a, const LinearForm& g, unsigned k) {
  PowerRanks out;
  if (a.is_zero_algebra()) return out;
  const int c = a.socle_degree();
  if (k == 0) {
    for (int i = 0; i <= c; ++i) {
      out.per_degree.push_back(a.dim(i));
      out.global += a.dim(i);
    }
    return out;
  }
  const auto maps = a.multiplication_maps(g);
  for (int i = 0; i <= c; ++i) {
    // Product M_{i+k-1} ... M_i, degreewise.
    QMatrix p = maps[static_cast<std::size_t>(i)];
    for (unsigned step = 1; step < k; ++step) {
      const int level = i + static_cast<int>(step);
      if (level > c) {
        p = QMatrix(0, a.dim(i));
        break;
      }
      p = maps[static_cast<std::size_t>(level)] * p;
    }
    const std::size_t r = (p.rows() == 0 || p.cols() == 0) ? 0 : rank(p);
    out.per_degree.push_back(r);
    out.global += r;
  }
  return out;
}

SocleData socle(const ArtinianAlgebra& a) {
  SocleData s;
  if (a.is_zero_algebra()) return s;
  const auto& vm = a.variable_maps();
  const int c = a.socle_degree();
  for (int d = 0; d <= c; ++d) {
    QMatrix stacked(0, a.dim(d));
    for (std::size_t v = 0; v < a.vars().size(); ++v)
      stacked = stacked.stack_rows(vm[v][static_cast<std::size_t>(d)]);
    auto kern = kernel_basis(stacked);
    QMatrix basis = column_echelon(matrix_from_columns(a.dim(d), kern));
    s.dimension += basis.cols();
    if (basis.cols() > 0 && s.min_degree < 0) s.min_degree = d;
    s.per_degree.push_back(std::move(basis));
  }
  return s;
}

bool is_gorenstein(const ArtinianAlgebra& a) {
  if (a.is_zero_algebra()) return false;
  return socle(a).dimension == 1;
}

ColonQuotient quotient_by_colon(const ArtinianAlgebra& a, const LinearForm& z, unsigned k) {
  const Polynomial zp = z.to_polynomial();
  IdealHandle c = colon_power(a.ideal(), zp, k);
  if (c.is_unit_ideal()) return ColonQuotient{true, std::nullopt, c};
  ArtinianAlgebra q = ArtinianAlgebra::build(c);
  return ColonQuotient{false, std::move(q), std::move(c)};
}

ArtinianAlgebra tensor_truncated(const ArtinianAlgebra& a, unsigned alpha,
                                 std::string* fresh_name) {
  if (alpha == 0) throw Error("truncation length must be positive");
  std::string chosen;
  VariableSet ext = a.vars().with_fresh_variable("u", &chosen);
  if (fresh_name) *fresh_name = chosen;
  std::vector<Polynomial> gens;
  for (const auto& g : a.ideal().generators()) gens.push_back(g.extend_variables(1));
  gens.push_back(Polynomial::variable(ext.size(), ext.size() - 1).pow(alpha));
  ArtinianAlgebra out = ArtinianAlgebra::build(IdealHandle(ext, std::move(gens)));
  if (out.hilbert() != a.hilbert().times_truncation(alpha))
    throw Error("truncated extension failed the Hilbert series identity");
  return out;
}

ArtinianAlgebra apolar_algebra(const Polynomial& f, const VariableSet& vars) {
  if (f.is_zero()) throw ZeroPolynomial();
  auto hd = f.homogeneous_degree();
  if (!hd) throw NonHomogeneousInput();
  const int e = *hd;
  const std::size_t n = vars.size();

  auto falling = [](int b, int a) {
    Integer r(1);
    for (int i = 0; i < a; ++i) r *= (b - i);
    return r;
  };

  std::vector<Polynomial> gens;
  for (int d = 1; d <= e; ++d) {
    // Catalecticant: degree-d differential operators applied to f, mapping
    // R_d into R_{e-d}.
    const auto ops = monomials_of_degree(n, d);
    const auto images = monomials_of_degree(n, e - d);
    std::map<Monomial, std::size_t> image_index;
    for (std::size_t i = 0; i < images.size(); ++i) image_index[images[i]] = i;
    QMatrix cat(images.size(), ops.size());
    for (std::size_t j = 0; j < ops.size(); ++j) {
      for (const auto& t : f.terms()) {
        bool ok = true;
        for (std::size_t v = 0; v < n && ok; ++v)
          if (t.mono.exponent(v) < ops[j].exponent(v)) ok = false;
        if (!ok) continue;
        Integer scale(1);
        for (std::size_t v = 0; v < n; ++v)
          scale *= falling(t.mono.exponent(v), ops[j].exponent(v));
        cat.at(image_index.at(t.mono.divided_by(ops[j])), j) += t.coeff * Rational(scale);
      }
    }
    for (const auto& k : kernel_basis(cat)) {
      std::vector<Term> terms;
      for (std::size_t j = 0; j < ops.size(); ++j)
        if (k[j] != 0) terms.push_back({k[j], ops[j]});
      gens.push_back(Polynomial::from_terms(n, std::move(terms)).primitive_part());
    }
  }
  for (const auto& m : monomials_of_degree(n, e + 1))
    gens.push_back(Polynomial::monomial(n, Rational(1), m));
  return ArtinianAlgebra::build(IdealHandle(vars, std::move(gens)));
}

}  // namespace lefkit
