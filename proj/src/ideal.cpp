#include "lefkit/ideal.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "lefkit/errors.hpp"
#include "lefkit/monomial.hpp"

namespace lefkit {

namespace {

// Internal polynomial view with terms sorted strictly decreasing under the
// working order (the canonical Polynomial layout is grevlex only).
struct OPoly {
  std::vector<Term> terms;
  bool is_zero() const { return terms.empty(); }
  const Monomial& lm() const { return terms.front().mono; }
  const Rational& lc() const { return terms.front().coeff; }
};

OPoly to_opoly(const Polynomial& p, const MonomialOrder& order) {
  OPoly o{p.terms()};
  if (order.kind() != MonomialOrder::Kind::Grevlex) {
    std::sort(o.terms.begin(), o.terms.end(),
              [&](const Term& a, const Term& b) { return order.greater(a.mono, b.mono); });
  }
  return o;
}

Polynomial from_opoly(const OPoly& o, std::size_t nvars) {
  return Polynomial::from_terms(nvars, o.terms);
}

// p -= c * x^shift * g, merging the sorted term lists.
OPoly axpy(const OPoly& p, const Rational& c, const Monomial& shift, const OPoly& g,
           const MonomialOrder& order) {
  OPoly out;
  out.terms.reserve(p.terms.size() + g.terms.size());
  std::size_t i = 0, j = 0;
  while (i < p.terms.size() && j < g.terms.size()) {
    Monomial gm = g.terms[j].mono * shift;
    const int cmp = order.compare(p.terms[i].mono, gm);
    if (cmp > 0) {
      out.terms.push_back(p.terms[i++]);
    } else if (cmp < 0) {
      Rational v = -c * g.terms[j].coeff;
      if (v != 0) out.terms.push_back({std::move(v), std::move(gm)});
      ++j;
    } else {
      Rational v = p.terms[i].coeff - c * g.terms[j].coeff;
      if (v != 0) out.terms.push_back({std::move(v), p.terms[i].mono});
      ++i;
      ++j;
    }
  }
  for (; i < p.terms.size(); ++i) out.terms.push_back(p.terms[i]);
  for (; j < g.terms.size(); ++j) {
    Rational v = -c * g.terms[j].coeff;
    if (v != 0) out.terms.push_back({std::move(v), g.terms[j].mono * shift});
  }
  return out;
}

void make_primitive(OPoly& p) {
  if (p.is_zero()) return;
  Integer den_lcm(1);
  for (const auto& t : p.terms) den_lcm = lcm(den_lcm, t.coeff.get_den());
  Integer num_gcd(0);
  for (const auto& t : p.terms) {
    Integer scaled = t.coeff.get_num() * (den_lcm / t.coeff.get_den());
    num_gcd = gcd(num_gcd, scaled);
  }
  Rational factor(den_lcm, num_gcd);
  if (p.lc() < 0) factor = -factor;
  factor.canonicalize();
  for (auto& t : p.terms) {
    Rational v = t.coeff * factor;
    t.coeff = std::move(v);
  }
}

// Full normal form: no term of the result is divisible by any lm of basis.
OPoly opoly_normal_form(OPoly p, const std::vector<OPoly>& basis, const MonomialOrder& order) {
  OPoly result;
  while (!p.is_zero()) {
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      if (g.lm().divides(p.lm())) {
        Rational c = p.lc() / g.lc();
        Monomial shift = p.lm().divided_by(g.lm());
        p = axpy(p, c, shift, g, order);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      result.terms.push_back(p.terms.front());
      p.terms.erase(p.terms.begin());
    }
  }
  return result;
}

OPoly s_polynomial(const OPoly& f, const OPoly& g, const MonomialOrder& order) {
  const Monomial l = f.lm().lcm_with(g.lm());
  const Monomial uf = l.divided_by(f.lm());
  const Monomial ug = l.divided_by(g.lm());
  // lc(g) * uf * f - lc(f) * ug * g, fraction-free.
  OPoly left;
  left.terms.reserve(f.terms.size());
  for (const auto& t : f.terms) {
    Rational v = t.coeff * g.lc();
    left.terms.push_back({std::move(v), t.mono * uf});
  }
  return axpy(left, Rational(f.lc()), ug, g, order);
}

struct Pair {
  int lcm_degree;
  Monomial lcm;
  std::size_t i, j;
};

struct PairLess {
  MonomialOrder order;
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.lcm_degree != b.lcm_degree) return a.lcm_degree < b.lcm_degree;
    const int c = order.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

// Gebauer-Moeller pair update: prunes with the product and chain criteria.
void update_pairs(std::vector<OPoly>& basis, std::set<Pair, PairLess>& pairs, OPoly h) {
  const std::size_t hi = basis.size();
  const Monomial& hm = h.lm();

  struct Cand {
    std::size_t g;
    Monomial lcm;
    bool coprime;
  };
  std::vector<Cand> cands;
  cands.reserve(hi);
  for (std::size_t g = 0; g < hi; ++g) {
    if (basis[g].is_zero()) continue;
    cands.push_back({g, hm.lcm_with(basis[g].lm()), hm.coprime(basis[g].lm())});
  }

  // Criterion M: drop (h,g1) when some other new pair's lcm strictly divides.
  std::vector<Cand> kept;
  for (std::size_t a = 0; a < cands.size(); ++a) {
    bool drop = false;
    if (!cands[a].coprime) {
      for (std::size_t b = 0; b < cands.size() && !drop; ++b) {
        if (a == b) continue;
        if (cands[b].lcm.divides(cands[a].lcm) && cands[b].lcm != cands[a].lcm) drop = true;
      }
      // Criterion F: among equal lcms keep the first.
      for (std::size_t b = 0; b < a && !drop; ++b)
        if (cands[b].lcm == cands[a].lcm) drop = true;
    }
    if (!drop) kept.push_back(cands[a]);
  }

  // Criterion B on old pairs.
  for (auto it = pairs.begin(); it != pairs.end();) {
    const Pair& p = *it;
    const Monomial& li = basis[p.i].lm();
    const Monomial& lj = basis[p.j].lm();
    if (hm.divides(p.lcm) && hm.lcm_with(li) != p.lcm && hm.lcm_with(lj) != p.lcm) {
      it = pairs.erase(it);
    } else {
      ++it;
    }
  }

  for (const auto& c : kept) {
    if (c.coprime) continue;  // product criterion
    pairs.insert({c.lcm.degree(), c.lcm, c.g, hi});
  }
  basis.push_back(std::move(h));
}

std::vector<OPoly> buchberger(std::vector<OPoly> input, const MonomialOrder& order) {
  std::vector<OPoly> basis;
  std::set<Pair, PairLess> pairs{PairLess{order}};

  std::sort(input.begin(), input.end(), [&](const OPoly& a, const OPoly& b) {
    if (a.is_zero() || b.is_zero()) return b.is_zero() && !a.is_zero();
    return order.less(a.lm(), b.lm());
  });
  for (auto& p : input) {
    if (p.is_zero()) continue;
    OPoly r = opoly_normal_form(std::move(p), basis, order);
    if (r.is_zero()) continue;
    make_primitive(r);
    update_pairs(basis, pairs, std::move(r));
  }

  while (!pairs.empty()) {
    const Pair p = *pairs.begin();
    pairs.erase(pairs.begin());
    OPoly s = s_polynomial(basis[p.i], basis[p.j], order);
    OPoly r = opoly_normal_form(std::move(s), basis, order);
    if (r.is_zero()) continue;
    make_primitive(r);
    update_pairs(basis, pairs, std::move(r));
  }
  return basis;
}

std::vector<OPoly> reduce_basis(std::vector<OPoly> basis, const MonomialOrder& order) {
  // Minimalize: keep only elements whose lm no other kept lm divides.
  std::sort(basis.begin(), basis.end(),
            [&](const OPoly& a, const OPoly& b) { return order.less(a.lm(), b.lm()); });
  std::vector<OPoly> minimal;
  for (auto& g : basis) {
    bool redundant = false;
    for (const auto& kept : minimal)
      if (kept.lm().divides(g.lm())) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(std::move(g));
  }
  // Tail-reduce each element against the rest; leading monomials are already
  // pairwise non-divisible, so only tails change.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<OPoly> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    minimal[i] = opoly_normal_form(std::move(minimal[i]), others, order);
  }
  // Monic.
  for (auto& g : minimal) {
    const Rational inv = 1 / g.lc();
    for (auto& t : g.terms) {
      Rational v = t.coeff * inv;
      t.coeff = std::move(v);
    }
  }
  // Deterministic listing: degree ascending, order-descending within degree.
  std::sort(minimal.begin(), minimal.end(), [&](const OPoly& a, const OPoly& b) {
    if (a.lm().degree() != b.lm().degree()) return a.lm().degree() < b.lm().degree();
    return order.greater(a.lm(), b.lm());
  });
  return minimal;
}

}  // namespace

namespace detail {

std::vector<Polynomial> buchberger_reduced(const std::vector<Polynomial>& gens,
                                           const MonomialOrder& order) {
  if (gens.empty()) return {};
  const std::size_t nvars = gens.front().nvars();
  std::vector<OPoly> input;
  input.reserve(gens.size());
  for (const auto& g : gens) input.push_back(to_opoly(g, order));
  std::vector<OPoly> basis = reduce_basis(buchberger(std::move(input), order), order);
  std::vector<Polynomial> out;
  out.reserve(basis.size());
  for (const auto& g : basis) out.push_back(from_opoly(g, nvars));
  return out;
}

}  // namespace detail

std::vector<Monomial> GBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements.size());
  for (const auto& g : elements) {
    OPoly o = to_opoly(g, order);
    out.push_back(o.lm());
  }
  return out;
}

IdealHandle::IdealHandle(VariableSet vars, std::vector<Polynomial> generators)
    : impl_(std::make_shared<Impl>(std::move(vars), std::move(generators))) {
  for (const auto& g : impl_->generators) {
    if (g.nvars() != impl_->vars.size()) throw Error("generator has wrong variable count");
    if (g.is_zero()) throw Error("ideal generators must be nonzero");
    if (!g.homogeneous_degree().has_value()) throw NonHomogeneousInput();
  }
}

const GBasis& IdealHandle::reduced_groebner(const MonomialOrder& order) const {
  std::lock_guard<std::mutex> lock(impl_->mutex);
  auto it = impl_->cache.find(order);
  if (it != impl_->cache.end()) return it->second;
  GBasis gb{order, detail::buchberger_reduced(impl_->generators, order)};
  auto [pos, ignored] = impl_->cache.emplace(order, std::move(gb));
  return pos->second;
}

bool IdealHandle::is_unit_ideal() const {
  const GBasis& gb = reduced_groebner();
  return gb.elements.size() == 1 && !gb.elements.front().is_zero() &&
         gb.elements.front().leading_term().mono.is_one();
}

Polynomial normal_form(const Polynomial& f, const GBasis& g) {
  if (g.elements.empty()) return f;
  std::vector<OPoly> basis;
  basis.reserve(g.elements.size());
  for (const auto& e : g.elements) basis.push_back(to_opoly(e, g.order));
  OPoly r = opoly_normal_form(to_opoly(f, g.order), basis, g.order);
  return from_opoly(r, f.nvars());
}

bool ideal_contains(const IdealHandle& i, const Polynomial& f) {
  return normal_form(f, i.reduced_groebner()).is_zero();
}

bool ideal_equals(const IdealHandle& i, const IdealHandle& j) {
  const auto& a = i.reduced_groebner().elements;
  const auto& b = j.reduced_groebner().elements;
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != b[k]) return false;
  return true;
}

IdealHandle ideal_sum(const IdealHandle& i, const IdealHandle& j) {
  if (!(i.vars() == j.vars())) throw Error("ideal sum requires matching variable sets");
  std::vector<Polynomial> gens = i.generators();
  for (const auto& g : j.generators()) gens.push_back(g);
  return IdealHandle(i.vars(), std::move(gens));
}

IdealHandle intersection(const IdealHandle& i, const IdealHandle& j) {
  if (!(i.vars() == j.vars())) throw Error("intersection requires matching variable sets");
  const std::size_t n = i.vars().size();
  const Polynomial t = Polynomial::variable(n + 1, n);
  const Polynomial one_minus_t = Polynomial::constant(n + 1, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : i.generators()) gens.push_back(f.extend_variables(1) * t);
  for (const auto& g : j.generators()) gens.push_back(g.extend_variables(1) * one_minus_t);

  const MonomialOrder elim = MonomialOrder::elimination_block(n);
  std::vector<Polynomial> gb = detail::buchberger_reduced(gens, elim);

  std::vector<Polynomial> result;
  for (const auto& h : gb) {
    bool t_free = true;
    for (const auto& term : h.terms())
      if (term.mono.exponent(n) != 0) {
        t_free = false;
        break;
      }
    if (!t_free) continue;
    // Restrict to the original ring and split into homogeneous components:
    // the intersection of homogeneous ideals is homogeneous, so every
    // component lies in it.
    std::vector<Term> restricted;
    for (const auto& term : h.terms()) {
      std::vector<int> e = term.mono.exponents();
      e.pop_back();
      restricted.push_back({term.coeff, Monomial(std::move(e))});
    }
    Polynomial r = Polynomial::from_terms(n, std::move(restricted));
    for (const auto& comp : r.homogeneous_components()) result.push_back(comp.primitive_part());
  }
  return IdealHandle(i.vars(), std::move(result));
}

Polynomial exact_divide(const Polynomial& g, const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomial();
  const MonomialOrder order = MonomialOrder::grevlex();
  OPoly p = to_opoly(g, order);
  const OPoly d = to_opoly(f, order);
  OPoly q;
  while (!p.is_zero()) {
    if (!d.lm().divides(p.lm())) throw Error("division is not exact");
    Rational c = p.lc() / d.lc();
    Monomial shift = p.lm().divided_by(d.lm());
    q.terms.push_back({c, shift});
    p = axpy(p, c, shift, d, order);
  }
  return Polynomial::from_terms(g.nvars(), q.terms);
}

IdealHandle colon(const IdealHandle& i, const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomial();
  if (!f.homogeneous_degree().has_value()) throw NonHomogeneousInput();
  if (*f.homogeneous_degree() == 0) return i;  // I : c = I for units
  IdealHandle principal(i.vars(), {f});
  IdealHandle meet = intersection(i, principal);
  std::vector<Polynomial> gens;
  for (const auto& g : meet.generators()) {
    Polynomial q = exact_divide(g, f);
    if (!q.is_zero()) gens.push_back(q.primitive_part());
  }
  return IdealHandle(i.vars(), std::move(gens));
}

IdealHandle colon_power(const IdealHandle& i, const Polynomial& f, unsigned k) {
  IdealHandle cur = i;
  for (unsigned step = 0; step < k; ++step) {
    if (cur.is_unit_ideal()) return cur;
    cur = colon(cur, f);
  }
  return cur;
}

namespace {

// Matrix whose columns span sum_g R_{d - deg g} * g inside R_d, rows indexed
// by the monomials of degree d.
QMatrix degree_span(const std::vector<Polynomial>& gens, std::size_t nvars, int d,
                    const std::vector<Monomial>& row_monomials) {
  std::map<Monomial, std::size_t> row_index;
  for (std::size_t r = 0; r < row_monomials.size(); ++r) row_index[row_monomials[r]] = r;
  std::vector<std::vector<Rational>> cols;
  for (const auto& g : gens) {
    const int dg = *g.homogeneous_degree();
    if (dg > d) continue;
    for (const auto& m : monomials_of_degree(nvars, d - dg)) {
      std::vector<Rational> col(row_monomials.size(), Rational(0));
      for (const auto& t : g.terms()) col[row_index.at(t.mono * m)] = t.coeff;
      cols.push_back(std::move(col));
    }
  }
  return matrix_from_columns(row_monomials.size(), cols);
}

}  // namespace

std::vector<std::pair<int, std::size_t>> minimal_generators(const IdealHandle& i) {
  std::vector<std::pair<int, std::size_t>> out;
  if (i.is_zero_ideal()) return out;
  const std::size_t n = i.vars().size();
  int dmin = 0, dmax = 0;
  bool first = true;
  for (const auto& g : i.generators()) {
    const int d = *g.homogeneous_degree();
    dmin = first ? d : std::min(dmin, d);
    dmax = first ? d : std::max(dmax, d);
    first = false;
  }
  // Generators of degree <= d - 1 span R_1 * I_{d-1} in degree d once each is
  // multiplied up; fresh generators in degree d are the difference in ranks.
  for (int d = dmin; d <= dmax; ++d) {
    const auto rows = monomials_of_degree(n, d);
    std::vector<Polynomial> all, below;
    for (const auto& g : i.generators()) {
      if (*g.homogeneous_degree() <= d) all.push_back(g);
      if (*g.homogeneous_degree() <= d - 1) below.push_back(g);
    }
    const std::size_t dim_full = rank(degree_span(all, n, d, rows));
    const std::size_t dim_from_below = rank(degree_span(below, n, d, rows));
    if (dim_full > dim_from_below) out.emplace_back(d, dim_full - dim_from_below);
  }
  return out;
}

std::size_t minimal_generator_count(const IdealHandle& i) {
  std::size_t total = 0;
  for (const auto& [d, c] : minimal_generators(i)) total += c;
  return total;
}

IdealHandle leading_term_ideal(const IdealHandle& i, const MonomialOrder& order) {
  const GBasis& gb = i.reduced_groebner(order);
  std::vector<Polynomial> gens;
  for (const auto& m : gb.leading_monomials())
    gens.push_back(Polynomial::monomial(i.vars().size(), Rational(1), m));
  return IdealHandle(i.vars(), std::move(gens));
}

bool is_groebner_basis(const GBasis& g) {
  std::vector<OPoly> basis;
  for (const auto& e : g.elements) basis.push_back(to_opoly(e, g.order));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      OPoly s = s_polynomial(basis[i], basis[j], g.order);
      if (!opoly_normal_form(std::move(s), basis, g.order).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace lefkit
