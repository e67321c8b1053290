#include <doctest.h>

#include <random>

#include "lefkit/parse.hpp"
#include "lefkit/polynomial.hpp"

using namespace lefkit;

namespace {

VariableSet xyz() { return VariableSet({"x", "y", "z"}); }

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

Polynomial rand_poly(std::mt19937_64& rng, std::size_t nvars, int max_terms, int max_deg) {
  std::vector<Term> terms;
  const int nterms = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_terms));
  for (int t = 0; t < nterms; ++t) {
    std::vector<int> e(nvars);
    for (auto& x : e) x = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1));
    const long c = static_cast<long>(rng() % 11) - 5;
    if (c != 0) terms.push_back({Rational(c), Monomial(std::move(e))});
  }
  return Polynomial::from_terms(nvars, std::move(terms));
}

Monomial rand_mono(std::mt19937_64& rng, std::size_t nvars, int max_deg) {
  std::vector<int> e(nvars);
  for (auto& x : e) x = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1));
  return Monomial(std::move(e));
}

}  // namespace

TEST_CASE("grevlex comparisons") {
  const auto order = MonomialOrder::grevlex();
  // y^2 > x z: the z exponent difference decides.
  CHECK(order.greater(mono({0, 2, 0}), mono({1, 0, 1})));
  // x^2 > x y > y^2 in two variables.
  CHECK(grevlex_compare(mono({2, 0}), mono({1, 1})) > 0);
  CHECK(grevlex_compare(mono({1, 1}), mono({0, 2})) > 0);
  CHECK(order.compare(mono({1, 2, 3}), mono({1, 2, 3})) == 0);
  // 1 is smaller than any other monomial under a graded order.
  CHECK(order.less(mono({0, 0}), mono({1, 0})));
  CHECK(order.less(mono({0, 0}), mono({0, 1})));
}

TEST_CASE("grevlex is a multiplicative total order") {
  std::mt19937_64 rng(23);
  const auto order = MonomialOrder::grevlex();
  for (int iter = 0; iter < 200; ++iter) {
    Monomial a = rand_mono(rng, 3, 4), b = rand_mono(rng, 3, 4), c = rand_mono(rng, 3, 4);
    const int ab = order.compare(a, b);
    CHECK(ab == -order.compare(b, a));
    CHECK((ab == 0) == (a == b));
    if (ab > 0) CHECK(order.compare(a * c, b * c) > 0);
    // Transitivity.
    if (ab > 0 && order.compare(b, c) > 0) CHECK(order.compare(a, c) > 0);
  }
}

TEST_CASE("elimination order makes the tail block expensive") {
  const auto order = MonomialOrder::elimination_block(2);
  // Any monomial containing the tail variable beats any head monomial.
  CHECK(order.greater(mono({0, 0, 1}), mono({5, 5, 0})));
  CHECK(order.less(mono({1, 0, 0}), mono({0, 0, 2})));
}

TEST_CASE("parser expands binomials") {
  const auto vars = VariableSet({"x", "y"});
  Polynomial p = parse_polynomial("(x+y)^2", vars);
  Polynomial q = parse_polynomial("x^2 + 2*x*y + y^2", vars);
  CHECK(p == q);
}

TEST_CASE("parse print round trip") {
  const auto vars = xyz();
  const std::string s = "x^2 + 2*x*y - 3/2*y^2";
  Polynomial p = parse_polynomial(s, vars);
  CHECK(parse_polynomial(print_polynomial(p, vars), vars) == p);
  CHECK(print_polynomial(p, vars) == s);
}

TEST_CASE("round trip on random polynomials") {
  std::mt19937_64 rng(31);
  const auto vars = xyz();
  for (int iter = 0; iter < 50; ++iter) {
    Polynomial p = rand_poly(rng, 3, 6, 4);
    CHECK(parse_polynomial(print_polynomial(p, vars), vars) == p);
  }
}

TEST_CASE("whitespace is insignificant") {
  const auto vars = xyz();
  CHECK(parse_polynomial("  x ^ 2+ 2 * x*y ", vars) == parse_polynomial("x^2+2*x*y", vars));
  CHECK(parse_polynomial("( x + y ) ^ 2", vars) == parse_polynomial("(x+y)^2", vars));
}

TEST_CASE("parser reports errors with positions") {
  const auto vars = xyz();
  CHECK_THROWS_AS(parse_polynomial("x +* y", vars), SyntaxError);
  CHECK_THROWS_AS(parse_polynomial("(x + y", vars), SyntaxError);
  CHECK_THROWS_AS(parse_polynomial("x + w", vars), UnknownVariable);
  CHECK_THROWS_AS(parse_polynomial("x^", vars), SyntaxError);
  try {
    parse_polynomial("x + w", vars);
  } catch (const UnknownVariable& e) {
    CHECK(e.name == "w");
    CHECK(e.position == 4);
  }
}

TEST_CASE("unary minus at the head") {
  const auto vars = VariableSet({"x", "y"});
  CHECK(parse_polynomial("-x + y", vars) ==
        parse_polynomial("y", vars) - parse_polynomial("x", vars));
  CHECK(parse_polynomial("(-x)^2", vars) == parse_polynomial("x^2", vars));
}

TEST_CASE("ring arithmetic basics") {
  const auto vars = xyz();
  Polynomial f = parse_polynomial("x^2 - y*z + 3", vars);
  CHECK((f * Polynomial::zero(3)).is_zero());
  CHECK(f * Polynomial::constant(3, 1) == f);
}

TEST_CASE("elementary symmetric telescoping identity") {
  // e_3 - z e_2 + z^2 e_1 = z^3 in three variables.
  const std::size_t n = 3;
  Polynomial z = Polynomial::variable(n, 2);
  Polynomial lhs = elementary_symmetric(3, n) - z * elementary_symmetric(2, n) +
                   z.pow(2) * elementary_symmetric(1, n);
  CHECK(lhs == z.pow(3));
}

TEST_CASE("power sum relation behind the colon formulas") {
  // z f - (x y) p_1 + (x + y) p_2 - p_3 = 0 with f = (x - z)(y - z).
  const auto vars = xyz();
  Polynomial f = parse_polynomial("(x-z)*(y-z)", vars);
  Polynomial lhs = parse_polynomial("z", vars) * f -
                   parse_polynomial("x*y", vars) * power_sum(1, 3) +
                   parse_polynomial("x+y", vars) * power_sum(2, 3) - power_sum(3, 3);
  CHECK(lhs.is_zero());
}

TEST_CASE("symmetric function constructors") {
  const auto vars = xyz();
  CHECK(elementary_symmetric(1, 3) == parse_polynomial("x+y+z", vars));
  CHECK(elementary_symmetric(2, 3, 2) ==
        parse_polynomial("x^2*y^2 + x^2*z^2 + y^2*z^2", vars));
  CHECK(elementary_symmetric(3, 3) == parse_polynomial("x*y*z", vars));
  CHECK_THROWS_AS(elementary_symmetric(4, 3), IndexOutOfRange);
  CHECK(power_sum(1, 3) == parse_polynomial("x+y+z", vars));
  CHECK(power_sum(2, 3) == parse_polynomial("x^2+y^2+z^2", vars));
  CHECK(power_sum(3, 2) == parse_polynomial("x^3+y^3", VariableSet({"x", "y"})));
  CHECK(complete_homogeneous(0, 3) == Polynomial::constant(3, 1));
  CHECK(complete_homogeneous(2, 2) ==
        parse_polynomial("x^2 + x*z + z^2", VariableSet({"x", "z"})));
  CHECK(complete_homogeneous(1, 3) == parse_polynomial("x+y+z", vars));
}

TEST_CASE("lowest part with respect to the last variable") {
  const auto vars = xyz();
  CHECK(in_prime_part(parse_polynomial("(x+y+z)^2", vars)) ==
        parse_polynomial("x^2 + 2*x*y + y^2", vars));
  CHECK(in_prime_part(parse_polynomial("z^3", vars)) == parse_polynomial("z^3", vars));
  CHECK(in_prime_part(parse_polynomial("x*z + z^2", vars)) == parse_polynomial("x*z", vars));
  CHECK_THROWS_AS(in_prime_part(Polynomial::zero(3)), ZeroPolynomial);
}

TEST_CASE("lowest part is multiplicative") {
  std::mt19937_64 rng(37);
  for (int iter = 0; iter < 60; ++iter) {
    Polynomial f = rand_poly(rng, 3, 4, 3);
    Polynomial g = rand_poly(rng, 3, 4, 3);
    if (f.is_zero() || g.is_zero() || (f * g).is_zero()) continue;
    CHECK(in_prime_part(f * g) == in_prime_part(f) * in_prime_part(g));
  }
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(41);
  for (int iter = 0; iter < 30; ++iter) {
    Polynomial f = rand_poly(rng, 2, 4, 3);
    Polynomial g = rand_poly(rng, 2, 4, 3);
    Polynomial h = rand_poly(rng, 2, 4, 3);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f + g == g + f);
    CHECK(f * g == g * f);
  }
}

TEST_CASE("linear substitution") {
  const auto vars = VariableSet({"x", "y"});
  Polynomial f = parse_polynomial("x^2", vars);
  CHECK(f.substitute_linear(QMatrix::identity(2)) == f);

  QMatrix swap(2, 2);
  swap.at(0, 1) = 1;
  swap.at(1, 0) = 1;
  CHECK(f.substitute_linear(swap) == parse_polynomial("y^2", vars));

  // x -> x, y -> y - x carries the form x + y to y.
  QMatrix m = QMatrix::identity(2);
  m.at(1, 0) = -1;
  CHECK(parse_polynomial("x+y", vars).substitute_linear(m) == parse_polynomial("y", vars));

  QMatrix singular(2, 2);
  singular.at(0, 0) = 1;
  singular.at(1, 0) = 1;
  CHECK_THROWS_AS(f.substitute_linear(singular), SingularMatrix);
}

TEST_CASE("homogeneity tracking") {
  const auto vars = xyz();
  CHECK(parse_polynomial("x^2 + y*z", vars).homogeneous_degree() == 2);
  CHECK_FALSE(parse_polynomial("x^2 + y", vars).homogeneous_degree().has_value());
  auto comps = parse_polynomial("x^2 + y", vars).homogeneous_components();
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == parse_polynomial("x^2", vars));
  CHECK(comps[1] == parse_polynomial("y", vars));
}

TEST_CASE("parser survives random byte noise") {
  std::mt19937_64 rng(97);
  const auto vars = xyz();
  const char alphabet[] = "xyzw+-*/^()0123456789 _%$";
  for (int iter = 0; iter < 400; ++iter) {
    std::string s;
    const std::size_t len = rng() % 24;
    for (std::size_t i = 0; i < len; ++i) s += alphabet[rng() % (sizeof(alphabet) - 1)];
    try {
      (void)parse_polynomial(s, vars);
    } catch (const SyntaxError&) {
    } catch (const UnknownVariable&) {
    }
  }
}

TEST_CASE("degree five generator of the large worked example parses") {
  const auto vars = VariableSet({"u", "v", "w", "x", "y", "z"});
  Polynomial g = parse_polynomial("z^5 - z*(u^2*w*x + u*v*w*y + v^2*x*y)", vars);
  Polynomial z = Polynomial::variable(6, 5);
  Polynomial p = parse_polynomial("u^2*w*x", vars) + parse_polynomial("u*v*w*y", vars) +
                 parse_polynomial("v^2*x*y", vars);
  CHECK(g == z.pow(5) - z * p);
  CHECK(g.homogeneous_degree() == 5);
}
