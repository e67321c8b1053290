#include <doctest.h>

#include <random>

#include "lefkit/matrix.hpp"

using namespace lefkit;

namespace {

QMatrix from_ints(std::size_t r, std::size_t c, std::initializer_list<long> vals) {
  QMatrix m(r, c);
  auto it = vals.begin();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Rational(*it++);
  return m;
}

QMatrix random_rational_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      const long num = static_cast<long>(rng() % 21) - 10;
      const long den = 1 + static_cast<long>(rng() % 7);
      Rational q(num, den);
      q.canonicalize();
      m.at(i, j) = q;
    }
  return m;
}

// Independent oracle: plain rational Gaussian elimination, no fraction-free
// tricks shared with the implementation under test.
std::size_t naive_rank(QMatrix m) {
  std::size_t rk = 0;
  for (std::size_t col = 0; col < m.cols() && rk < m.rows(); ++col) {
    std::size_t sel = m.rows();
    for (std::size_t i = rk; i < m.rows(); ++i)
      if (m.at(i, col) != 0) {
        sel = i;
        break;
      }
    if (sel == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(rk, j));
    for (std::size_t i = rk + 1; i < m.rows(); ++i) {
      if (m.at(i, col) == 0) continue;
      Rational f = m.at(i, col) / m.at(rk, col);
      for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(rk, j);
    }
    ++rk;
  }
  return rk;
}

}  // namespace

TEST_CASE("rref on the identity") {
  auto r = rref(QMatrix::identity(3));
  CHECK(r.rank == 3);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});
  CHECK(r.reduced == QMatrix::identity(3));
}

TEST_CASE("rref on the zero matrix") {
  auto r = rref(QMatrix(2, 2));
  CHECK(r.rank == 0);
  CHECK(r.pivots.empty());
}

TEST_CASE("rref detects a dependent row") {
  auto r = rref(from_ints(2, 2, {1, 2, 2, 4}));
  CHECK(r.rank == 1);
  CHECK(r.pivots == std::vector<std::size_t>{0});
  CHECK(r.reduced.at(0, 0) == 1);
  CHECK(r.reduced.at(0, 1) == 2);
  CHECK(r.reduced.at(1, 0) == 0);
  CHECK(r.reduced.at(1, 1) == 0);
}

TEST_CASE("kernel of the identity is empty") {
  CHECK(kernel_basis(QMatrix::identity(2)).empty());
}

TEST_CASE("kernel of a rank-one matrix") {
  auto k = kernel_basis(from_ints(2, 2, {1, 2, 2, 4}));
  REQUIRE(k.size() == 1);
  // Proportional to (-2, 1).
  CHECK(k[0][0] * Rational(1) == -2 * k[0][1]);
  CHECK(k[0][1] != 0);
}

TEST_CASE("kernel of a zero row has full dimension") {
  auto k = kernel_basis(from_ints(1, 2, {0, 0}));
  CHECK(k.size() == 2);
}

TEST_CASE("kernel vectors satisfy m k = 0 exactly") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 20; ++iter) {
    QMatrix m = random_rational_matrix(rng, 4 + iter % 3, 6);
    for (const auto& k : kernel_basis(m)) {
      for (std::size_t i = 0; i < m.rows(); ++i) {
        Rational acc(0);
        for (std::size_t j = 0; j < m.cols(); ++j) acc += m.at(i, j) * k[j];
        CHECK(acc == 0);
      }
    }
  }
}

TEST_CASE("rank equals the rank of the transpose") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 25; ++iter) {
    QMatrix m = random_rational_matrix(rng, 3 + iter % 4, 5);
    CHECK(rank(m) == rank(m.transpose()));
  }
}

TEST_CASE("fraction-free rank agrees with plain elimination") {
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 30; ++iter) {
    QMatrix m = random_rational_matrix(rng, 5, 5 + iter % 3);
    CHECK(rank(m) == naive_rank(m));
  }
}

TEST_CASE("modular rank examples") {
  CHECK(rank_mod_p(QMatrix::identity(3), 1000003) == 3);
  CHECK(rank_mod_p(from_ints(2, 2, {2, 4, 1, 2}), 1000003) == 1);
  // An entry divisible by p drops the modular rank below the rational one.
  QMatrix m(2, 2);
  m.at(0, 0) = Rational(1000003);
  m.at(1, 1) = 1;
  CHECK(rank(m) == 2);
  CHECK(rank_mod_p(m, 1000003) == 1);
}

TEST_CASE("denominator divisible by p is rejected") {
  QMatrix m(1, 1);
  m.at(0, 0) = Rational(1, 1000003);
  CHECK_THROWS_AS(rank_mod_p(m, 1000003), DenominatorDivisibleByP);
}

TEST_CASE("modular rank never exceeds rational rank, equality for most primes") {
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 3; ++iter) {
    QMatrix m = random_rational_matrix(rng, 20, 20);
    const std::size_t r = rank(m);
    const std::uint64_t primes[3] = {next_prime_above(1u << 20),
                                     next_prime_above((1u << 20) + 100),
                                     next_prime_above((1u << 20) + 1000)};
    int equal = 0;
    for (auto p : primes) {
      const std::size_t rp = rank_mod_p(m, p);
      CHECK(rp <= r);
      if (rp == r) ++equal;
    }
    CHECK(equal >= 2);
  }
}

TEST_CASE("solve and inverse") {
  QMatrix a = from_ints(2, 2, {1, 2, 3, 5});
  auto inv = inverse(a);
  REQUIRE(inv.has_value());
  CHECK(a * *inv == QMatrix::identity(2));
  QMatrix b = from_ints(2, 1, {7, 11});
  auto x = solve_columns(a, b);
  REQUIRE(x.has_value());
  CHECK(a * *x == b);
  CHECK_FALSE(inverse(from_ints(2, 2, {1, 2, 2, 4})).has_value());
}

TEST_CASE("prime field scalars") {
  CHECK_THROWS_AS(PrimeField(1000004), NotPrime);
  PrimeField f(1000003);
  PrimeScalar a(1000005, f);
  CHECK(a.value == 2);
  CHECK(a.modulus == 1000003);
  CHECK(f.mul(f.inv(7), 7) == 1);
  Rational q(5, 7);
  CHECK(f.mul(f.reduce(q), 7) == 5);
}

TEST_CASE("column echelon is canonical for a subspace") {
  QMatrix a = from_ints(3, 2, {1, 0, 0, 1, 1, 1});
  QMatrix b = from_ints(3, 2, {1, 1, 1, 2, 2, 3});  // same span, different basis
  CHECK(column_echelon(a) == column_echelon(b));
  CHECK(column_echelon(a).cols() == 2);
}
