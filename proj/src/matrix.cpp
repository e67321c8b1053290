#include "lefkit/matrix.hpp"

#include <cassert>
#include <utility>

namespace lefkit {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

QMatrix QMatrix::operator*(const QMatrix& rhs) const {
  assert(cols_ == rhs.rows_);
  QMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Rational& b = rhs.at(k, j);
        if (b == 0) continue;
        out.at(i, j) += a * b;
      }
    }
  }
  return out;
}

bool QMatrix::is_zero() const {
  for (const auto& x : e_)
    if (x != 0) return false;
  return true;
}

std::vector<Rational> QMatrix::column(std::size_t c) const {
  std::vector<Rational> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

void QMatrix::set_column(std::size_t c, const std::vector<Rational>& v) {
  assert(v.size() == rows_);
  for (std::size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
}

QMatrix QMatrix::augment_columns(const QMatrix& rhs) const {
  assert(rows_ == rhs.rows_);
  QMatrix out(rows_, cols_ + rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.at(r, c) = at(r, c);
    for (std::size_t c = 0; c < rhs.cols_; ++c) out.at(r, cols_ + c) = rhs.at(r, c);
  }
  return out;
}

QMatrix QMatrix::stack_rows(const QMatrix& rhs) const {
  assert(cols_ == rhs.cols_);
  QMatrix out(rows_ + rhs.rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.at(r, c) = at(r, c);
  for (std::size_t r = 0; r < rhs.rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.at(rows_ + r, c) = rhs.at(r, c);
  return out;
}

QMatrix matrix_from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& cols) {
  QMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

namespace {

// Integer copy of m with each row scaled by the lcm of its denominators.
// Row scaling preserves the row space, rank and right kernel.
std::vector<std::vector<Integer>> to_row_scaled_integers(const QMatrix& m) {
  std::vector<std::vector<Integer>> z(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l(1);
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Integer& den = m.at(r, c).get_den();
      l = lcm(l, den);
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Integer v = m.at(r, c).get_num() * (l / m.at(r, c).get_den());
      z[r][c] = std::move(v);
    }
  }
  return z;
}

// Bareiss fraction-free forward elimination.  Afterwards z is in row echelon
// form (up to scaling) and the pivot columns are returned in order.
std::vector<std::size_t> forward_eliminate(std::vector<std::vector<Integer>>& z, std::size_t cols) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = z.size();
  Integer prev(1);
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (z[i][col] != 0) {
        sel = i;
        break;
      }
    }
    if (sel == rows) continue;
    if (sel != r) std::swap(z[sel], z[r]);
    const Integer pivot = z[r][col];
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (z[i][col] == 0) {
        // Still must rescale the untouched row to keep the minor identity.
        for (std::size_t j = col + 1; j < cols; ++j) {
          Integer t = z[i][j] * pivot;
          mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
          z[i][j] = std::move(t);
        }
        continue;
      }
      for (std::size_t j = col + 1; j < cols; ++j) {
        Integer t = z[i][j] * pivot - z[i][col] * z[r][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        z[i][j] = std::move(t);
      }
      z[i][col] = 0;
    }
    prev = pivot;
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const QMatrix& m) {
  auto z = to_row_scaled_integers(m);
  return forward_eliminate(z, m.cols()).size();
}

RrefResult rref(const QMatrix& m) {
  auto z = to_row_scaled_integers(m);
  RrefResult res;
  res.pivots = forward_eliminate(z, m.cols());
  res.rank = res.pivots.size();

  QMatrix red(m.rows(), m.cols());
  for (std::size_t r = 0; r < res.rank; ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) red.at(r, c) = Rational(z[r][c]);

  // Back substitution and pivot normalization.
  for (std::size_t ri = res.rank; ri-- > 0;) {
    const std::size_t pc = res.pivots[ri];
    Rational inv_pivot = Rational(1) / red.at(ri, pc);
    for (std::size_t c = pc; c < m.cols(); ++c) {
      Rational v = red.at(ri, c) * inv_pivot;
      v.canonicalize();
      red.at(ri, c) = std::move(v);
    }
    for (std::size_t above = 0; above < ri; ++above) {
      const Rational factor = red.at(above, pc);
      if (factor == 0) continue;
      for (std::size_t c = pc; c < m.cols(); ++c) {
        Rational v = red.at(above, c) - factor * red.at(ri, c);
        red.at(above, c) = std::move(v);
      }
    }
  }
  res.reduced = std::move(red);
  return res;
}

std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[free_col] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
      Rational x = -r.reduced.at(i, free_col);
      v[r.pivots[i]] = std::move(x);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank_mod_p(const QMatrix& m, std::uint64_t p) {
  PrimeField f(p);
  std::vector<std::vector<std::uint64_t>> z(m.rows(), std::vector<std::uint64_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) z[r][c] = f.reduce(m.at(r, c));

  std::size_t rk = 0;
  for (std::size_t col = 0; col < m.cols() && rk < m.rows(); ++col) {
    std::size_t sel = m.rows();
    for (std::size_t i = rk; i < m.rows(); ++i) {
      if (z[i][col] != 0) {
        sel = i;
        break;
      }
    }
    if (sel == m.rows()) continue;
    std::swap(z[sel], z[rk]);
    const std::uint64_t inv = f.inv(z[rk][col]);
    for (std::size_t i = rk + 1; i < m.rows(); ++i) {
      if (z[i][col] == 0) continue;
      const std::uint64_t factor = f.mul(z[i][col], inv);
      for (std::size_t j = col; j < m.cols(); ++j)
        z[i][j] = f.sub(z[i][j], f.mul(factor, z[rk][j]));
    }
    ++rk;
  }
  return rk;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  RrefResult r = rref(m.augment_columns(QMatrix::identity(m.rows())));
  // Singular input leaks a pivot into the identity block.
  for (std::size_t p : r.pivots)
    if (p >= m.cols()) return std::nullopt;
  if (r.pivots.size() != m.rows()) return std::nullopt;
  QMatrix inv(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) inv.at(i, j) = r.reduced.at(i, m.cols() + j);
  return inv;
}

std::optional<QMatrix> solve_columns(const QMatrix& a, const QMatrix& b) {
  assert(a.rows() == b.rows());
  RrefResult r = rref(a.augment_columns(b));
  // Inconsistent iff some pivot lands in the b-part.
  for (std::size_t p : r.pivots)
    if (p >= a.cols()) return std::nullopt;
  QMatrix x(a.cols(), b.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x.at(r.pivots[i], j) = r.reduced.at(i, a.cols() + j);
  return x;
}

QMatrix column_echelon(const QMatrix& m) {
  RrefResult r = rref(m.transpose());
  QMatrix out(m.rows(), r.rank);
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) out.at(j, i) = r.reduced.at(i, j);
  return out;
}

}  // namespace lefkit
