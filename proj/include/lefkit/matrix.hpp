#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lefkit/rational.hpp"

namespace lefkit {

/// Dense matrix over the rationals, row-major.  Values are immutable in
/// spirit: every operation returns a fresh matrix.
class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols, Rational(0)) {}
  QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
      : rows_(rows), cols_(cols), e_(std::move(entries)) {}

  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rational& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
  Rational& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }

  QMatrix transpose() const;
  QMatrix operator*(const QMatrix& rhs) const;
  bool operator==(const QMatrix& rhs) const { return rows_ == rhs.rows_ && cols_ == rhs.cols_ && e_ == rhs.e_; }

  bool is_zero() const;

  std::vector<Rational> column(std::size_t c) const;
  void set_column(std::size_t c, const std::vector<Rational>& v);

  /// [this | rhs] side by side; row counts must agree.
  QMatrix augment_columns(const QMatrix& rhs) const;
  /// this stacked on top of rhs; column counts must agree.
  QMatrix stack_rows(const QMatrix& rhs) const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> e_;
};

struct RrefResult {
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  QMatrix reduced;
};

/// Reduced row echelon form via fraction-free forward elimination followed by
/// back substitution.  Pivoting is deterministic: first nonzero entry in
/// column order.
RrefResult rref(const QMatrix& m);

/// Rank only (forward elimination, no back substitution).
std::size_t rank(const QMatrix& m);

/// Basis of the right null space; exactly cols - rank vectors.
std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m);

/// Rank of the image of m over Z/p.  Never exceeds the rational rank.
/// Throws DenominatorDivisibleByP if an entry has no image mod p.
std::size_t rank_mod_p(const QMatrix& m, std::uint64_t p);

std::optional<QMatrix> inverse(const QMatrix& m);

/// Solves A X = B columnwise; nullopt when some column is inconsistent.
std::optional<QMatrix> solve_columns(const QMatrix& a, const QMatrix& b);

/// Canonical spanning matrix of the column space: reduced column echelon
/// form with zero columns dropped.  Two matrices span the same subspace
/// iff their column echelon forms are identical.
QMatrix column_echelon(const QMatrix& m);

QMatrix matrix_from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& cols);

}  // namespace lefkit
