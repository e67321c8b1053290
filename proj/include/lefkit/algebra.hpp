#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "lefkit/hilbert.hpp"
#include "lefkit/ideal.hpp"
#include "lefkit/matrix.hpp"

namespace lefkit {

/// Linear form as a coefficient vector, one entry per variable.
struct LinearForm {
  std::vector<Rational> coeffs;

  LinearForm() = default;
  explicit LinearForm(std::vector<Rational> c) : coeffs(std::move(c)) {}
  static LinearForm variable(std::size_t index, std::size_t nvars);
  static LinearForm ones(std::size_t nvars);

  std::size_t nvars() const { return coeffs.size(); }
  bool is_zero() const;
  Polynomial to_polynomial() const;
  bool operator==(const LinearForm& rhs) const { return coeffs == rhs.coeffs; }
};

/// The graded quotient A = R/I as a finite-dimensional object: standard
/// monomial bases per degree, Hilbert series, multiplication matrices.
/// Immutable after build; cached data fills idempotently.
class ArtinianAlgebra {
 public:
  /// Throws NotArtinian (naming a variable without a pure power in the
  /// leading term ideal).  A unit ideal yields the zero-algebra sentinel.
  static ArtinianAlgebra build(const IdealHandle& ideal);
  static ArtinianAlgebra zero_algebra(const VariableSet& vars);

  bool is_zero_algebra() const { return impl_->zero; }
  const VariableSet& vars() const { return impl_->ideal.vars(); }
  const IdealHandle& ideal() const { return impl_->ideal; }
  const HilbertSeries& hilbert() const { return impl_->hilbert; }

  /// Largest c with A_c != 0; -1 for the zero algebra.
  int socle_degree() const { return impl_->socle_degree; }
  int sigma() const { return impl_->socle_degree + 1; }
  std::int64_t dimension() const { return impl_->dimension; }

  std::size_t dim(int degree) const;
  /// Standard monomials of the given degree, decreasing grevlex.
  const std::vector<Monomial>& basis(int degree) const;

  /// Coordinates of the class of a homogeneous f in the degree-d basis;
  /// f is reduced to normal form first.
  std::vector<Rational> coordinates(const Polynomial& f, int degree) const;

  /// Matrices of multiplication x f: A_i -> A_{i+deg f} for i = 0..c.
  /// Columns are images of the degree-i standard monomials.  For the zero
  /// polynomial, `degree_hint` fixes the target shift.
  std::vector<QMatrix> multiplication_maps(const Polynomial& f, int degree_hint = 1) const;
  std::vector<QMatrix> multiplication_maps(const LinearForm& g) const;

  /// Multiplication by each variable, cached (socle and linear-form maps
  /// are assembled from these).
  const std::vector<std::vector<QMatrix>>& variable_maps() const;

 private:
  struct Impl {
    IdealHandle ideal;
    bool zero = false;
    HilbertSeries hilbert;
    int socle_degree = -1;
    std::int64_t dimension = 0;
    std::vector<std::vector<Monomial>> basis;                  // degree -> monomials
    std::vector<std::map<Monomial, std::size_t>> basis_index;  // degree -> position
    std::mutex cache_mutex;
    std::vector<std::vector<QMatrix>> var_maps;  // lazily filled
    explicit Impl(IdealHandle i) : ideal(std::move(i)) {}
  };
  explicit ArtinianAlgebra(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<Impl> impl_;
};

/// Element of A as per-degree coordinate vectors over the standard bases.
struct AlgebraElement {
  std::map<int, std::vector<Rational>> coords;
  bool is_zero() const;
};
AlgebraElement element_of(const ArtinianAlgebra& a, const Polynomial& f);

struct PowerRanks {
  std::size_t global = 0;
  std::vector<std::size_t> per_degree;  // rank of x g^k : A_i -> A_{i+k}
};
/// Exact ranks of multiplication by g^k on each graded piece.
PowerRanks rank_of_power(const ArtinianAlgebra& a, const LinearForm& g, unsigned k);

struct SocleData {
  std::vector<QMatrix> per_degree;  // columns: basis of the socle in degree d
  std::size_t dimension = 0;
  int min_degree = -1;  // first degree with nonzero socle
};
/// Intersection of the kernels of multiplication by every variable.
SocleData socle(const ArtinianAlgebra& a);
bool is_gorenstein(const ArtinianAlgebra& a);

/// R/(I : z^k); `zero` marks colon chains that reached the unit ideal.
struct ColonQuotient {
  bool zero = false;
  std::optional<ArtinianAlgebra> algebra;
  IdealHandle colon_ideal;
};
ColonQuotient quotient_by_colon(const ArtinianAlgebra& a, const LinearForm& z, unsigned k);

/// A[u]/(u^alpha) over the enlarged ring; the fresh variable is renamed on
/// clash.  Hilbert series is h_A times 1 + q + ... + q^{alpha-1}.
ArtinianAlgebra tensor_truncated(const ArtinianAlgebra& a, unsigned alpha,
                                 std::string* fresh_name = nullptr);

/// Apolar algebra R/Ann(F) of a homogeneous form, computed degreewise from
/// catalecticant kernels (true partial derivatives, char 0).  Always
/// Gorenstein with socle degree deg F.
ArtinianAlgebra apolar_algebra(const Polynomial& f, const VariableSet& vars);

}  // namespace lefkit
