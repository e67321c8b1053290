#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "lefkit/errors.hpp"

namespace lefkit {

// All coefficient arithmetic is exact. mpq_class keeps fractions canonical
// (gcd(num, den) = 1, den >= 1) by construction.
using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& n) { return n.get_str(); }

bool is_probable_prime(const Integer& n);

/// Smallest prime strictly greater than `n`.
std::uint64_t next_prime_above(std::uint64_t n);

/// Arithmetic in Z/p for a word-sized prime p.  The modulus is checked
/// (probabilistically) at construction.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const;

  /// Image of an exact rational; throws DenominatorDivisibleByP when undefined.
  std::uint64_t reduce(const Rational& q) const;

 private:
  std::uint64_t p_;
};

/// Residue paired with its modulus; thin value type over PrimeField arithmetic.
struct PrimeScalar {
  std::uint64_t value;
  std::uint64_t modulus;

  PrimeScalar(std::uint64_t v, const PrimeField& f) : value(v % f.modulus()), modulus(f.modulus()) {}
};

}  // namespace lefkit
