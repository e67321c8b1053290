#include "lefkit/rational.hpp"

namespace lefkit {

bool is_probable_prime(const Integer& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

std::uint64_t next_prime_above(std::uint64_t n) {
  Integer p;
  mpz_nextprime(p.get_mpz_t(), Integer(static_cast<unsigned long>(n)).get_mpz_t());
  return p.get_ui();
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p < 2 || !is_probable_prime(Integer(static_cast<unsigned long>(p)))) {
    throw NotPrime(std::to_string(p));
  }
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1 % p_;
  a %= p_;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  a %= p_;
  if (a == 0) throw Error("division by zero in prime field");
  return pow(a, p_ - 2);
}

std::uint64_t PrimeField::reduce(const Rational& q) const {
  const Integer p(static_cast<unsigned long>(p_));
  Integer num = q.get_num() % p;
  Integer den = q.get_den() % p;
  if (den == 0) throw DenominatorDivisibleByP(std::to_string(p_));
  if (num < 0) num += p;
  std::uint64_t n = num.get_ui();
  std::uint64_t d = den.get_ui();
  return mul(n, inv(d));
}

}  // namespace lefkit
