#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gaplab/rational.hpp"

namespace gaplab {

// An exact real of the form  sum_i c_i * prod_j log(p_ij)  with rational c_i and
// primes p_ij. Degree 0 is the rational part, degree 1 terms are rational
// multiples of log p. Products of two degree-1 values (which appear when
// border identities multiply a coefficient by log c) give degree 2 terms.
class ExactConst {
 public:
  using Monomial = std::vector<std::uint64_t>;  // sorted primes, repeated for powers

  ExactConst() = default;
  ExactConst(const Rational& value);  // NOLINT(google-explicit-constructor)
  ExactConst(long value) : ExactConst(Rational(value)) {}  // NOLINT

  static ExactConst log_of(const Rational& positive);
  static ExactConst log_prime(std::uint64_t prime);

  Rational rational_part() const;
  // Coefficient of log(p) in the degree-1 part.
  Rational log_coefficient(std::uint64_t prime) const;
  int degree() const;
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_rational() const noexcept { return degree() == 0; }
  double to_double() const;
  long double to_long_double() const;
  std::string str() const;

  const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }

  ExactConst& operator+=(const ExactConst& o);
  ExactConst& operator-=(const ExactConst& o);
  ExactConst& operator*=(const ExactConst& o);
  ExactConst operator-() const;

  friend ExactConst operator+(ExactConst a, const ExactConst& b) { return a += b; }
  friend ExactConst operator-(ExactConst a, const ExactConst& b) { return a -= b; }
  friend ExactConst operator*(ExactConst a, const ExactConst& b) { return a *= b; }
  friend bool operator==(const ExactConst& a, const ExactConst& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const ExactConst& a, const ExactConst& b) { return !(a == b); }

 private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;  // no zero coefficients stored
};

}  // namespace gaplab
