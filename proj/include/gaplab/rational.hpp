#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gaplab {

using Rational = mpq_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

// Accepts "p/q", an integer, or a finite decimal such as "0.82" (read as 82/100).
Rational parse_rational(std::string_view text);

// Always "p/q", including integers ("3/1").
std::string to_string(const Rational& value);

inline double to_double(const Rational& value) { return value.get_d(); }

Rational floor_rational(const Rational& value);

// Prime factorisation of a positive rational: prime -> signed exponent.
std::map<std::uint64_t, long> factor_rational(const Rational& value);

// The observer scale t = num/den, strictly positive and in lowest terms.
class RationalScale {
 public:
  RationalScale(std::int64_t num, std::int64_t den);
  explicit RationalScale(const Rational& value);

  static RationalScale parse(std::string_view text);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  Rational value() const { return make_rational(num_, den_); }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  // Exact three-way comparison against an arbitrary rational.
  int compare(const Rational& other) const;

  friend bool operator==(const RationalScale& a, const RationalScale& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace gaplab
