#include "gaplab/rational.hpp"

#include <cctype>
#include <limits>
#include <numeric>

namespace gaplab {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  mpz_class n, d;
  mpz_set_si(n.get_mpz_t(), num);
  mpz_set_si(d.get_mpz_t(), den);
  Rational q(n, d);
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
  mpz_class z(std::string(s), 10);
  return neg ? mpz_class(-z) : z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class n = parse_integer(text.substr(0, slash));
    mpz_class d = parse_integer(text.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return q;
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool neg = !whole.empty() && whole.front() == '-';
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) whole.remove_prefix(1);
    if (whole.empty()) whole = "0";
    if (!all_digits(whole) || (!frac.empty() && !all_digits(frac)))
      throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class n = mpz_class(std::string(whole), 10) * scale;
    if (!frac.empty()) n += mpz_class(std::string(frac), 10);
    if (neg) n = -n;
    Rational q(n, scale);
    q.canonicalize();
    return q;
  }
  return Rational(parse_integer(text));
}

std::string to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational floor_rational(const Rational& value) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return Rational(f);
}

namespace {

void factor_into(mpz_class n, long sign, std::map<std::uint64_t, long>& out) {
  for (std::uint64_t p = 2; n > 1; ++p) {
    if (mpz_class(p) * mpz_class(p) > n) {
      if (!n.fits_ulong_p()) throw std::overflow_error("prime factor too large");
      out[n.get_ui()] += sign;
      break;
    }
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out[p] += sign;
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    }
  }
}

}  // namespace

std::map<std::uint64_t, long> factor_rational(const Rational& value) {
  if (value <= 0) throw std::domain_error("factor_rational requires a positive rational");
  std::map<std::uint64_t, long> out;
  factor_into(value.get_num(), +1, out);
  factor_into(value.get_den(), -1, out);
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

RationalScale::RationalScale(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (num <= 0 || den <= 0) throw std::invalid_argument("observer scale t must be a positive rational");
  std::int64_t g = std::gcd(num_, den_);
  num_ /= g;
  den_ /= g;
}

RationalScale::RationalScale(const Rational& value) : num_(1), den_(1) {
  if (value <= 0) throw std::invalid_argument("observer scale t must be a positive rational");
  if (!value.get_num().fits_slong_p() || !value.get_den().fits_slong_p())
    throw std::overflow_error("observer scale t does not fit in 64-bit numerator/denominator");
  num_ = value.get_num().get_si();
  den_ = value.get_den().get_si();
}

RationalScale RationalScale::parse(std::string_view text) { return RationalScale(parse_rational(text)); }

int RationalScale::compare(const Rational& other) const {
  int c = cmp(value(), other);
  return (c > 0) - (c < 0);
}

}  // namespace gaplab
