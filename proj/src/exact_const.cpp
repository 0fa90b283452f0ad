#include "gaplab/exact_const.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gaplab {

ExactConst::ExactConst(const Rational& value) {
  if (value != 0) terms_.emplace(Monomial{}, value);
}

ExactConst ExactConst::log_of(const Rational& positive) {
  ExactConst out;
  for (auto [p, e] : factor_rational(positive)) out.add_term(Monomial{p}, Rational(e));
  return out;
}

ExactConst ExactConst::log_prime(std::uint64_t prime) {
  ExactConst out;
  out.add_term(Monomial{prime}, Rational(1));
  return out;
}

void ExactConst::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational ExactConst::rational_part() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational ExactConst::log_coefficient(std::uint64_t prime) const {
  auto it = terms_.find(Monomial{prime});
  return it == terms_.end() ? Rational(0) : it->second;
}

int ExactConst::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.size()));
  return d;
}

double ExactConst::to_double() const { return static_cast<double>(to_long_double()); }

long double ExactConst::to_long_double() const {
  long double acc = 0;
  for (const auto& [m, c] : terms_) {
    long double v = c.get_d();
    for (auto p : m) v *= std::log(static_cast<long double>(p));
    acc += v;
  }
  return acc;
}

std::string ExactConst::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    for (auto p : m) os << "*log(" << p << ")";
  }
  return os.str();
}

ExactConst& ExactConst::operator+=(const ExactConst& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ExactConst& ExactConst::operator-=(const ExactConst& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ExactConst& ExactConst::operator*=(const ExactConst& o) {
  ExactConst out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m;
      m.reserve(ma.size() + mb.size());
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
      out.add_term(m, ca * cb);
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

ExactConst ExactConst::operator-() const {
  ExactConst out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

}  // namespace gaplab
