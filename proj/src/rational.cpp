// Copyright 2026 The PSMC Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "psmc/rational.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace psmc {

namespace {

using i128 = __int128;

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(i128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace

Rational::Rational(std::int64_t num) : num_(num), den_(1) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  *this = from_wide(num, den);
}

Rational Rational::from_wide(i128 num, i128 den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (!fits64(num) || !fits64(den)) throw std::overflow_error("Rational: overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

std::int64_t Rational::floor() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::int64_t Rational::ceil() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::from_wide(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational::from_wide(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::from_wide(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
  return Rational::from_wide(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
}

Rational Rational::operator-() const { return from_wide(-i128(num_), den_); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const i128 lhs = i128(a.num_) * b.den_;
  const i128 rhs = i128(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::approximate(double x, std::int64_t max_den) {
  if (!std::isfinite(x)) throw std::invalid_argument("Rational: non-finite value");
  if (max_den < 1) throw std::invalid_argument("Rational: max_den must be >= 1");
  const bool negative = x < 0;
  double v = negative ? -x : x;
  // Convergents h/k of the continued fraction of v.
  i128 h_prev = 1, h = static_cast<i128>(std::floor(v));
  i128 k_prev = 0, k = 1;
  double frac = v - std::floor(v);
  while (frac > 1e-15) {
    const double inv = 1.0 / frac;
    const i128 a = static_cast<i128>(std::floor(inv));
    frac = inv - std::floor(inv);
    const i128 k_next = a * k + k_prev;
    if (k_next > max_den) {
      // Best semiconvergent within the denominator cap.
      const i128 t = (max_den - k_prev) / k;
      const i128 hs = t * h + h_prev;
      const i128 ks = t * k + k_prev;
      const double err_conv = std::fabs(v - double(h) / double(k));
      const double err_semi = std::fabs(v - double(hs) / double(ks));
      if (t > 0 && err_semi < err_conv) {
        h = hs;
        k = ks;
      }
      break;
    }
    const i128 h_next = a * h + h_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  return from_wide(negative ? -h : h, k);
}

Rational Rational::parse(const std::string& text, std::int64_t max_den) {
  if (text.empty()) throw std::invalid_argument("Rational: empty string");
  const auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      std::size_t used_num = 0, used_den = 0;
      const std::string num_text = text.substr(0, slash);
      const std::string den_text = text.substr(slash + 1);
      const long long num = std::stoll(num_text, &used_num);
      const long long den = std::stoll(den_text, &used_den);
      if (used_num != num_text.size() || used_den != den_text.size()) {
        throw std::invalid_argument("trailing characters");
      }
      return Rational(num, den);
    }
    if (text.find_first_of(".eE") == std::string::npos) {
      std::size_t used = 0;
      const long long v = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument("trailing characters");
      return Rational(v);
    }
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("trailing characters");
    return approximate(v, max_den);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("Rational: cannot parse '" + text + "'");
  }
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace psmc
