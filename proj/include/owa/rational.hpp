// Copyright 2026 The Authors.
//
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

#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace owa {

// Exact rational arithmetic on 64-bit numerator/denominator, always stored
// reduced with a positive denominator. Intermediate products go through
// 128-bit integers; a result whose reduced form does not fit back into
// 64 bits throws std::overflow_error instead of silently wrapping.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  constexpr Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    __int128 n = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
    __int128 d = i128(a.den_) * b.den_;
    return from_i128(n, d);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    __int128 n = i128(a.num_) * b.den_ - i128(b.num_) * a.den_;
    __int128 d = i128(a.den_) * b.den_;
    return from_i128(n, d);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    // Cross-reduce first so most products stay small.
    std::int64_t g1 = std::gcd(a.num_, b.den_);
    std::int64_t g2 = std::gcd(b.num_, a.den_);
    __int128 n = i128(a.num_ / g1) * (b.num_ / g2);
    __int128 d = i128(a.den_ / g2) * (b.den_ / g1);
    return from_i128(n, d);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    std::int64_t g1 = std::gcd(a.num_, b.num_);
    std::int64_t g2 = std::gcd(b.den_, a.den_);
    __int128 n = i128(a.num_ / g1) * (b.den_ / g2);
    __int128 d = i128(a.den_ / g2) * (b.num_ / g1);
    return from_i128(n, d);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  // Largest integer <= value.
  std::int64_t floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }
  // Smallest integer >= value.
  std::int64_t ceil() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
  }

  // "7", "-3/4".
  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

  // Integer power with nonnegative exponent.
  static Rational pow(const Rational& base, int exp) {
    if (exp < 0) throw std::domain_error("negative exponent");
    Rational r(1);
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
  }

  // Accepts "12", "-3", "0.25", "3/4". Throws std::invalid_argument otherwise.
  static Rational parse(const std::string& tok) {
    if (tok.empty()) throw std::invalid_argument("empty numeric token");
    std::size_t slash = tok.find('/');
    if (slash != std::string::npos) {
      Rational n = parse_decimal(tok.substr(0, slash));
      Rational d = parse_decimal(tok.substr(slash + 1));
      return n / d;
    }
    return parse_decimal(tok);
  }

 private:
  static __int128 i128(std::int64_t v) { return static_cast<__int128>(v); }

  static Rational from_i128(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX) {
      throw std::overflow_error("rational overflow: value exceeds 64-bit range");
    }
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  static Rational parse_decimal(const std::string& tok) {
    if (tok.empty()) throw std::invalid_argument("empty numeric token");
    std::size_t pos = 0;
    bool neg = false;
    if (tok[pos] == '+' || tok[pos] == '-') {
      neg = tok[pos] == '-';
      ++pos;
    }
    if (pos == tok.size()) throw std::invalid_argument("bad numeric token '" + tok + "'");
    __int128 num = 0;
    __int128 den = 1;
    bool seen_digit = false;
    bool seen_dot = false;
    for (; pos < tok.size(); ++pos) {
      char c = tok[pos];
      if (c == '.') {
        if (seen_dot) throw std::invalid_argument("bad numeric token '" + tok + "'");
        seen_dot = true;
        continue;
      }
      if (c < '0' || c > '9') throw std::invalid_argument("bad numeric token '" + tok + "'");
      seen_digit = true;
      num = num * 10 + (c - '0');
      if (seen_dot) den *= 10;
      if (num > INT64_MAX || den > INT64_MAX) {
        throw std::overflow_error("numeric token '" + tok + "' out of range");
      }
    }
    if (!seen_digit) throw std::invalid_argument("bad numeric token '" + tok + "'");
    return from_i128(neg ? -num : num, den);
  }

  void normalize() {
    if (den_ == 0) throw std::domain_error("zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace owa
