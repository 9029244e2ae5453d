// Copyright 2026 The Robustfair Authors.
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

// Exact rationals over 64-bit integers. Overflow throws instead of wrapping.

#ifndef ROBUSTFAIR_RATIONAL_H_
#define ROBUSTFAIR_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <string>

namespace robustfair {

class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design
  // Throws std::invalid_argument on a zero denominator.
  Rational(std::int64_t num, std::int64_t den);

  // Parses "a", "a/b" or a finite decimal such as "0.375".
  static Rational Parse(const std::string& text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double ToDouble() const { return static_cast<double>(num_) / den_; }
  // "a" or "a/b".
  std::string ToString() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(-num_, den_); }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

 private:
  static Rational FromWide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;  // always positive, gcd(num_, den_) == 1
};

}  // namespace robustfair

#endif  // ROBUSTFAIR_RATIONAL_H_
