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

#include "robustfair/rational.h"

#include <cctype>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace robustfair {
namespace {

__int128 Gcd(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const __int128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

bool Fits(__int128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  *this = FromWide(num, den);
}

Rational Rational::FromWide(__int128 num, __int128 den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const __int128 g = Gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (!Fits(num) || !Fits(den)) throw std::overflow_error("rational overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational Rational::Parse(const std::string& text) {
  const auto fail = [&]() -> Rational {
    throw std::invalid_argument("not a number: '" + text + "'");
  };
  if (text.empty()) return fail();
  const auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      std::size_t used = 0;
      const std::int64_t num = std::stoll(text.substr(0, slash), &used);
      if (used != slash) return fail();
      const std::string den_text = text.substr(slash + 1);
      const std::int64_t den = std::stoll(den_text, &used);
      if (used != den_text.size() || den == 0) return fail();
      return Rational(num, den);
    }
    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '-' || text[pos] == '+') negative = text[pos++] == '-';
    __int128 num = 0, den = 1;
    bool digits = false, dot = false;
    for (; pos < text.size(); ++pos) {
      const char c = text[pos];
      if (c == '.' && !dot) {
        dot = true;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        digits = true;
        num = num * 10 + (c - '0');
        if (dot) den *= 10;
        if (!Fits(num) || !Fits(den)) throw std::overflow_error("too long");
      } else {
        return fail();
      }
    }
    if (!digits) return fail();
    return FromWide(negative ? -num : num, den);
  } catch (const std::out_of_range&) {
    return fail();
  } catch (const std::overflow_error&) {
    return fail();
  }
}

std::string Rational::ToString() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational& Rational::operator+=(const Rational& o) {
  return *this = FromWide(static_cast<__int128>(num_) * o.den_ +
                              static_cast<__int128>(o.num_) * den_,
                          static_cast<__int128>(den_) * o.den_);
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  return *this = FromWide(static_cast<__int128>(num_) * o.num_,
                          static_cast<__int128>(den_) * o.den_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::invalid_argument("division by zero");
  return *this = FromWide(static_cast<__int128>(num_) * o.den_,
                          static_cast<__int128>(den_) * o.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

}  // namespace robustfair
