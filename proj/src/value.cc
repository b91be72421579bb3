// Copyright 2026 The Softgame Authors
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

#include "softgame/value.h"

#include <cctype>
#include <sstream>

#include "softgame/error.h"

namespace softgame {
namespace {

using boost::multiprecision::cpp_int;

bool AllDigits(std::string_view text) {
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void BadNumber(std::string_view text) {
  throw Error(ErrorCode::kParseError,
              "not an exact number: '" + std::string(text) + "'");
}

// Decimal digits only; cpp_int would read a leading zero as an octal prefix.
cpp_int DecimalInt(std::string_view digits) {
  std::size_t first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return 0;
  return cpp_int{std::string(digits.substr(first))};
}

}  // namespace

Rational ParseRational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!AllDigits(num) || !AllDigits(den)) BadNumber(text);
    cpp_int d = DecimalInt(den);
    if (d == 0) BadNumber(text);
    result = Rational(DecimalInt(num), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) BadNumber(text);
    if (!whole.empty() && !AllDigits(whole)) BadNumber(text);
    if (!frac.empty() && !AllDigits(frac)) BadNumber(text);
    cpp_int scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    cpp_int digits = DecimalInt(std::string(whole) + std::string(frac));
    result = Rational(digits, scale);
  } else {
    if (!AllDigits(body)) BadNumber(text);
    result = Rational(DecimalInt(body));
  }
  return negative ? Rational(-result) : result;
}

std::string FormatRational(const Rational& value) {
  cpp_int num = boost::multiprecision::numerator(value);
  cpp_int den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();

  cpp_int rest = den;
  int twos = 0;
  int fives = 0;
  while (rest % 2 == 0) { rest /= 2; ++twos; }
  while (rest % 5 == 0) { rest /= 5; ++fives; }
  if (rest != 1) return num.str() + "/" + den.str();

  int places = std::max(twos, fives);
  cpp_int scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  bool negative = num < 0;
  cpp_int scaled = (negative ? cpp_int(-num) : num) * (scale / den);
  std::string digits = scaled.str();
  if (digits.size() <= static_cast<std::size_t>(places)) {
    digits.insert(0, places + 1 - digits.size(), '0');
  }
  digits.insert(digits.size() - places, ".");
  return negative ? "-" + digits : digits;
}

bool Tuple::operator==(const Tuple& other) const { return items == other.items; }

PrefValue PrefValue::FuzzyLevel(Rational level) {
  if (level < 0 || level > 1) {
    throw Error(ErrorCode::kInvalidValue,
                "fuzzy level outside [0,1]: " + FormatRational(level));
  }
  return PrefValue(Fuzzy{std::move(level)});
}

PrefValue PrefValue::FiniteCost(Rational amount) {
  if (amount < 0) {
    throw Error(ErrorCode::kInvalidValue,
                "negative cost: " + FormatRational(amount));
  }
  return PrefValue(Cost{std::move(amount)});
}

std::string ToString(const PrefValue& value) {
  struct Printer {
    std::string operator()(const Truth& t) const { return t.value ? "true" : "false"; }
    std::string operator()(const Fuzzy& f) const { return FormatRational(f.level); }
    std::string operator()(const Cost& c) const {
      return c.is_infinite() ? "inf" : FormatRational(*c.amount);
    }
    std::string operator()(const Utility& u) const { return FormatRational(u.amount); }
    std::string operator()(const Tuple& t) const {
      std::string out = "[";
      for (std::size_t i = 0; i < t.items.size(); ++i) {
        if (i > 0) out += ", ";
        out += ToString(t.items[i]);
      }
      return out + "]";
    }
  };
  return std::visit(Printer{}, value.repr());
}

std::ostream& operator<<(std::ostream& os, const PrefValue& value) {
  return os << ToString(value);
}

}  // namespace softgame
