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

#ifndef SOFTGAME_VALUE_H_
#define SOFTGAME_VALUE_H_

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace softgame {

using Rational = boost::multiprecision::cpp_rational;

// Parses "3", "-1/2", "0.4" or "2/5" exactly. Throws Error(kParseError).
Rational ParseRational(std::string_view text);

// Terminating decimals print as decimals ("0.4"), everything else as "p/q".
std::string FormatRational(const Rational& value);

struct Truth {
  bool value = false;
  bool operator==(const Truth&) const = default;
};

// A fuzzy level in [0, 1].
struct Fuzzy {
  Rational level;
  bool operator==(const Fuzzy&) const = default;
};

// A non-negative cost; an empty amount is infinity.
struct Cost {
  std::optional<Rational> amount;
  bool is_infinite() const { return !amount.has_value(); }
  bool operator==(const Cost&) const = default;
};

// A payoff on the utility scale: any rational, larger is better.
struct Utility {
  Rational amount;
  bool operator==(const Utility&) const = default;
};

class PrefValue;

struct Tuple {
  std::vector<PrefValue> items;
  bool operator==(const Tuple& other) const;
};

// An element of some carrier. Which carrier is decided by the Semiring that
// interprets it; the value itself only records its shape.
class PrefValue {
 public:
  using Repr = std::variant<Truth, Fuzzy, Cost, Utility, Tuple>;

  PrefValue() : repr_(Truth{}) {}

  static PrefValue Bool(bool value) { return PrefValue(Truth{value}); }
  // Throws kInvalidValue outside [0, 1].
  static PrefValue FuzzyLevel(Rational level);
  // Throws kInvalidValue for negative amounts.
  static PrefValue FiniteCost(Rational amount);
  static PrefValue InfiniteCost() { return PrefValue(Cost{}); }
  static PrefValue UtilityAmount(Rational amount) {
    return PrefValue(Utility{std::move(amount)});
  }
  static PrefValue MakeTuple(std::vector<PrefValue> items) {
    return PrefValue(Tuple{std::move(items)});
  }

  const Repr& repr() const { return repr_; }

  template <typename T>
  bool holds() const { return std::holds_alternative<T>(repr_); }
  template <typename T>
  const T& as() const { return std::get<T>(repr_); }

  bool operator==(const PrefValue& other) const { return repr_ == other.repr_; }

 private:
  explicit PrefValue(Repr repr) : repr_(std::move(repr)) {}

  Repr repr_;
};

// Textual form shared by every file format and the CLI output:
// true|false, rationals, inf, and [v1, v2, ...] for tuples.
std::string ToString(const PrefValue& value);
std::ostream& operator<<(std::ostream& os, const PrefValue& value);

}  // namespace softgame

#endif  // SOFTGAME_VALUE_H_
