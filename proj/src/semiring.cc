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

#include "softgame/semiring.h"

#include <algorithm>
#include <cctype>
#include <type_traits>

#include "softgame/error.h"

namespace softgame {
namespace {

[[noreturn]] void Mismatch(const Semiring& s, const PrefValue& v) {
  throw Error(ErrorCode::kKindMismatch,
              "value " + ToString(v) + " is not in the " + s.name() + " carrier");
}

std::string_view Trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  return text;
}

}  // namespace

Semiring Semiring::Classical() { return Semiring(CarrierKind::kClassical); }
Semiring Semiring::Fuzzy() { return Semiring(CarrierKind::kFuzzy); }
Semiring Semiring::Weighted() { return Semiring(CarrierKind::kWeighted); }
Semiring Semiring::Utility() { return Semiring(CarrierKind::kUtility); }

Semiring Semiring::Product(std::vector<Semiring> components) {
  if (components.empty()) {
    throw Error(ErrorCode::kKindMismatch, "product of zero semirings");
  }
  for (const auto& c : components) {
    if (c.kind() == CarrierKind::kProduct || c.kind() == CarrierKind::kUtility) {
      throw Error(ErrorCode::kKindMismatch,
                  "product components must be classical, fuzzy or weighted, got " +
                      c.name());
    }
  }
  Semiring s(CarrierKind::kProduct);
  s.components_ = std::move(components);
  return s;
}

bool Semiring::is_linearly_ordered() const {
  return kind_ != CarrierKind::kProduct || components_.size() == 1;
}

bool Semiring::Contains(const PrefValue& value) const {
  switch (kind_) {
    case CarrierKind::kClassical: return value.holds<Truth>();
    case CarrierKind::kFuzzy: return value.holds<softgame::Fuzzy>();
    case CarrierKind::kWeighted: return value.holds<Cost>();
    case CarrierKind::kUtility: return value.holds<softgame::Utility>();
    case CarrierKind::kProduct: {
      if (!value.holds<Tuple>()) return false;
      const auto& items = value.as<Tuple>().items;
      if (items.size() != components_.size()) return false;
      for (std::size_t i = 0; i < items.size(); ++i) {
        if (!components_[i].Contains(items[i])) return false;
      }
      return true;
    }
  }
  return false;
}

void Semiring::Require(const PrefValue& value) const {
  if (!Contains(value)) Mismatch(*this, value);
}

PrefValue Semiring::zero() const {
  switch (kind_) {
    case CarrierKind::kClassical: return PrefValue::Bool(false);
    case CarrierKind::kFuzzy: return PrefValue::FuzzyLevel(0);
    case CarrierKind::kWeighted: return PrefValue::InfiniteCost();
    case CarrierKind::kUtility:
      throw Error(ErrorCode::kNotASemiring, "the utility scale has no zero");
    case CarrierKind::kProduct: {
      std::vector<PrefValue> items;
      for (const auto& c : components_) items.push_back(c.zero());
      return PrefValue::MakeTuple(std::move(items));
    }
  }
  return {};
}

PrefValue Semiring::one() const {
  switch (kind_) {
    case CarrierKind::kClassical: return PrefValue::Bool(true);
    case CarrierKind::kFuzzy: return PrefValue::FuzzyLevel(1);
    case CarrierKind::kWeighted: return PrefValue::FiniteCost(0);
    case CarrierKind::kUtility:
      throw Error(ErrorCode::kNotASemiring, "the utility scale has no one");
    case CarrierKind::kProduct: {
      std::vector<PrefValue> items;
      for (const auto& c : components_) items.push_back(c.one());
      return PrefValue::MakeTuple(std::move(items));
    }
  }
  return {};
}

PrefValue Semiring::PlusUnchecked(const PrefValue& a, const PrefValue& b) const {
  switch (kind_) {
    case CarrierKind::kClassical:
      return PrefValue::Bool(a.as<Truth>().value || b.as<Truth>().value);
    case CarrierKind::kFuzzy:
      return a.as<softgame::Fuzzy>().level >= b.as<softgame::Fuzzy>().level ? a : b;
    case CarrierKind::kWeighted: {
      const Cost& x = a.as<Cost>();
      const Cost& y = b.as<Cost>();
      if (x.is_infinite()) return b;
      if (y.is_infinite()) return a;
      return *x.amount <= *y.amount ? a : b;
    }
    case CarrierKind::kUtility:
      return a.as<softgame::Utility>().amount >= b.as<softgame::Utility>().amount ? a : b;
    case CarrierKind::kProduct: {
      const auto& xs = a.as<Tuple>().items;
      const auto& ys = b.as<Tuple>().items;
      std::vector<PrefValue> items;
      items.reserve(xs.size());
      for (std::size_t i = 0; i < xs.size(); ++i) {
        items.push_back(components_[i].PlusUnchecked(xs[i], ys[i]));
      }
      return PrefValue::MakeTuple(std::move(items));
    }
  }
  return {};
}

PrefValue Semiring::TimesUnchecked(const PrefValue& a, const PrefValue& b) const {
  switch (kind_) {
    case CarrierKind::kClassical:
      return PrefValue::Bool(a.as<Truth>().value && b.as<Truth>().value);
    case CarrierKind::kFuzzy:
      return a.as<softgame::Fuzzy>().level <= b.as<softgame::Fuzzy>().level ? a : b;
    case CarrierKind::kWeighted: {
      const Cost& x = a.as<Cost>();
      const Cost& y = b.as<Cost>();
      if (x.is_infinite() || y.is_infinite()) return PrefValue::InfiniteCost();
      return PrefValue::FiniteCost(*x.amount + *y.amount);
    }
    case CarrierKind::kUtility:
      throw Error(ErrorCode::kNotASemiring, "the utility scale has no combination");
    case CarrierKind::kProduct: {
      const auto& xs = a.as<Tuple>().items;
      const auto& ys = b.as<Tuple>().items;
      std::vector<PrefValue> items;
      items.reserve(xs.size());
      for (std::size_t i = 0; i < xs.size(); ++i) {
        items.push_back(components_[i].TimesUnchecked(xs[i], ys[i]));
      }
      return PrefValue::MakeTuple(std::move(items));
    }
  }
  return {};
}

PrefValue Semiring::plus(const PrefValue& a, const PrefValue& b) const {
  Require(a);
  Require(b);
  return PlusUnchecked(a, b);
}

PrefValue Semiring::times(const PrefValue& a, const PrefValue& b) const {
  Require(a);
  Require(b);
  return TimesUnchecked(a, b);
}

Semiring::Order Semiring::CompareUnchecked(const PrefValue& a, const PrefValue& b) const {
  auto sign = [](int c) { return c < 0 ? Order::kLess : (c > 0 ? Order::kGreater : Order::kEqual); };
  auto by = [&sign](const auto& x, const auto& y) {
    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Rational>) {
      return sign(x.compare(y));
    } else {
      return sign(static_cast<int>(x) - static_cast<int>(y));
    }
  };
  switch (kind_) {
    case CarrierKind::kClassical:
      return by(a.as<Truth>().value, b.as<Truth>().value);
    case CarrierKind::kFuzzy:
      return by(a.as<softgame::Fuzzy>().level, b.as<softgame::Fuzzy>().level);
    case CarrierKind::kWeighted: {
      const Cost& x = a.as<Cost>();
      const Cost& y = b.as<Cost>();
      if (x.is_infinite() || y.is_infinite()) {
        return by(!x.is_infinite(), !y.is_infinite());
      }
      return by(*y.amount, *x.amount);
    }
    case CarrierKind::kUtility:
      return by(a.as<softgame::Utility>().amount, b.as<softgame::Utility>().amount);
    case CarrierKind::kProduct: {
      const auto& xs = a.as<Tuple>().items;
      const auto& ys = b.as<Tuple>().items;
      bool below = false;
      bool above = false;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        switch (components_[i].CompareUnchecked(xs[i], ys[i])) {
          case Order::kLess: below = true; break;
          case Order::kGreater: above = true; break;
          case Order::kEqual: break;
          case Order::kIncomparable: return Order::kIncomparable;
        }
        if (below && above) return Order::kIncomparable;
      }
      return below ? Order::kLess : (above ? Order::kGreater : Order::kEqual);
    }
  }
  return Order::kIncomparable;
}

bool Semiring::leq(const PrefValue& a, const PrefValue& b) const {
  Require(a);
  Require(b);
  Order o = CompareUnchecked(a, b);
  return o == Order::kLess || o == Order::kEqual;
}

bool Semiring::less(const PrefValue& a, const PrefValue& b) const {
  Require(a);
  Require(b);
  return CompareUnchecked(a, b) == Order::kLess;
}

PrefValue Semiring::Parse(std::string_view text) const {
  text = Trim(text);
  switch (kind_) {
    case CarrierKind::kClassical:
      if (text == "true" || text == "1") return PrefValue::Bool(true);
      if (text == "false" || text == "0") return PrefValue::Bool(false);
      break;
    case CarrierKind::kFuzzy:
      try {
        return PrefValue::FuzzyLevel(ParseRational(text));
      } catch (const Error& e) {
        throw Error(ErrorCode::kParseError, e.what());
      }
    case CarrierKind::kWeighted:
      if (text == "inf") return PrefValue::InfiniteCost();
      try {
        return PrefValue::FiniteCost(ParseRational(text));
      } catch (const Error& e) {
        throw Error(ErrorCode::kParseError, e.what());
      }
    case CarrierKind::kUtility:
      return PrefValue::UtilityAmount(ParseRational(text));
    case CarrierKind::kProduct: {
      if (text.size() < 2 || text.front() != '[' || text.back() != ']') break;
      std::string_view body = text.substr(1, text.size() - 2);
      std::vector<std::string_view> parts;
      for (std::size_t pos = 0;;) {
        auto comma = body.find(',', pos);
        parts.push_back(body.substr(pos, comma - pos));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
      }
      if (parts.size() != components_.size()) break;
      std::vector<PrefValue> items;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        items.push_back(components_[i].Parse(parts[i]));
      }
      return PrefValue::MakeTuple(std::move(items));
    }
  }
  throw Error(ErrorCode::kParseError,
              "'" + std::string(text) + "' is not a " + name() + " value");
}

std::string Semiring::name() const {
  switch (kind_) {
    case CarrierKind::kClassical: return "classical";
    case CarrierKind::kFuzzy: return "fuzzy";
    case CarrierKind::kWeighted: return "weighted";
    case CarrierKind::kUtility: return "utility";
    case CarrierKind::kProduct: {
      std::string out = "product(";
      for (std::size_t i = 0; i < components_.size(); ++i) {
        if (i > 0) out += ", ";
        out += components_[i].name();
      }
      return out + ")";
    }
  }
  return "?";
}

std::vector<PrefValue> CanonicalSample(const Semiring& semiring) {
  switch (semiring.kind()) {
    case CarrierKind::kClassical:
      return {PrefValue::Bool(false), PrefValue::Bool(true)};
    case CarrierKind::kFuzzy:
      return {PrefValue::FuzzyLevel(0), PrefValue::FuzzyLevel(Rational(1, 4)),
              PrefValue::FuzzyLevel(Rational(1, 2)),
              PrefValue::FuzzyLevel(Rational(3, 4)), PrefValue::FuzzyLevel(1)};
    case CarrierKind::kWeighted:
      return {PrefValue::FiniteCost(0), PrefValue::FiniteCost(1),
              PrefValue::FiniteCost(2), PrefValue::FiniteCost(5),
              PrefValue::InfiniteCost()};
    case CarrierKind::kUtility:
      return {PrefValue::UtilityAmount(-1), PrefValue::UtilityAmount(0),
              PrefValue::UtilityAmount(1)};
    case CarrierKind::kProduct: {
      std::vector<std::vector<PrefValue>> partial = {{}};
      for (const auto& component : semiring.components()) {
        std::vector<std::vector<PrefValue>> next;
        for (const auto& prefix : partial) {
          for (const auto& v : CanonicalSample(component)) {
            next.push_back(prefix);
            next.back().push_back(v);
          }
        }
        partial = std::move(next);
      }
      std::vector<PrefValue> out;
      out.reserve(partial.size());
      for (auto& items : partial) out.push_back(PrefValue::MakeTuple(std::move(items)));
      return out;
    }
  }
  return {};
}

std::vector<AxiomViolation> CheckAxioms(const Semiring& semiring,
                                        std::span<const PrefValue> sample) {
  if (!semiring.is_c_semiring()) {
    throw Error(ErrorCode::kNotASemiring, semiring.name() + " is not a c-semiring");
  }
  std::vector<PrefValue> canonical;
  if (sample.empty()) {
    canonical = CanonicalSample(semiring);
    sample = canonical;
  }
  for (const auto& v : sample) {
    if (!semiring.Contains(v)) Mismatch(semiring, v);
  }
  return CheckAxiomsOn(semiring, sample);
}

MonotonicityVerdict IsStrictlyMonotonic(const Semiring& semiring,
                                        std::span<const PrefValue> sample) {
  if (!semiring.is_c_semiring()) {
    throw Error(ErrorCode::kNotASemiring, semiring.name() + " is not a c-semiring");
  }
  if (!semiring.is_linearly_ordered()) {
    throw Error(ErrorCode::kNotLinearlyOrdered,
                semiring.name() + " is only partially ordered");
  }
  std::vector<PrefValue> values;
  if (sample.empty()) {
    values = CanonicalSample(semiring);
  } else {
    values.assign(sample.begin(), sample.end());
  }
  for (const auto& v : values) {
    if (!semiring.Contains(v)) Mismatch(semiring, v);
  }
  if (semiring.kind() == CarrierKind::kWeighted) {
    std::erase_if(values, [](const PrefValue& v) { return v.as<Cost>().is_infinite(); });
  }

  // Witness search: a from the top of the order down, b and c in sample order.
  std::vector<PrefValue> descending = values;
  std::stable_sort(descending.begin(), descending.end(),
                   [&](const PrefValue& x, const PrefValue& y) {
                     return semiring.less(y, x);
                   });
  for (const auto& a : descending) {
    for (const auto& b : values) {
      if (!semiring.less(a, b)) continue;
      for (const auto& c : values) {
        if (!semiring.less(semiring.times(c, a), semiring.times(c, b))) {
          return {false, std::array<PrefValue, 3>{a, b, c}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

}  // namespace softgame
