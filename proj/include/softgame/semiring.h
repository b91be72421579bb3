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

#ifndef SOFTGAME_SEMIRING_H_
#define SOFTGAME_SEMIRING_H_

#include <array>
#include <concepts>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "softgame/value.h"

namespace softgame {

enum class CarrierKind { kClassical, kFuzzy, kWeighted, kUtility, kProduct };

// A c-semiring descriptor <A, +, x, 0, 1> together with its induced order
// a <= b iff a + b = b.
//
// Classical, Fuzzy and Weighted are the three linearly ordered instances;
// Product is the flat Cartesian product of such instances, ordered
// componentwise. Utility is not a c-semiring: it is the payoff scale of
// ordinary strategic games (rationals, larger is better). It supports plus
// (max) and the order, but not times, zero or one, and may only be used as a
// game payoff carrier.
class Semiring {
 public:
  static Semiring Classical();
  static Semiring Fuzzy();
  static Semiring Weighted();
  static Semiring Utility();
  // Components must be Classical, Fuzzy or Weighted. Throws kKindMismatch.
  static Semiring Product(std::vector<Semiring> components);

  CarrierKind kind() const { return kind_; }
  std::span<const Semiring> components() const { return components_; }

  bool is_c_semiring() const { return kind_ != CarrierKind::kUtility; }
  // True for the base kinds and for one-component products.
  bool is_linearly_ordered() const;

  bool Contains(const PrefValue& value) const;

  // Throws kNotASemiring for Utility.
  PrefValue zero() const;
  PrefValue one() const;

  // All operations throw kKindMismatch for values outside the carrier.
  PrefValue plus(const PrefValue& a, const PrefValue& b) const;
  PrefValue times(const PrefValue& a, const PrefValue& b) const;
  bool leq(const PrefValue& a, const PrefValue& b) const;
  bool less(const PrefValue& a, const PrefValue& b) const;

  // Parses the textual form for this carrier ("0.4", "inf", "[1, 2]", ...).
  PrefValue Parse(std::string_view text) const;

  // "classical", "fuzzy", "weighted", "utility" or "product(fuzzy, fuzzy)".
  std::string name() const;

  bool operator==(const Semiring& other) const = default;

 private:
  explicit Semiring(CarrierKind kind) : kind_(kind) {}

  void Require(const PrefValue& value) const;
  PrefValue PlusUnchecked(const PrefValue& a, const PrefValue& b) const;
  PrefValue TimesUnchecked(const PrefValue& a, const PrefValue& b) const;
  enum class Order { kLess, kEqual, kGreater, kIncomparable };
  // Induced order; a + b == b iff the result is kLess or kEqual.
  Order CompareUnchecked(const PrefValue& a, const PrefValue& b) const;

  CarrierKind kind_;
  std::vector<Semiring> components_;
};

// Anything with the four c-semiring operations; lets the axiom checker run
// against descriptors that are not Semiring instances.
template <typename A>
concept SemiringAlgebra = requires(const A& alg, const PrefValue& v) {
  { alg.plus(v, v) } -> std::convertible_to<PrefValue>;
  { alg.times(v, v) } -> std::convertible_to<PrefValue>;
  { alg.zero() } -> std::convertible_to<PrefValue>;
  { alg.one() } -> std::convertible_to<PrefValue>;
};

struct AxiomViolation {
  std::string axiom;
  std::vector<PrefValue> witness;
};

// Small sample containing the identities and absorbers of the kind. For
// products, the Cartesian product of the component samples.
std::vector<PrefValue> CanonicalSample(const Semiring& semiring);

// Evaluates every c-semiring axiom over all pairs and triples of the sample.
// One entry per violated axiom, carrying the first witness found.
template <SemiringAlgebra A>
std::vector<AxiomViolation> CheckAxiomsOn(const A& alg,
                                          std::span<const PrefValue> sample) {
  std::vector<AxiomViolation> found;
  auto report = [&found](std::string_view axiom,
                         std::vector<PrefValue> witness) {
    for (const auto& v : found) {
      if (v.axiom == axiom) return;
    }
    found.push_back({std::string(axiom), std::move(witness)});
  };
  const PrefValue zero = alg.zero();
  const PrefValue one = alg.one();

  for (const auto& a : sample) {
    if (!(alg.plus(a, a) == a)) report("plus-idempotent", {a});
    if (!(alg.plus(a, zero) == a)) report("plus-unit-zero", {a});
    if (!(alg.plus(a, one) == one)) report("plus-absorbing-one", {a});
    if (!(alg.times(a, one) == a)) report("times-unit-one", {a});
    if (!(alg.times(a, zero) == zero)) report("times-absorbing-zero", {a});
    for (const auto& b : sample) {
      if (!(alg.plus(a, b) == alg.plus(b, a))) report("plus-commutative", {a, b});
      if (!(alg.times(a, b) == alg.times(b, a))) {
        report("times-commutative", {a, b});
      }
      for (const auto& c : sample) {
        if (!(alg.plus(alg.plus(a, b), c) == alg.plus(a, alg.plus(b, c)))) {
          report("plus-associative", {a, b, c});
        }
        if (!(alg.times(alg.times(a, b), c) == alg.times(a, alg.times(b, c)))) {
          report("times-associative", {a, b, c});
        }
        if (!(alg.times(a, alg.plus(b, c)) ==
              alg.plus(alg.times(a, b), alg.times(a, c)))) {
          report("times-distributes", {a, b, c});
        }
      }
    }
  }
  return found;
}

// Checks the sample belongs to the carrier (kKindMismatch otherwise); an
// empty sample means CanonicalSample(semiring). Throws kNotASemiring for
// Utility.
std::vector<AxiomViolation> CheckAxioms(const Semiring& semiring,
                                        std::span<const PrefValue> sample);

struct MonotonicityVerdict {
  bool strictly_monotonic = true;
  // a < b but c x a == c x b, in that order.
  std::optional<std::array<PrefValue, 3>> counterexample;
};

// Tests a < b => c x a < c x b over all sample triples. The weighted carrier
// is the non-negative reals: infinity (its zero, absorbing for x) is dropped
// from the sample. Throws kNotLinearlyOrdered for partial orders.
MonotonicityVerdict IsStrictlyMonotonic(const Semiring& semiring,
                                        std::span<const PrefValue> sample);

}  // namespace softgame

#endif  // SOFTGAME_SEMIRING_H_
