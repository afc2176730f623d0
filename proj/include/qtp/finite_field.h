// Copyright 2026 The qtp Authors
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

#ifndef QTP_FINITE_FIELD_H_
#define QTP_FINITE_FIELD_H_

#include <cstdint>
#include <span>
#include <vector>

namespace qtp {

// Element of a GaloisField, labelled 0..q-1. A label is the base-p encoding
// of the element's polynomial-basis coordinates: label = sum_i c_i p^i, so in
// GF(8) label 5 is x^2 + 1.
using FieldElement = std::uint32_t;

// Arithmetic in GF(q) for prime powers q <= 256 via precomputed q x q tables.
// Prime-power fields are built modulo the Conway polynomial for (p, m).
// Immutable after construction.
class GaloisField {
 public:
  static constexpr std::uint32_t kMaxOrder = 256;

  // Throws Error(kNotAPrimePower) unless q = p^m with q in [2, 256].
  explicit GaloisField(std::uint32_t q);

  std::uint32_t order() const { return order_; }
  std::uint32_t characteristic() const { return characteristic_; }
  std::uint32_t degree() const { return degree_; }

  // Monic modulus, coefficients low to high (size degree + 1). For prime
  // fields this is x (degree 1), i.e. plain modular arithmetic.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  // Arithmetic on validated labels; these throw Error(kInvalidElement) for
  // labels >= order().
  FieldElement Add(FieldElement a, FieldElement b) const;
  FieldElement Mul(FieldElement a, FieldElement b) const;
  FieldElement Neg(FieldElement a) const;
  FieldElement Sub(FieldElement a, FieldElement b) const;
  // Throws Error(kInvalidElement) for a == 0.
  FieldElement Inv(FieldElement a) const;

  // Horner evaluation of a_0 + a_1 x + ... + a_{k-1} x^{k-1}. An empty
  // coefficient list is the zero polynomial.
  FieldElement EvalPoly(std::span<const FieldElement> coeffs,
                        FieldElement x) const;

  // Unchecked table reads for hot loops.
  FieldElement add_unchecked(FieldElement a, FieldElement b) const {
    return add_[a * order_ + b];
  }
  FieldElement mul_unchecked(FieldElement a, FieldElement b) const {
    return mul_[a * order_ + b];
  }

 private:
  void Check(FieldElement a) const;

  std::uint32_t order_;
  std::uint32_t characteristic_;
  std::uint32_t degree_;
  std::vector<std::uint32_t> modulus_;
  std::vector<FieldElement> add_;
  std::vector<FieldElement> mul_;
  std::vector<FieldElement> neg_;
  std::vector<FieldElement> inv_;
};

// Returns the (p, m) with p^m == q, or throws Error(kNotAPrimePower).
struct PrimePower {
  std::uint32_t prime;
  std::uint32_t exponent;
};
PrimePower FactorPrimePower(std::uint32_t q);
bool IsPrimePower(std::uint64_t q);

}  // namespace qtp

#endif  // QTP_FINITE_FIELD_H_
