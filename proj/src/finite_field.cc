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

#include "qtp/finite_field.h"

#include <array>
#include <string>

#include "qtp/error.h"

namespace qtp {
namespace {

struct ConwayEntry {
  std::uint32_t p;
  std::uint32_t m;
  std::array<std::uint32_t, 9> coeffs;  // low to high, monic at index m
};

// Conway polynomials for every prime power p^m <= 256 with m >= 2.
constexpr ConwayEntry kConway[] = {
    {2, 2, {1, 1, 1}},
    {2, 3, {1, 1, 0, 1}},
    {2, 4, {1, 1, 0, 0, 1}},
    {2, 5, {1, 0, 1, 0, 0, 1}},
    {2, 6, {1, 1, 0, 1, 1, 0, 1}},
    {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
    {2, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
    {3, 2, {2, 2, 1}},
    {3, 3, {1, 2, 0, 1}},
    {3, 4, {2, 0, 0, 2, 1}},
    {3, 5, {1, 2, 0, 0, 0, 1}},
    {5, 2, {2, 4, 1}},
    {5, 3, {3, 3, 0, 1}},
    {7, 2, {3, 6, 1}},
    {11, 2, {2, 7, 1}},
    {13, 2, {2, 12, 1}},
};

std::vector<std::uint32_t> ToDigits(std::uint32_t label, std::uint32_t p,
                                    std::uint32_t m) {
  std::vector<std::uint32_t> digits(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    digits[i] = label % p;
    label /= p;
  }
  return digits;
}

std::uint32_t FromDigits(const std::vector<std::uint32_t>& digits,
                         std::uint32_t p) {
  std::uint32_t label = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    label = label * p + *it;
  }
  return label;
}

// Product of two polynomials over Z_p reduced modulo a monic modulus.
std::uint32_t PolyMulMod(std::uint32_t a, std::uint32_t b, std::uint32_t p,
                         const std::vector<std::uint32_t>& modulus) {
  const std::uint32_t m = static_cast<std::uint32_t>(modulus.size()) - 1;
  const auto da = ToDigits(a, p, m);
  const auto db = ToDigits(b, p, m);
  std::vector<std::uint32_t> prod(2 * m, 0);
  for (std::uint32_t i = 0; i < m; ++i) {
    for (std::uint32_t j = 0; j < m; ++j) {
      prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    }
  }
  for (std::uint32_t deg = 2 * m - 1; deg >= m; --deg) {
    const std::uint32_t c = prod[deg];
    if (c == 0) continue;
    // Subtract c * x^(deg-m) * modulus.
    for (std::uint32_t i = 0; i <= m; ++i) {
      const std::uint32_t idx = deg - m + i;
      prod[idx] = (prod[idx] + p * p - (c * modulus[i]) % p) % p;
    }
  }
  prod.resize(m);
  return FromDigits(prod, p);
}

}  // namespace

bool IsPrimePower(std::uint64_t q) {
  if (q < 2) return false;
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  while (q % p == 0) q /= p;
  return q == 1;
}

PrimePower FactorPrimePower(std::uint32_t q) {
  if (!IsPrimePower(q)) {
    throw Error(ErrorCode::kNotAPrimePower,
                std::to_string(q) + " is not a prime power");
  }
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t m = 0;
  while (q > 1) {
    q /= p;
    ++m;
  }
  return {p, m};
}

GaloisField::GaloisField(std::uint32_t q) {
  const PrimePower pp = FactorPrimePower(q);
  if (q > kMaxOrder) {
    throw Error(ErrorCode::kNotAPrimePower,
                "field order " + std::to_string(q) + " exceeds 256");
  }
  order_ = q;
  characteristic_ = pp.prime;
  degree_ = pp.exponent;
  if (degree_ == 1) {
    modulus_ = {0, 1};
  } else {
    for (const auto& e : kConway) {
      if (e.p == characteristic_ && e.m == degree_) {
        modulus_.assign(e.coeffs.begin(), e.coeffs.begin() + degree_ + 1);
      }
    }
  }

  add_.resize(q * q);
  mul_.resize(q * q);
  for (std::uint32_t a = 0; a < q; ++a) {
    const auto da = ToDigits(a, characteristic_, degree_);
    for (std::uint32_t b = a; b < q; ++b) {
      const auto db = ToDigits(b, characteristic_, degree_);
      std::vector<std::uint32_t> sum(degree_);
      for (std::uint32_t i = 0; i < degree_; ++i) {
        sum[i] = (da[i] + db[i]) % characteristic_;
      }
      const FieldElement s = FromDigits(sum, characteristic_);
      const FieldElement prod =
          degree_ == 1 ? (a * b) % q
                       : PolyMulMod(a, b, characteristic_, modulus_);
      add_[a * q + b] = add_[b * q + a] = s;
      mul_[a * q + b] = mul_[b * q + a] = prod;
    }
  }

  neg_.assign(q, 0);
  inv_.assign(q, 0);
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = 0; b < q; ++b) {
      if (add_[a * q + b] == 0) neg_[a] = b;
      if (mul_[a * q + b] == 1) inv_[a] = b;
    }
  }
}

void GaloisField::Check(FieldElement a) const {
  if (a >= order_) {
    throw Error(ErrorCode::kInvalidElement,
                "label " + std::to_string(a) + " not in GF(" +
                    std::to_string(order_) + ")");
  }
}

FieldElement GaloisField::Add(FieldElement a, FieldElement b) const {
  Check(a);
  Check(b);
  return add_unchecked(a, b);
}

FieldElement GaloisField::Mul(FieldElement a, FieldElement b) const {
  Check(a);
  Check(b);
  return mul_unchecked(a, b);
}

FieldElement GaloisField::Neg(FieldElement a) const {
  Check(a);
  return neg_[a];
}

FieldElement GaloisField::Sub(FieldElement a, FieldElement b) const {
  return Add(a, Neg(b));
}

FieldElement GaloisField::Inv(FieldElement a) const {
  Check(a);
  if (a == 0) throw Error(ErrorCode::kInvalidElement, "0 has no inverse");
  return inv_[a];
}

FieldElement GaloisField::EvalPoly(std::span<const FieldElement> coeffs,
                                   FieldElement x) const {
  Check(x);
  for (FieldElement c : coeffs) Check(c);
  FieldElement acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = add_unchecked(mul_unchecked(acc, x), *it);
  }
  return acc;
}

}  // namespace qtp
