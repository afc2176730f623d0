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

#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "oracles.h"
#include "qtp/error.h"

namespace qtp {
namespace {

std::vector<std::uint32_t> PrimePowersUpTo(std::uint32_t limit) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = 2; p <= limit; ++p) {
    if (!oracle::IsPrimeTrial(p)) continue;
    for (std::uint64_t q = p; q <= limit; q *= p) out.push_back(static_cast<std::uint32_t>(q));
  }
  return out;
}

TEST(PrimePower, FactorsEveryPrimePowerUpTo256) {
  for (std::uint32_t q = 2; q <= 256; ++q) {
    std::uint32_t p = 0;
    for (std::uint32_t f = 2; f <= q; ++f) {
      if (q % f == 0) { p = f; break; }
    }
    std::uint32_t rest = q;
    std::uint32_t m = 0;
    while (rest % p == 0) { rest /= p; ++m; }
    if (rest == 1) {
      const PrimePower pp = FactorPrimePower(q);
      EXPECT_EQ(pp.prime, p) << q;
      EXPECT_EQ(pp.exponent, m) << q;
      EXPECT_TRUE(IsPrimePower(q));
    } else {
      EXPECT_FALSE(IsPrimePower(q)) << q;
      EXPECT_THROW(FactorPrimePower(q), Error) << q;
    }
  }
}

TEST(PrimePower, RejectsZeroAndOne) {
  EXPECT_FALSE(IsPrimePower(0));
  EXPECT_FALSE(IsPrimePower(1));
  EXPECT_TRUE(IsPrimePower(1ULL << 40));
}

TEST(GaloisField, RejectsNonPrimePowerOrders) {
  for (std::uint32_t q : {0u, 1u, 6u, 10u, 12u, 100u}) {
    try {
      GaloisField f(q);
      FAIL() << q;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kNotAPrimePower);
    }
  }
  EXPECT_THROW(GaloisField(257), Error);
}

TEST(GaloisField, StructureMatchesFactorization) {
  GaloisField f8(8);
  EXPECT_EQ(f8.characteristic(), 2u);
  EXPECT_EQ(f8.degree(), 3u);
  EXPECT_EQ(f8.modulus(), (std::vector<std::uint32_t>{1, 1, 0, 1}));
  GaloisField f7(7);
  EXPECT_EQ(f7.degree(), 1u);
}

TEST(GaloisField, PrimeFieldIsModularArithmetic) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 251u}) {
    GaloisField f(p);
    for (std::uint32_t a = 0; a < p; a += (p > 20 ? 7 : 1)) {
      for (std::uint32_t b = 0; b < p; b += (p > 20 ? 5 : 1)) {
        EXPECT_EQ(f.Add(a, b), (a + b) % p);
        EXPECT_EQ(f.Mul(a, b), (a * b) % p);
        EXPECT_EQ(f.Sub(a, b), (a + p - b) % p);
      }
    }
  }
}

TEST(GaloisField, LabelsEncodePolynomialCoordinates) {
  GaloisField f8(8);
  // x * x = x^2, x * x^2 = x^3 = x + 1 modulo x^3 + x + 1.
  EXPECT_EQ(f8.Mul(2, 2), 4u);
  EXPECT_EQ(f8.Mul(2, 4), 3u);
  // Characteristic 2 addition is XOR of coordinates.
  for (std::uint32_t a = 0; a < 8; ++a) {
    for (std::uint32_t b = 0; b < 8; ++b) EXPECT_EQ(f8.Add(a, b), a ^ b);
  }
  GaloisField f9(9);
  // 1 + 2x plus 2 + 2x is 0 + x, i.e. label 3.
  EXPECT_EQ(f9.Add(1 + 2 * 3, 2 + 2 * 3), 3u);
}

TEST(GaloisField, AxiomsHoldForEveryOrder) {
  for (std::uint32_t q : PrimePowersUpTo(256)) {
    GaloisField f(q);
    const std::uint32_t step = q > 64 ? 13 : 1;
    for (std::uint32_t a = 0; a < q; ++a) {
      EXPECT_EQ(f.Add(a, 0), a);
      EXPECT_EQ(f.Mul(a, 1), a);
      EXPECT_EQ(f.Add(a, f.Neg(a)), 0u);
      if (a != 0) EXPECT_EQ(f.Mul(a, f.Inv(a)), 1u) << q << " " << a;
      for (std::uint32_t b = 0; b < q; b += step) {
        EXPECT_EQ(f.Mul(a, b), f.Mul(b, a));
        for (std::uint32_t c = 0; c < q; c += step * 3 + 1) {
          ASSERT_EQ(f.Mul(a, f.Add(b, c)), f.Add(f.Mul(a, b), f.Mul(a, c)))
              << q;
          ASSERT_EQ(f.Mul(a, f.Mul(b, c)), f.Mul(f.Mul(a, b), c)) << q;
        }
      }
    }
  }
}

TEST(GaloisField, MultiplicationTableHasNoZeroDivisors) {
  for (std::uint32_t q : PrimePowersUpTo(256)) {
    GaloisField f(q);
    for (std::uint32_t a = 1; a < q; ++a) {
      std::set<std::uint32_t> row;
      for (std::uint32_t b = 1; b < q; ++b) row.insert(f.mul_unchecked(a, b));
      ASSERT_EQ(row.size(), q - 1) << q;
      ASSERT_EQ(row.count(0), 0u) << q;
    }
  }
}

TEST(GaloisField, ConwayModulusMakesXPrimitive) {
  for (std::uint32_t q : PrimePowersUpTo(256)) {
    GaloisField f(q);
    if (f.degree() == 1) continue;
    const std::uint32_t x = f.characteristic();  // label of the element x
    std::uint32_t power = 1;
    std::uint32_t order = 0;
    do {
      power = f.Mul(power, x);
      ++order;
    } while (power != 1);
    EXPECT_EQ(order, q - 1) << q;
  }
}

TEST(GaloisField, InvalidElementsThrow) {
  GaloisField f(4);
  try {
    f.Add(4, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidElement);
  }
  EXPECT_THROW(f.Inv(0), Error);
  EXPECT_THROW(f.Mul(0, 9), Error);
}

TEST(GaloisField, EvalPolyUsesHorner) {
  GaloisField f(5);
  const std::vector<FieldElement> coeffs{1, 2, 3};  // 1 + 2x + 3x^2
  for (FieldElement x = 0; x < 5; ++x) {
    EXPECT_EQ(f.EvalPoly(coeffs, x), (1 + 2 * x + 3 * x * x) % 5);
  }
  EXPECT_EQ(f.EvalPoly({}, 3), 0u);
  GaloisField f4(4);
  const std::vector<FieldElement> linear{1, 2};  // 1 + x
  EXPECT_EQ(f4.EvalPoly(linear, 2), f4.Add(1, f4.Mul(2, 2)));
}

}  // namespace
}  // namespace qtp
