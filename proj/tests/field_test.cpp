#include <gtest/gtest.h>

#include "hk/field.hpp"

using hk::PrimeField;

TEST(PrimeField, DefaultCharacteristic) { EXPECT_EQ(PrimeField().characteristic(), 32003u); }

TEST(PrimeField, RejectsComposite) {
  EXPECT_THROW(PrimeField(32000), std::invalid_argument);
  EXPECT_THROW(PrimeField(1), std::invalid_argument);
  EXPECT_NO_THROW(PrimeField(2));
}

TEST(PrimeField, ArithmeticModFive) {
  PrimeField F(5);
  // hand tables for Z/5
  EXPECT_EQ(F.add(3, 3), 1u);
  EXPECT_EQ(F.sub(1, 3), 3u);
  EXPECT_EQ(F.mul(3, 4), 2u);
  EXPECT_EQ(F.neg(2), 3u);
  EXPECT_EQ(F.inv(2), 3u);
  EXPECT_EQ(F.inv(4), 4u);
  EXPECT_EQ(F.from_int(-7), 3u);
  EXPECT_EQ(F.to_signed(4), -1);
  EXPECT_EQ(F.pow(2, 4), 1u);
}

TEST(PrimeField, InverseOfZeroThrows) { EXPECT_THROW(PrimeField().inv(0), std::domain_error); }

TEST(PrimeField, InverseMatchesExhaustiveSearch) {
  PrimeField F(101);
  for (std::uint32_t a = 1; a < 101; ++a) {
    std::uint32_t b = 1;
    while ((a * b) % 101 != 1) ++b;
    EXPECT_EQ(F.inv(a), b);
  }
}

TEST(PrimeField, FermatLittleTheorem) {
  PrimeField F;
  for (std::uint32_t a = 1; a < 32003; a += 97) EXPECT_EQ(F.pow(a, 32002), 1u);
}

TEST(PrimeField, SignedRepresentativeIsSymmetric) {
  PrimeField F;
  for (std::int64_t v = -16001; v <= 16001; v += 123) EXPECT_EQ(F.to_signed(F.from_int(v)), v);
}
