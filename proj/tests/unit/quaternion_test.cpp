#include <gtest/gtest.h>

#include "generators.hpp"
#include "qdrazin/errors.hpp"
#include "qdrazin/quaternion.hpp"

namespace qdrazin {
namespace {

const Quaternion i = Quaternion::i();
const Quaternion j = Quaternion::j();
const Quaternion k = Quaternion::k();

TEST(Quaternion, Addition) {
  EXPECT_EQ(Quaternion(1, 0, 0, 0) + Quaternion(0, 1, 0, 0), Quaternion(1, 1, 0, 0));
  const Quaternion q(1, -2, 3, Rational(1, 2));
  EXPECT_EQ(q + Quaternion(), q);
  EXPECT_EQ(Quaternion(Rational(1, 2)) + Quaternion(Rational(1, 3)), Quaternion(Rational(5, 6)));
}

TEST(Quaternion, HamiltonRelations) {
  EXPECT_EQ(i * j, k);
  EXPECT_EQ(j * k, i);
  EXPECT_EQ(k * i, j);
  EXPECT_EQ(j * i, -k);
  EXPECT_EQ(k * j, -i);
  EXPECT_EQ(i * k, -j);
  EXPECT_EQ(i * i, Quaternion(-1));
  EXPECT_EQ(j * j, Quaternion(-1));
  EXPECT_EQ(k * k, Quaternion(-1));
  EXPECT_EQ(i * j * k, Quaternion(-1));
}

TEST(Quaternion, ConjugateAndInverse) {
  EXPECT_EQ(conj(Quaternion(1, 1, 0, 0)), Quaternion(1, -1, 0, 0));
  EXPECT_EQ(conj(Quaternion(5)), Quaternion(5));
  EXPECT_EQ(inverse(Quaternion(2)), Quaternion(Rational(1, 2)));
  EXPECT_EQ(inverse(i), -i);
  const Rational m(-1, 4);
  EXPECT_EQ(inverse(Quaternion(1, 1, 1, 1)), Quaternion(Rational(1, 4), m, m, m));
  EXPECT_THROW(inverse(Quaternion()), ZeroDivision);
}

TEST(Quaternion, Predicates) {
  EXPECT_TRUE(Quaternion().is_zero());
  EXPECT_TRUE(Quaternion(3).is_real());
  EXPECT_FALSE(k.is_real());
  EXPECT_EQ(Quaternion(1, 2, 3, 4).norm2(), Rational(30));
}

TEST(Quaternion, ToString) {
  EXPECT_EQ(Quaternion().to_string(), "0");
  EXPECT_EQ(Quaternion(1, -1, 0, 0).to_string(), "1 - i");
  EXPECT_EQ(Quaternion(0, 0, 0, Rational(-3, 8)).to_string(), "-3/8 k");
  EXPECT_EQ(Quaternion(0, -1, 1, 0).to_string(), "-i + j");
  EXPECT_EQ(Quaternion(Rational(3, 8), Rational(-1, 8), Rational(1, 4), 0).to_string(),
            "3/8 - 1/8 i + 1/4 j");
  EXPECT_EQ(Quaternion(-2).to_string(), "-2");
}

TEST(QuaternionProperty, DivisionRingLaws) {
  testing::Gen gen(0x9a7e11);
  for (int trial = 0; trial < 300; ++trial) {
    const Quaternion p = gen.rational_quaternion();
    const Quaternion q = gen.rational_quaternion();
    const Quaternion r = gen.rational_quaternion();
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ(p * (q + r), p * q + p * r);
    EXPECT_EQ((p + q) * r, p * r + q * r);
    EXPECT_EQ(conj(p * q), conj(q) * conj(p));
    EXPECT_EQ((p * q).norm2(), p.norm2() * q.norm2());
    EXPECT_EQ(p * conj(p), Quaternion(p.norm2()));
    EXPECT_EQ(p + q, q + p);
    if (!p.is_zero()) {
      EXPECT_EQ(p * inverse(p), Quaternion(1));
      EXPECT_EQ(inverse(p) * p, Quaternion(1));
    }
    // Real scalars are central.
    const Rational c = gen.rational();
    EXPECT_EQ(c * p, p * Quaternion(c));
    EXPECT_EQ(Quaternion(c) * p, p * Quaternion(c));
  }
}

TEST(QuaternionProperty, NoncommutativeInGeneral) {
  testing::Gen gen(0x9a7e12);
  int differing = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const Quaternion p = gen.quaternion(), q = gen.quaternion();
    if (p * q != q * p) ++differing;
  }
  EXPECT_GT(differing, 25);
}

}  // namespace
}  // namespace qdrazin
