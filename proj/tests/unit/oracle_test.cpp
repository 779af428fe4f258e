#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "qdrazin/errors.hpp"
#include "qdrazin/ncdet.hpp"
#include "qdrazin/oracle.hpp"

namespace qdrazin {
namespace {

using testing::kI;
using testing::kJ;
using testing::kK;

ComplexRational c(int re, int im) { return {Rational(re), Rational(im)}; }

TEST(Embedding, UnitImages) {
  const ComplexMatrix one = embed_complex(QMatrix{{1}});
  EXPECT_EQ(one(0, 0), c(1, 0));
  EXPECT_EQ(one(0, 1), c(0, 0));
  EXPECT_EQ(one(1, 1), c(1, 0));
  const ComplexMatrix j = embed_complex(QMatrix{{kJ}});
  EXPECT_EQ(j(0, 0), c(0, 0));
  EXPECT_EQ(j(0, 1), c(1, 0));
  EXPECT_EQ(j(1, 0), c(-1, 0));
  EXPECT_EQ(j(1, 1), c(0, 0));
  const ComplexMatrix i = embed_complex(QMatrix{{kI}});
  EXPECT_EQ(i(0, 0), c(0, 1));
  EXPECT_EQ(i(1, 1), c(0, -1));
}

TEST(Embedding, RoundTripAndShape) {
  const QMatrix a = testing::worked_d();
  const ComplexMatrix m = embed_complex(a);
  EXPECT_EQ(m.rows(), 6u);
  EXPECT_EQ(m.cols(), 4u);
  EXPECT_TRUE(is_quaternionic_image(m));
  EXPECT_EQ(unembed_complex(m), a);
  ComplexMatrix broken = m;
  broken(1, 1) = c(7, 0);
  EXPECT_FALSE(is_quaternionic_image(broken));
  EXPECT_THROW(unembed_complex(broken), InternalInconsistency);
}

TEST(EmbeddingRank, Values) {
  EXPECT_EQ(embedding_rank(testing::worked_a()), 2u);
  EXPECT_EQ(embedding_rank(QMatrix(3, 3)), 0u);
  // Row 2 equals k times row 1.
  EXPECT_EQ(embedding_rank(QMatrix{{kI, kJ}, {kJ, -kI}}), 1u);
  // i * j != k * i: the rows are independent on the left.
  EXPECT_EQ(embedding_rank(QMatrix{{kI, kJ}, {kK, -1}}), 2u);
  EXPECT_EQ(embedding_rank(QMatrix{{1, kI, kJ}}), 1u);
}

TEST(ComplexRank, ExactElimination) {
  ComplexMatrix m(2, 2);
  m(0, 0) = c(1, 1);
  m(0, 1) = c(2, 0);
  m(1, 0) = c(0, 2);
  m(1, 1) = c(2, 2);  // (1 + i) times row 1
  EXPECT_EQ(complex_rank(m), 1u);
  m(1, 1) = c(2, 3);
  EXPECT_EQ(complex_rank(m), 2u);
}

TEST(DrazinAxioms, Basics) {
  EXPECT_TRUE(verify_drazin_axioms(QMatrix::identity(3), QMatrix::identity(3), 0));
  EXPECT_TRUE(verify_drazin_axioms(QMatrix(3, 3), QMatrix(3, 3), 1));
  const QMatrix x = Rational(1, 2) * QMatrix::identity(2);
  EXPECT_FALSE(verify_drazin_axioms(QMatrix::identity(2), x, 0));
  const DrazinAxiomReport r = check_drazin_axioms(testing::diag({0, 3}), testing::diag({0, Rational(1, 3)}), 1);
  EXPECT_TRUE(r.all());
}

TEST(EmbeddingProperty, RingHomomorphism) {
  testing::Gen gen(0x0a1c01);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 3));
    const std::size_t m = static_cast<std::size_t>(gen.integer(1, 3));
    const QMatrix a = gen.matrix(n, m), a2 = gen.matrix(n, m), b = gen.matrix(m, 2);
    EXPECT_EQ(embed_complex(mat_mul(a, b)), embed_complex(a) * embed_complex(b));
    EXPECT_EQ(embed_complex(a + a2), embed_complex(a) + embed_complex(a2));
    EXPECT_EQ(embed_complex(adjoint(a)), conjugate_transpose(embed_complex(a)));
    EXPECT_EQ(unembed_complex(embed_complex(a)), a);
  }
}

TEST(EmbeddingProperty, RankAgreesWithPrincipalMinors) {
  testing::Gen gen(0x0a1c02);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 5));
    const QMatrix a = gen.hermitian(n);
    EXPECT_EQ(embedding_rank(a), rank_pm(a));
  }
}

TEST(EmbeddingProperty, RankOfProductOfFactors) {
  testing::Gen gen(0x0a1c03);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(2, 4));
    const std::size_t inner = static_cast<std::size_t>(gen.integer(1, static_cast<int>(n) - 1));
    const QMatrix a = mat_mul(gen.matrix(n, inner), gen.matrix(inner, n));
    EXPECT_LE(embedding_rank(a), inner);
  }
}

}  // namespace
}  // namespace qdrazin
