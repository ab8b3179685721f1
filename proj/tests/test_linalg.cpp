#include <gtest/gtest.h>

#include <random>

#include "hopfimage/error.hpp"
#include "hopfimage/subspace.hpp"
#include "test_support.hpp"

using namespace hopfimage;
using hopfimage::testing::random_low_rank;
using hopfimage::testing::random_matrix;
using hopfimage::testing::random_vector;

namespace {

const FieldSpec Q = FieldSpec::rationals();

std::vector<FieldSpec> fields() { return {Q, FieldSpec::prime_field(5), FieldSpec::prime_field(2)}; }

Subspace random_subspace(FieldSpec f, std::size_t n, std::size_t gens, std::mt19937_64& rng) {
  std::vector<Vector> v;
  for (std::size_t i = 0; i < gens; ++i) v.push_back(random_vector(f, n, rng));
  return Subspace::span(f, n, v);
}

}  // namespace

TEST(Scalar, ParseAndPrintRoundTrip) {
  for (const char* text : {"0", "1", "-7", "3/4", "-22/6"}) {
    Scalar s = Scalar::parse(Q, text);
    EXPECT_EQ(Scalar::parse(Q, s.to_string()), s) << text;
  }
  EXPECT_EQ(Scalar::parse(Q, "-22/6").to_string(), "-11/3");

  FieldSpec f7 = FieldSpec::prime_field(7);
  EXPECT_EQ(Scalar::parse(f7, "-1").residue(), 6u);
  EXPECT_EQ(Scalar::parse(f7, "1/2") * Scalar(f7, 2), Scalar(f7, 1));
  EXPECT_EQ(Scalar::parse(f7, "15").to_string(), "1");
}

TEST(Scalar, FieldAxiomsOnSamples) {
  std::mt19937_64 rng(11);
  for (FieldSpec f : fields()) {
    for (int t = 0; t < 200; ++t) {
      Scalar a = hopfimage::testing::small_scalar(f, rng, -9, 9);
      Scalar b = hopfimage::testing::small_scalar(f, rng, -9, 9);
      Scalar c = hopfimage::testing::small_scalar(f, rng, -9, 9);
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ((a - b) + b, a);
      if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
      Scalar d = a;
      d.add_product(b, c);
      EXPECT_EQ(d, a + b * c);
    }
  }
}

TEST(Scalar, Errors) {
  EXPECT_THROW(FieldSpec::prime_field(4), HopfError);
  EXPECT_THROW(Scalar(Q, 0).inverse(), HopfError);
  try {
    (void)(Scalar(Q, 1) + Scalar(FieldSpec::prime_field(3), 1));
    FAIL() << "mixed fields accepted";
  } catch (const HopfError& e) {
    EXPECT_EQ(e.code(), ErrorCode::FieldMismatch);
  }
  EXPECT_THROW(Scalar::parse(Q, "1/0"), HopfError);
  EXPECT_THROW(Scalar::parse(Q, "abc"), HopfError);
}

TEST(Matrix, RrefIsIdempotentAndPreservesRowSpace) {
  std::mt19937_64 rng(3);
  for (FieldSpec f : fields()) {
    for (int t = 0; t < 30; ++t) {
      Matrix m = random_low_rank(f, 6, 7, 1 + t % 5, rng);
      Matrix r = rref(m);
      EXPECT_EQ(rref(r), r);
      EXPECT_EQ(Subspace::row_space(m), Subspace::row_space(r));
      EXPECT_EQ(r.rows(), rank(m));
    }
  }
}

TEST(Matrix, RankNullity) {
  std::mt19937_64 rng(5);
  for (FieldSpec f : fields()) {
    for (int t = 0; t < 40; ++t) {
      std::size_t rows = 1 + t % 7, cols = 1 + (t * 3) % 8;
      Matrix m = random_low_rank(f, rows, cols, 1 + t % 4, rng);
      Subspace k = kernel(m);
      EXPECT_EQ(rank(m) + k.dim(), cols);
      for (const Vector& v : k.basis_vectors()) EXPECT_TRUE(is_zero(m.apply(v)));
    }
  }
}

TEST(Matrix, KroneckerMatchesKronOnVectors) {
  std::mt19937_64 rng(9);
  Matrix a = random_matrix(Q, 2, 3, rng), b = random_matrix(Q, 3, 2, rng);
  Vector x = random_vector(Q, 3, rng), y = random_vector(Q, 2, rng);
  EXPECT_EQ(kronecker(a, b).apply(kron(x, y)), kron(a.apply(x), b.apply(y)));
  EXPECT_EQ((a * b).transpose(), b.transpose() * a.transpose());
}

TEST(Subspace, DimensionFormulaAndModularLaw) {
  std::mt19937_64 rng(17);
  for (FieldSpec f : fields()) {
    for (int t = 0; t < 40; ++t) {
      std::size_t n = 6;
      Subspace a = random_subspace(f, n, 1 + t % 3, rng);
      Subspace b = random_subspace(f, n, 1 + (t / 3) % 4, rng);
      Subspace c = subspace_sum(a, random_subspace(f, n, 2, rng));
      Subspace s = subspace_sum(a, b), i = intersect(a, b);
      EXPECT_EQ(s.dim() + i.dim(), a.dim() + b.dim());
      EXPECT_TRUE(s.contains(a) && s.contains(b));
      EXPECT_TRUE(a.contains(i) && b.contains(i));
      // a <= c
      EXPECT_EQ(subspace_sum(a, intersect(b, c)), intersect(subspace_sum(a, b), c));
    }
  }
}

TEST(Subspace, ContainmentAndReduce) {
  std::mt19937_64 rng(23);
  Subspace s = random_subspace(Q, 5, 2, rng);
  for (const Vector& v : s.basis_vectors()) EXPECT_TRUE(s.contains(v));
  Vector v = random_vector(Q, 5, rng);
  Vector r = s.reduce(v);
  Vector diff = v;
  for (std::size_t i = 0; i < 5; ++i) diff[i] -= r[i];
  EXPECT_TRUE(s.contains(diff));
  EXPECT_EQ(s.contains(v), is_zero(r));
  EXPECT_TRUE(Subspace::full(Q, 5).contains(s));
  EXPECT_TRUE(s.contains(Subspace::zero(Q, 5)));
}

TEST(Subspace, ImageOfSubspace) {
  std::mt19937_64 rng(29);
  Matrix m = random_matrix(Q, 4, 5, rng);
  Subspace s = random_subspace(Q, 5, 3, rng);
  Subspace im = image(m, s);
  for (const Vector& v : s.basis_vectors()) EXPECT_TRUE(im.contains(m.apply(v)));
  EXPECT_LE(im.dim(), s.dim());
}

TEST(Subspace, QuotientBasis) {
  std::mt19937_64 rng(31);
  for (FieldSpec f : fields()) {
    for (int t = 0; t < 20; ++t) {
      Subspace a = random_subspace(f, 6, t % 5, rng);
      QuotientBasis q = quotient_basis(a);
      EXPECT_EQ(q.projection.rows(), 6 - a.dim());
      EXPECT_EQ(q.projection * q.complement, Matrix::identity(f, 6 - a.dim()));
      EXPECT_EQ(kernel(q.projection), a);
    }
  }
}

TEST(RowEchelon, AgreesWithBatchKernel) {
  std::mt19937_64 rng(37);
  for (FieldSpec f : fields()) {
    Matrix m = random_low_rank(f, 12, 7, 4, rng);
    RowEchelon e(f, 7);
    std::size_t grew = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) grew += e.add(m.row(r)) ? 1 : 0;
    EXPECT_EQ(grew, rank(m));
    EXPECT_EQ(e.kernel(), kernel(m));
    EXPECT_EQ(e.row_space(), Subspace::row_space(m));
  }
}

TEST(Subspace, AmbientMismatchThrows) {
  try {
    (void)intersect(Subspace::zero(Q, 3), Subspace::zero(Q, 4));
    FAIL();
  } catch (const HopfError& e) {
    EXPECT_EQ(e.code(), ErrorCode::AmbientMismatch);
  }
}
