#include <random>

#include <gtest/gtest.h>

#include "test_util.hpp"

#include "locmod/worstpoint.hpp"

using namespace locmod;
using testutil::code_of;

namespace {

bool preserves_form(const Mat<Fq>& g) {
  const auto J = j2_mat(g.rows(), g.zero());
  return g.transpose() * J * g == J;
}

Mat<Fq> row_from_index(std::uint64_t idx, std::size_t len, const FiniteField& K) {
  Mat<Fq> c = Mat<Fq>::zeros(1, len, K.zero());
  for (std::size_t j = 0; j < len; ++j) {
    c(0, j) = K.at(static_cast<std::uint32_t>(idx % K.order()));
    idx /= K.order();
  }
  return c;
}

}  // namespace

TEST(Completion, EveryNonzeroRowOfSmallSpaces) {
  for (std::uint64_t q : {3u, 5u}) {
    const FiniteField& K = FiniteField::prime(static_cast<std::uint32_t>(q));
    for (std::size_t N : {2u, 4u}) {
      const std::uint64_t total = ipow(q, N);
      for (std::uint64_t idx = 1; idx < total; ++idx) {
        auto c = row_from_index(idx, N, K);
        auto g = symplectic_complete(c);
        ASSERT_TRUE(preserves_form(g)) << c.str();
        ASSERT_EQ(g.row(0), c);
      }
    }
  }
}

TEST(Completion, RandomRowsInSize6) {
  const FiniteField& K = FiniteField::prime(5);
  std::mt19937_64 rng(2);
  for (int t = 0; t < 300; ++t) {
    auto c = random_row(6, K, rng);
    if (c.is_zero()) continue;
    auto g = symplectic_complete(c);
    EXPECT_TRUE(preserves_form(g));
    EXPECT_TRUE(is_symplectic(g));
    EXPECT_EQ(g.row(0), c);
  }
}

TEST(Completion, Errors) {
  const FiniteField& K = FiniteField::prime(5);
  EXPECT_EQ(code_of([&] { symplectic_complete(Mat<Fq>::zeros(1, 4, K.zero())); }), Errc::ZeroVector);
  EXPECT_EQ(code_of([&] { symplectic_complete(Mat<Fq>::identity(1, K.zero())); }),
            Errc::ShapeMismatch);
  EXPECT_EQ(code_of([&] { symplectic_complete(Mat<Fq>::zeros(2, 4, K.zero())); }), Errc::ShapeMismatch);
}

TEST(Transvections, AreSymplectic) {
  const FiniteField& K = FiniteField::prime(7);
  std::mt19937_64 rng(8);
  for (int t = 0; t < 50; ++t) {
    EXPECT_TRUE(preserves_form(transvection(random_row(4, K, rng), K.at(3))));
    EXPECT_TRUE(preserves_form(random_symplectic(6, K, rng)));
  }
}

TEST(Stabilizer, IdentityDecomposesTrivially) {
  const FiniteField& K = FiniteField::prime(5);
  auto t = stabilizer_decompose(Mat<Fq>::identity(4, K.zero()));
  EXPECT_EQ(t.g1, Mat<Fq>::identity(2, K.zero()));
  EXPECT_TRUE(t.g2.is_zero());
  EXPECT_TRUE(t.g3.is_zero());
}

TEST(Stabilizer, RejectsNonMembers) {
  const FiniteField& K = FiniteField::prime(5);
  std::mt19937_64 rng(1);
  Mat<Fq> g;
  do {
    g = random_symplectic(4, K, rng);
  } while (g.row(0) == c0_row(4, K));
  EXPECT_EQ(code_of([&] { stabilizer_decompose(g); }), Errc::NotInStabilizer);
  auto scaled = Mat<Fq>::identity(4, K.zero());
  scaled(1, 1) = K.at(2);
  EXPECT_EQ(code_of([&] { stabilizer_decompose(scaled); }), Errc::NotInStabilizer);
  EXPECT_EQ(code_of([&] { stabilizer_decompose(Mat<Fq>::identity(3, K.zero())); }), Errc::ShapeMismatch);
}

TEST(Stabilizer, RoundTripInverseAndAction) {
  const FiniteField& K = FiniteField::prime(5);
  std::mt19937_64 rng(99);
  for (std::size_t m : {2u, 3u}) {
    const std::size_t N = 2 * m;
    auto pts = nprime_points(m, m, 5);
    ASSERT_FALSE(pts.empty());
    for (int t = 0; t < 200; ++t) {
      auto tr = random_stabilizer_triple(N, K, rng);
      auto g = assemble_stabilizer(tr);
      ASSERT_TRUE(preserves_form(g));
      EXPECT_EQ(g.row(0), c0_row(N, K));
      auto back = stabilizer_decompose(g);
      EXPECT_EQ(back.g1, tr.g1);
      EXPECT_EQ(back.g2, tr.g2);
      EXPECT_EQ(back.g3, tr.g3);
      EXPECT_EQ(assemble_stabilizer(stabilizer_inverse(tr)), inverse(g));

      const auto& y = pts[rng() % pts.size()];
      auto moved = act_on_nprime(y, tr);
      EXPECT_TRUE(is_nprime_point(moved, m));
      // the action on N' is the action on N transported through the lift
      EXPECT_EQ(restrict_to_c0(act_on_npoint(lift_over_c0(y), g)).Y1, moved.Y1);
      EXPECT_EQ(restrict_to_c0(act_on_npoint(lift_over_c0(y), g)).Y2, moved.Y2);
    }
  }
}
