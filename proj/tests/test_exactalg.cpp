#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "test_util.hpp"

#include "locmod/exactalg.hpp"

using namespace locmod;
using testutil::code_of;

namespace {

// Leibniz formula; independent of both determinant paths in the library.
template <RingElement E>
E det_by_permutations(const Mat<E>& A) {
  const std::size_t n = A.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  E total = A.zero();
  do {
    E t = A.zero().one_like();
    for (std::size_t i = 0; i < n; ++i) t = t * A(i, p[i]);
    std::size_t inv = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inv += p[i] > p[j];
    total = inv % 2 ? total - t : total + t;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

Mat<Fq> random_mat(std::size_t r, std::size_t c, const FiniteField& K, std::mt19937_64& rng) {
  Mat<Fq> M = Mat<Fq>::zeros(r, c, K.zero());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) M(i, j) = K.at(static_cast<std::uint32_t>(rng() % K.order()));
  return M;
}

}  // namespace

TEST(Rational, NormalizesSignAndGcd) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(3, -6).num(), -1);
  EXPECT_EQ(Rational(3, -6).den(), 2);
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(2, 3) * Rational(3, 4), Rational(1, 2));
}

TEST(Rational, ZeroHasNoInverse) { EXPECT_EQ(code_of([] { Rational(0).inverse(); }), Errc::NotInvertible); }

TEST(Rational, OverflowIsReported) {
  Rational big(std::int64_t{1} << 62);
  EXPECT_EQ(code_of([&] { (void)(big * big); }), Errc::Overflow);
}

TEST(FiniteField, RejectsBadModuli) {
  EXPECT_EQ(code_of([] { FiniteField::prime(4); }), Errc::NonPrimeModulus);
  EXPECT_EQ(code_of([] { FiniteField::of_order(6); }), Errc::NonPrimeModulus);
  EXPECT_EQ(code_of([] { FiniteField::of_order(2); }), Errc::CharacteristicTwo);
  EXPECT_EQ(FiniteField::of_order(2, FieldOptions{true}).order(), 2u);
}

TEST(FiniteField, ExtensionFieldAxiomsF9) {
  const FiniteField& K = FiniteField::of_order(9);
  ASSERT_EQ(K.characteristic(), 3u);
  ASSERT_EQ(K.degree(), 2u);
  for (std::uint32_t a = 0; a < 9; ++a) {
    if (a) {
      EXPECT_EQ(K.at(a) * K.at(a).inverse(), K.one());
    }
    for (std::uint32_t b = 0; b < 9; ++b)
      for (std::uint32_t c = 0; c < 9; ++c)
        EXPECT_EQ(K.at(a) * (K.at(b) + K.at(c)), K.at(a) * K.at(b) + K.at(a) * K.at(c));
  }
}

TEST(FiniteField, PrimeFieldArithmetic) {
  const FiniteField& K = FiniteField::prime(7);
  EXPECT_EQ(K.elem(3) * K.elem(5), K.elem(1));
  EXPECT_EQ(K.elem(3).inverse(), K.elem(5));
  EXPECT_EQ(K.elem(-1), K.elem(6));
  EXPECT_EQ(code_of([&] { K.zero().inverse(); }), Errc::NotInvertible);
}

TEST(Polynomial, CanonicalFormIgnoresConstructionOrder) {
  auto R = PolyRing<Rational>::make({"x", "y"}, Rational(0));
  auto x = R->var("x"), y = R->var("y");
  auto lhs = (x + y) * (x + y);
  auto rhs = y * y + x * y + y * x + x * x;
  EXPECT_EQ(lhs, rhs);
  EXPECT_TRUE((lhs - rhs).is_zero());
  EXPECT_EQ(lhs.total_degree(), 2);
}

TEST(Polynomial, EvaluatesIntoAField) {
  auto R = PolyRing<Rational>::make({"x", "y"}, Rational(0));
  auto p = R->var("x") * R->var("x") - R->constant(Rational(1, 2)) * R->var("y");
  const FiniteField& K = FiniteField::prime(5);
  auto conv = [&](const Rational& c) { return K.elem(c.num()) * K.elem(c.den()).inverse(); };
  // 2^2 - 3/2 = 4 - 3*3 = -5 = 0 mod 5
  EXPECT_TRUE(p.evaluate(std::vector<Fq>{K.elem(2), K.elem(3)}, conv, K.zero()).is_zero());
}

TEST(QuotientPi, PiSquaredIsPi0) {
  auto R = PolyRing<Rational>::make({"pi0"}, Rational(0));
  auto Q = QuotientPiRing<Poly<Rational>>::make(R->var("pi0"));
  EXPECT_EQ(Q->pi() * Q->pi(), Q->embed(R->var("pi0")));
  EXPECT_EQ((Q->one() + Q->pi()) * (Q->one() - Q->pi()), Q->one() - Q->embed(R->var("pi0")));
}

TEST(QuotientPi, DualNumbersOverF3) {
  const FiniteField& K = FiniteField::prime(3);
  auto Q = QuotientPiRing<Fq>::make(K.zero());
  EXPECT_TRUE((Q->pi() * Q->pi()).is_zero());
  auto u = Q->make_elem(K.elem(2), K.elem(1));  // 2 + pi
  EXPECT_EQ(u * u.inverse(), Q->one());
  EXPECT_EQ(code_of([&] { Q->pi().inverse(); }), Errc::NotInvertible);
}

TEST(Matrix, BlocksAndShapes) {
  const FiniteField& K = FiniteField::prime(5);
  auto A = Mat<Fq>::from_ints({{1, 2, 3}, {4, 5, 6}}, K.zero());
  EXPECT_EQ(A.transpose().shape(), "3x2");
  EXPECT_EQ(A.block(0, 1, 2, 2), Mat<Fq>::from_ints({{2, 3}, {0, 1}}, K.zero()));
  EXPECT_EQ(vstack(A.top(1), A.bottom(1)), A);
  EXPECT_EQ(hstack(A.left(1), A.right(2)), A);
  EXPECT_EQ(code_of([&] { (void)(A * A); }), Errc::ShapeMismatch);
  EXPECT_EQ(code_of([&] { (void)(A + A.transpose()); }), Errc::ShapeMismatch);
}

TEST(Determinant, AgreesWithPermutationExpansionOverF7) {
  const FiniteField& K = FiniteField::prime(7);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    auto A = random_mat(5, 5, K, rng);
    EXPECT_EQ(det(A), det_by_permutations(A));
    EXPECT_EQ(detail::det_expansion(A), det_by_permutations(A));
  }
}

TEST(Determinant, GenericSymbolic3x3) {
  std::vector<std::string> names;
  for (int i = 0; i < 9; ++i) names.push_back("x" + std::to_string(i));
  auto R = PolyRing<Rational>::make(names, Rational(0));
  Mat<Poly<Rational>> A = Mat<Poly<Rational>>::zeros(3, 3, R->zero());
  for (int i = 0; i < 9; ++i) A(i / 3, i % 3) = R->var(i);
  auto d = det(A);
  EXPECT_EQ(d, det_by_permutations(A));
  EXPECT_EQ(d.size(), 6u);
  EXPECT_EQ(code_of([&] { det(A.top(2)); }), Errc::NotSquare);
}

TEST(LinearAlgebra, RankNullityAndKernels) {
  const FiniteField& K = FiniteField::prime(3);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    auto A = random_mat(3, 5, K, rng);
    if (t % 2) A = random_mat(4, 2, K, rng) * random_mat(2, 5, K, rng);  // rank <= 2
    auto Kr = right_kernel(A);
    EXPECT_TRUE((A * Kr).is_zero());
    EXPECT_EQ(rank(A) + Kr.cols(), A.cols());
    auto Kl = left_kernel(A);
    EXPECT_TRUE((Kl * A).is_zero());
    EXPECT_EQ(rank(A) + Kl.rows(), A.rows());
    EXPECT_EQ(row_space_basis(A).rows(), rank(A));
  }
}

TEST(LinearAlgebra, SolveAndInverse) {
  const FiniteField& K = FiniteField::prime(11);
  std::mt19937_64 rng(3);
  int invertible = 0;
  for (int t = 0; t < 30; ++t) {
    auto A = random_mat(4, 4, K, rng);
    if (det(A).is_zero()) {
      EXPECT_EQ(code_of([&] { inverse(A); }), Errc::NotInvertible);
      continue;
    }
    ++invertible;
    EXPECT_EQ(A * inverse(A), Mat<Fq>::identity(4, K.zero()));
    auto b = random_mat(4, 1, K, rng);
    auto sol = solve_linear(A, b);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(A * sol->particular, b);
    EXPECT_EQ(sol->kernel.cols(), 0u);
  }
  EXPECT_GT(invertible, 20);
  // inconsistent system
  auto Z = Mat<Fq>::zeros(2, 2, K.zero());
  auto b = Mat<Fq>::from_ints({{1}, {0}}, K.zero());
  EXPECT_FALSE(solve_linear(Z, b).has_value());
}

TEST(LinearAlgebra, RowReductionNeedsAField) {
  auto R = PolyRing<Rational>::make({"x"}, Rational(0));
  Mat<Poly<Rational>> A = Mat<Poly<Rational>>::identity(2, R->zero());
  EXPECT_EQ(code_of([&] { rref(A); }), Errc::NotAField);
}

TEST(Minors, WitnessIsANonzeroMinor) {
  const FiniteField& K = FiniteField::prime(5);
  std::mt19937_64 rng(9);
  for (int t = 0; t < 30; ++t) {
    auto A = t % 3 ? random_mat(3, 2, K, rng) * random_mat(2, 4, K, rng) : random_mat(3, 4, K, rng);
    for (std::size_t k = 1; k <= 3; ++k) {
      auto w = nonvanishing_minor(A, k);
      EXPECT_EQ(w.has_value(), rank(A) >= k);
      if (w) {
        EXPECT_FALSE(w->value.is_zero());
        EXPECT_EQ(w->value, det(A.select(w->rows, w->cols)));
      }
    }
  }
  auto A = Mat<Fq>::identity(2, K.zero());
  EXPECT_EQ(code_of([&] { nonvanishing_minor(A, 3); }), Errc::KTooLarge);
}

TEST(CharPoly, MatchesDeterminantAtEveryPoint) {
  const FiniteField& K = FiniteField::prime(7);
  std::mt19937_64 rng(17);
  for (int t = 0; t < 10; ++t) {
    auto A = random_mat(4, 4, K, rng);
    auto p = char_poly(A);
    EXPECT_EQ(p.degree(), 4);
    for (std::uint32_t v = 0; v < 7; ++v) {
      Fq acc = K.zero(), pw = K.one();
      for (int i = 0; i <= p.degree(); ++i) {
        acc = acc + p.coeff(i) * pw;
        pw = pw * K.at(v);
      }
      auto tI = Mat<Fq>::identity(4, K.zero()).map([&](const Fq& x) { return x * K.at(v); });
      EXPECT_EQ(acc, det_by_permutations(tI - A));
    }
  }
}
