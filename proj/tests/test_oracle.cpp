#include <set>

#include <gtest/gtest.h>

#include "test_util.hpp"

#include "locmod/charts.hpp"

using namespace locmod;
using testutil::code_of;

namespace {

// Restriction of P to the column span of B (full column rank), or nullopt
// when the span is not P-stable.
std::optional<Mat<Fq>> restrict_to_span(const Mat<Fq>& B, const Mat<Fq>& P) {
  Mat<Fq> PB = P * B;
  Mat<Fq> out = Mat<Fq>::zeros(B.cols(), B.cols(), B.zero());
  for (std::size_t j = 0; j < B.cols(); ++j) {
    auto sol = solve_linear(B, PB.col(j));
    if (!sol) return std::nullopt;
    out.set_block(0, j, sol->particular);
  }
  return out;
}

bool nilpotent_of_small_rank(const Mat<Fq>& R, std::size_t max_rank) {
  if (rank(R) > max_rank) return false;
  Mat<Fq> P = R;
  for (std::size_t i = 1; i < R.rows(); ++i) P = P * R;
  return P.is_zero();
}

// Special-fiber conditions for odd n, I={m}, stated through spans and ranks
// instead of the chart's row selections.
bool satisfies_raw_conditions(const CaseId& c, const CaseMatrices<Fq>& cm, const Mat<Fq>& F) {
  const std::size_t s = c.s;
  if (!(F.transpose() * cm.inclusion_in->transpose() * cm.pairing * F).is_zero()) return false;
  auto R = restrict_to_span(F, cm.pi_action);
  if (!R || !nilpotent_of_small_rank(*R, s)) return false;
  Mat<Fq> G = right_kernel(F.transpose() * cm.pairing.transpose());
  if (G.cols() != F.cols()) return false;
  // A'G must lie in span F
  Mat<Fq> AG = *cm.inclusion_out * G;
  for (std::size_t j = 0; j < AG.cols(); ++j)
    if (!solve_linear(F, AG.col(j))) return false;
  auto Rp = restrict_to_span(G, cm.pi_action);
  return Rp && nilpotent_of_small_rank(*Rp, s);
}

std::set<std::vector<std::uint32_t>> independent_raw_set(const CaseId& c, std::uint64_t q) {
  const FiniteField& K = FiniteField::of_order(q, FieldOptions{true});
  const auto cm = case_matrices(c, K.zero());
  const std::size_t n = c.n, s = c.s, r = c.r;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n * n; ++i) total *= q;
  std::set<std::vector<std::uint32_t>> out;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t t = idx;
    Mat<Fq> a = Mat<Fq>::zeros(r, s, K.zero()), b = Mat<Fq>::zeros(r, r, K.zero()),
            cc = Mat<Fq>::zeros(s, s, K.zero()), d = Mat<Fq>::zeros(s, r, K.zero());
    std::vector<std::uint32_t> key;
    for (Mat<Fq>* X : {&a, &b, &cc, &d})
      for (std::size_t i = 0; i < X->rows(); ++i)
        for (std::size_t j = 0; j < X->cols(); ++j) {
          (*X)(i, j) = K.at(static_cast<std::uint32_t>(t % q));
          key.push_back(static_cast<std::uint32_t>(t % q));
          t /= q;
        }
    if (satisfies_raw_conditions(c, cm, assemble_chart(a, b, cc, d))) out.insert(key);
  }
  return out;
}

const CaseId kN3 = CaseId::make(Family::OddM, 3, 1);

}  // namespace

// Frozen from independent_raw_set: 4 points over F_2, 9 over F_3.
TEST(Oracle, IndependentRawCountsAreFrozen) {
  EXPECT_EQ(independent_raw_set(kN3, 2).size(), 4u);
  EXPECT_EQ(independent_raw_set(kN3, 3).size(), 9u);
}

TEST(Oracle, LibraryRawCountMatchesIndependentOracle) {
  for (std::uint64_t q : {2u, 3u}) {
    auto res = brute_force_chart_oracle(kN3, q, Fiber::Special);
    EXPECT_EQ(res.raw_count, independent_raw_set(kN3, q).size()) << "q=" << q;
    EXPECT_EQ(res.raw_space, q * q * q * q * q * q * q * q * q);
  }
}

TEST(Oracle, OddCharacteristicSetsCoincide) {
  for (std::uint64_t q : {3u, 5u}) {
    auto res = brute_force_chart_oracle(kN3, q, Fiber::Special);
    EXPECT_TRUE(res.param_defined);
    EXPECT_EQ(res.raw_count, q * q) << "q=" << q;
    EXPECT_EQ(res.param_count, q * q) << "q=" << q;
    EXPECT_TRUE(res.equal) << "q=" << q;
  }
}

TEST(Oracle, ParameterizationImageLiesInIndependentRawSet) {
  const FiniteField& K = FiniteField::prime(3);
  const auto cm = case_matrices(kN3, K.zero());
  Chart ch = build_chart(kN3);
  ASSERT_EQ(ch.free_vars.size(), 2u);
  for (std::uint32_t x = 0; x < 3; ++x)
    for (std::uint32_t y = 0; y < 3; ++y)
      EXPECT_TRUE(satisfies_raw_conditions(kN3, cm, specialize(ch.F, std::vector<Fq>{K.at(x), K.at(y)}, K.zero())));
}

// Over F_2 the raw side has 4 points but the parameterization divides by 2.
TEST(Oracle, CharacteristicTwoCannotBeParameterized) {
  auto res = brute_force_chart_oracle(kN3, 2, Fiber::Special);
  EXPECT_EQ(res.raw_count, 4u);
  EXPECT_FALSE(res.param_defined);
  EXPECT_FALSE(res.equal);
  EXPECT_FALSE(res.note.empty());
}

// over F_2[pi]/(pi^2) the raw side is enumerable (4^9 tuples); it contains the special fiber
TEST(Oracle, NilpotentFiberOverF2ContainsSpecialFiber) {
  auto nil = brute_force_chart_oracle(kN3, 2, Fiber::NilpotentGeneric);
  EXPECT_EQ(nil.raw_space, 262144u);
  EXPECT_GE(nil.raw_count, 4u);
  EXPECT_FALSE(nil.param_defined);
  // 9^9 tuples over F_3[pi]/(pi^2) exceed the default budget
  EXPECT_EQ(code_of([] { brute_force_chart_oracle(kN3, 3, Fiber::NilpotentGeneric); }), Errc::TooLarge);
}

TEST(Oracle, BudgetIsEnforcedUpFront) {
  EXPECT_EQ(code_of([] { brute_force_chart_oracle(CaseId::make(Family::OddM, 5, 1), 3, Fiber::Special); }),
            Errc::TooLarge);
  EXPECT_EQ(code_of([] { brute_force_chart_oracle(kN3, 3, Fiber::Special, OracleOptions{1000, 1}); }),
            Errc::TooLarge);
}

TEST(Oracle, WorkersDoNotChangeTheAnswer) {
  auto one = brute_force_chart_oracle(kN3, 3, Fiber::Special, OracleOptions{100'000'000, 1});
  auto three = brute_force_chart_oracle(kN3, 3, Fiber::Special, OracleOptions{100'000'000, 3});
  EXPECT_EQ(one.raw_count, three.raw_count);
  EXPECT_EQ(one.equal, three.equal);
}
