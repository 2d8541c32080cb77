#pragma once

#include <string>
#include <vector>

#include "locmod/exactalg.hpp"
#include "locmod/latticechain/constants.hpp"

namespace locmod {

// Fields used here must have odd characteristic: the lift over c0 needs 1/2
// and sigma-anti-fixed would otherwise mean sigma-fixed.
inline const FiniteField& odd_field(std::uint64_t q) {
  const FiniteField& K = FiniteField::of_order(q);
  if (K.characteristic() == 2) fail(Errc::CharacteristicTwo, "worst-point analysis needs odd q");
  return K;
}

// Basis of {X : X + sigma(X) = 0} in size two_m, i.e. J X antisymmetric.
// Solved as a linear system rather than written down, so the sign
// conventions of sigma are what is actually tested.
inline std::vector<Mat<Fq>> anti_fixed_basis(std::size_t two_m, const FiniteField& K) {
  if (two_m % 2) fail(Errc::InvalidArgument, "anti_fixed_basis needs an even size");
  if (K.characteristic() == 2) fail(Errc::CharacteristicTwo, "anti_fixed_basis needs odd characteristic");
  const std::size_t N = two_m, NN = N * N;
  Mat<Fq> L = Mat<Fq>::zeros(NN, NN, K.zero());
  for (std::size_t k = 0; k < NN; ++k) {
    Mat<Fq> E = Mat<Fq>::zeros(N, N, K.zero());
    E(k / N, k % N) = K.one();
    Mat<Fq> img = E + sigma(E);
    for (std::size_t t = 0; t < NN; ++t) L(t, k) = img(t / N, t % N);
  }
  Mat<Fq> ker = right_kernel(L);
  std::vector<Mat<Fq>> out;
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    Mat<Fq> X = Mat<Fq>::zeros(N, N, K.zero());
    for (std::size_t t = 0; t < NN; ++t) X(t / N, t % N) = ker(t, c);
    out.push_back(std::move(X));
  }
  return out;
}

inline bool is_anti_fixed(const Mat<Fq>& X) { return (X + sigma(X)).is_zero(); }

enum class OrbitGroup { GL, Sp };

inline const char* orbit_group_name(OrbitGroup g) { return g == OrbitGroup::GL ? "GL" : "Sp"; }

// Orbit O_{2^i,1^{2m-2i}}: i Jordan blocks of size two.
struct OrbitLabel {
  std::size_t two_blocks = 0;
  std::size_t ambient = 0;
  OrbitGroup group = OrbitGroup::GL;
  std::string str() const {
    return std::string(orbit_group_name(group)) + "_" + std::to_string(ambient) + "(2^" + std::to_string(two_blocks) +
           ")";
  }
};

// For square-zero matrices the rank is a complete invariant of the Jordan type.
inline OrbitLabel classify_orbit(const Mat<Fq>& X) {
  if (!X.square()) fail(Errc::NotSquare, "classify_orbit of " + X.shape());
  if (!(X * X).is_zero()) fail(Errc::NotNilpotentOrder2, "X^2 != 0");
  OrbitLabel l;
  l.ambient = X.rows();
  l.two_blocks = rank(X);
  l.group = X.rows() % 2 == 0 && is_anti_fixed(X) ? OrbitGroup::Sp : OrbitGroup::GL;
  return l;
}

inline std::size_t orbit_dimension(const OrbitLabel& l) {
  if (2 * l.two_blocks > l.ambient) fail(Errc::InvalidArgument, "more two-blocks than fit: " + l.str());
  if (l.group == OrbitGroup::Sp && l.two_blocks % 2)
    fail(Errc::InvalidArgument, "symplectic square-zero orbits have even rank: " + l.str());
  const std::size_t gl = 2 * (l.ambient - l.two_blocks) * l.two_blocks;
  return l.group == OrbitGroup::GL ? gl : gl / 2;
}

namespace detail {
// all k-minors of A vanish; vacuous when k exceeds both dimensions
inline bool wedge_vanishes(const Mat<Fq>& A, std::size_t k) { return rank(A) < k; }
}  // namespace detail

// Points of the worst-point scheme N: X1 is 2m x 2m, X3 a row of length 2m.
struct NPoint {
  Mat<Fq> X1, X3;
};

struct NPrimePoint {
  Mat<Fq> Y1, Y2;
};

inline bool is_npoint(const NPoint& p, std::size_t s) {
  const std::size_t N = p.X1.rows();
  if (!p.X1.square() || N % 2 || p.X3.rows() != 1 || p.X3.cols() != N)
    fail(Errc::ShapeMismatch, "NPoint needs X1 2m x 2m and X3 1 x 2m");
  const Fq z = p.X1.zero();
  if (!(-(j2_mat(N, z) * p.X3.transpose() * p.X3) - p.X1 - sigma(p.X1)).is_zero()) return false;
  if (!(p.X1 * p.X1).is_zero()) return false;
  if (!(p.X3 * p.X1).is_zero()) return false;
  return detail::wedge_vanishes(vstack(p.X1, p.X3), s + 1);
}

inline bool is_nprime_point(const NPrimePoint& p, std::size_t s) {
  const std::size_t N = p.Y1.rows();
  if (!p.Y1.square() || N % 2 || p.Y2.rows() != 1 || p.Y2.cols() != N)
    fail(Errc::ShapeMismatch, "NPrimePoint needs Y1 (2m-2) x (2m-2) and Y2 1 x (2m-2)");
  if (!(p.Y1 * p.Y1).is_zero()) return false;
  if (!is_anti_fixed(p.Y1)) return false;
  if (!(p.Y2 * p.Y1).is_zero()) return false;
  return s == 0 ? false : detail::wedge_vanishes(vstack(p.Y1, p.Y2), s);
}

inline Mat<Fq> c0_row(std::size_t two_m, const FiniteField& K) {
  Mat<Fq> c = Mat<Fq>::zeros(1, two_m, K.zero());
  c(0, 0) = K.one();
  return c;
}

// The point of N over c0 attached to (Y1, Y2):
//   X1 = [[0, 0, 0], [sigma(Y2), Y1, 0], [1/2, Y2, 0]].
inline NPoint lift_over_c0(const NPrimePoint& p) {
  const std::size_t N = p.Y1.rows() + 2;
  const Fq z = p.Y1.zero();
  Mat<Fq> X1 = Mat<Fq>::zeros(N, N, z);
  X1.set_block(1, 0, sigma(p.Y2));
  X1.set_block(1, 1, p.Y1);
  X1(N - 1, 0) = z.from_int(2).inverse();
  X1.set_block(N - 1, 1, p.Y2);
  return {X1, c0_row(N, z.field())};
}

// Inverse of lift_over_c0 on the fiber over c0. PreconditionViolated when
// X3 != c0 or X1 lacks the expected zero pattern.
inline NPrimePoint restrict_to_c0(const NPoint& p) {
  const std::size_t N = p.X1.rows();
  if (N < 2) fail(Errc::PreconditionViolated, "fiber over c0 needs 2m >= 2");
  if (!(p.X3 - c0_row(N, p.X1.zero().field())).is_zero()) fail(Errc::PreconditionViolated, "X3 is not c0");
  NPrimePoint y{p.X1.block(1, 1, N - 2, N - 2), p.X1.block(N - 1, 1, 1, N - 2)};
  if (!(lift_over_c0(y).X1 - p.X1).is_zero())
    fail(Errc::PreconditionViolated, "X1 does not have the shape of a point over c0");
  return y;
}

// Right action of g in Sp_{2m} on N: (g^{-1} X1 g, X3 g).
inline NPoint act_on_npoint(const NPoint& p, const Mat<Fq>& g) { return {inverse(g) * p.X1 * g, p.X3 * g}; }

}  // namespace locmod
