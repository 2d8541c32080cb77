#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "locmod/worstpoint/npoint.hpp"

namespace locmod {

inline bool is_symplectic(const Mat<Fq>& g) {
  if (!g.square() || g.rows() % 2) return false;
  Mat<Fq> J = j2_mat(g.rows(), g.zero());
  return (g.transpose() * J * g - J).is_zero();
}

namespace detail {

using Vec = std::vector<Fq>;

inline Fq pairing(const Vec& u, const Vec& v) {
  // u J v^t with J(i, N-1-i) = +1 for i < N/2, -1 otherwise
  const std::size_t N = u.size();
  Fq acc = u[0].zero_like();
  for (std::size_t i = 0; i < N; ++i) {
    Fq t = u[i] * v[N - 1 - i];
    acc = i < N / 2 ? acc + t : acc - t;
  }
  return acc;
}

inline bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline Vec axpy(const Vec& y, const Fq& a, const Vec& x) {
  Vec out = y;
  for (std::size_t i = 0; i < y.size(); ++i) out[i] = out[i] + a * x[i];
  return out;
}

}  // namespace detail

// Symplectic matrix with first row c. Builds c_1 = c, d_1, ..., c_m, d_m
// with <c_i, d_i> = 1 and the planes mutually orthogonal, puts them as the
// columns (c_1 .. c_m d_m .. d_1) of g and returns g^t.
// d_i is the first (projected) standard vector pairing nontrivially with c_i,
// c_{i+1} the first nonzero projected standard vector.
inline Mat<Fq> symplectic_complete(const Mat<Fq>& c) {
  using detail::Vec;
  if (c.rows() != 1 || c.cols() == 0 || c.cols() % 2) fail(Errc::ShapeMismatch, "c must be a row of even length");
  if (c.is_zero()) fail(Errc::ZeroVector, "cannot complete the zero vector");
  const std::size_t N = c.cols(), m = N / 2;
  const Fq z = c.zero(), one = z.one_like();
  // the projected standard basis spans the orthogonal complement of the planes found so far
  std::vector<Vec> pool(N, Vec(N, z));
  for (std::size_t i = 0; i < N; ++i) pool[i][i] = one;
  std::vector<Vec> cs, ds;
  Vec ci(N, z);
  for (std::size_t j = 0; j < N; ++j) ci[j] = c(0, j);
  for (std::size_t step = 0; step < m; ++step) {
    if (step > 0) {
      auto it = std::find_if(pool.begin(), pool.end(), [](const Vec& v) { return !detail::is_zero_vec(v); });
      if (it == pool.end()) fail(Errc::Inconsistent, "symplectic complement collapsed early");
      ci = *it;
    }
    Vec di;
    for (const Vec& v : pool) {
      Fq lam = detail::pairing(ci, v);
      if (lam.is_zero()) continue;
      di = v;
      Fq inv = lam.inverse();
      for (auto& x : di) x = x * inv;
      break;
    }
    if (di.empty()) fail(Errc::Inconsistent, "no vector pairs nontrivially with c_" + std::to_string(step + 1));
    // v -> v + <v,c> d - <v,d> c kills both pairings
    for (Vec& v : pool) {
      Fq vc = detail::pairing(v, ci), vd = detail::pairing(v, di);
      v = detail::axpy(detail::axpy(v, vc, di), -vd, ci);
    }
    cs.push_back(ci);
    ds.push_back(di);
  }
  Mat<Fq> gt = Mat<Fq>::zeros(N, N, z);  // rows are the columns of g
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      gt(i, j) = cs[i][j];
      gt(N - 1 - i, j) = ds[i][j];
    }
  return gt;
}

// I + lambda J v^t v is a symplectic transvection.
inline Mat<Fq> transvection(const Mat<Fq>& v, const Fq& lambda) {
  const std::size_t N = v.cols();
  Mat<Fq> T = j2_mat(N, v.zero()) * v.transpose() * v;
  return Mat<Fq>::identity(N, v.zero()) + T.map([&](const Fq& x) { return x * lambda; });
}

inline Mat<Fq> random_row(std::size_t len, const FiniteField& K, std::mt19937_64& rng) {
  Mat<Fq> v = Mat<Fq>::zeros(1, len, K.zero());
  for (std::size_t j = 0; j < len; ++j) v(0, j) = K.at(static_cast<std::uint32_t>(rng() % K.order()));
  return v;
}

// Product of random transvections; these generate Sp over a finite field.
inline Mat<Fq> random_symplectic(std::size_t two_m, const FiniteField& K, std::mt19937_64& rng) {
  Mat<Fq> g = Mat<Fq>::identity(two_m, K.zero());
  for (std::size_t t = 0; t < 2 * two_m + 2; ++t)
    g = g * transvection(random_row(two_m, K, rng), K.at(static_cast<std::uint32_t>(rng() % K.order())));
  return g;
}

// Element of the stabilizer of c0 in Sp_{2m}:
//   g = [[1, 0, 0], [-g1 sigma(g2), g1, 0], [g3, g2, 1]].
struct StabilizerTriple {
  Mat<Fq> g1, g2;
  Fq g3;
};

inline Mat<Fq> assemble_stabilizer(const StabilizerTriple& t) {
  const std::size_t k = t.g1.rows(), N = k + 2;
  if (!t.g1.square() || t.g2.rows() != 1 || t.g2.cols() != k)
    fail(Errc::ShapeMismatch, "stabilizer triple needs g1 square and g2 a matching row");
  const Fq z = t.g3.zero_like();
  Mat<Fq> g = Mat<Fq>::zeros(N, N, z);
  g(0, 0) = z.one_like();
  g.set_block(1, 0, -(t.g1 * sigma(t.g2)));
  g.set_block(1, 1, t.g1);
  g(N - 1, 0) = t.g3;
  g.set_block(N - 1, 1, t.g2);
  g(N - 1, N - 1) = z.one_like();
  return g;
}

// Reads (g1, g2, g3) off g and checks the remaining blocks:
// first row c0, g5 = 0, g6 = 1, g4 = -g1 J g2^t, g1 symplectic.
inline StabilizerTriple stabilizer_decompose(const Mat<Fq>& g) {
  if (!g.square() || g.rows() < 2 || g.rows() % 2) fail(Errc::ShapeMismatch, "stabilizer element must be 2m x 2m");
  if (!is_symplectic(g)) fail(Errc::NotInStabilizer, "g is not symplectic");
  const std::size_t N = g.rows(), k = N - 2;
  const Fq z = g.zero();
  if (!(g.row(0) - c0_row(N, z.field())).is_zero()) fail(Errc::NotInStabilizer, "g does not fix c0");
  StabilizerTriple t{g.block(1, 1, k, k), g.block(N - 1, 1, 1, k), g(N - 1, 0)};
  if (!g.block(1, N - 1, k, 1).is_zero()) fail(Errc::NotInStabilizer, "g5 != 0");
  if (g(N - 1, N - 1) != z.one_like()) fail(Errc::NotInStabilizer, "g6 != 1");
  if (!(g.block(1, 0, k, 1) + t.g1 * j2_mat(k, z) * t.g2.transpose()).is_zero())
    fail(Errc::NotInStabilizer, "g4 != -g1 J g2^t");
  if (k > 0 && !is_symplectic(t.g1)) fail(Errc::NotInStabilizer, "g1 is not symplectic");
  return t;
}

// (g1, g2, g3)^{-1} = (g1^{-1}, -g2 g1^{-1}, -g3)
inline StabilizerTriple stabilizer_inverse(const StabilizerTriple& t) {
  Mat<Fq> gi = t.g1.rows() ? inverse(t.g1) : t.g1;
  return {gi, -(t.g2 * gi), -t.g3};
}

// ((Y1, Y2), g) -> (g1^{-1} Y1 g1, Y2 g1 - g2 g1^{-1} Y1 g1)
inline NPrimePoint act_on_nprime(const NPrimePoint& p, const StabilizerTriple& t) {
  if (t.g1.rows() == 0) return p;
  Mat<Fq> conj = inverse(t.g1) * p.Y1 * t.g1;
  return {conj, p.Y2 * t.g1 - t.g2 * conj};
}

inline StabilizerTriple random_stabilizer_triple(std::size_t two_m, const FiniteField& K, std::mt19937_64& rng) {
  if (two_m < 2 || two_m % 2) fail(Errc::InvalidArgument, "stabilizer of c0 lives in Sp_{2m}, m >= 1");
  const std::size_t k = two_m - 2;
  Mat<Fq> g1 = k ? random_symplectic(k, K, rng) : Mat<Fq>::zeros(0, 0, K.zero());
  return {g1, random_row(k, K, rng), K.at(static_cast<std::uint32_t>(rng() % K.order()))};
}

}  // namespace locmod
