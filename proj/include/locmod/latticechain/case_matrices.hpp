#pragma once

#include <optional>
#include <string>
#include <vector>

#include "locmod/exactalg/linalg.hpp"
#include "locmod/latticechain/constants.hpp"
#include "locmod/latticechain/lattice.hpp"

namespace locmod {

// Alternating / Symmetric describe a form on one lattice. Cross marks a
// pairing between two different lattices (odd I={m}), where the Gram matrix
// has no reason to be (anti)symmetric.
enum class PairingSymmetry { Alternating, Symmetric, Cross };

enum class Basis { Chart, WorstPoint };

template <RingElement E>
struct CaseMatrices {
  Mat<E> pairing;
  std::optional<Mat<E>> inclusion_in;   // A or A-bar
  std::optional<Mat<E>> inclusion_out;  // A'
  Mat<E> pi_action;
  PairingSymmetry symmetry = PairingSymmetry::Cross;
  std::vector<std::string> basis_labels;             // chart lattice
  std::vector<std::string> complement_basis_labels;  // partner lattice (odd I={m})
};

// Pi = [[0, pi0 I_n], [I_n, 0]]
template <RingElement E>
Mat<E> pi_action_mat(std::size_t n, const E& pi0) {
  Mat<E> P = Mat<E>::zeros(2 * n, 2 * n, pi0);
  for (std::size_t i = 0; i < n; ++i) {
    P(i, n + i) = pi0;
    P(n + i, i) = pi0.one_like();
  }
  return P;
}

namespace detail {

// [[0, -X], [X, 0]]
template <RingElement E>
Mat<E> antidiag_pair(const Mat<E>& X) {
  const std::size_t n = X.rows();
  Mat<E> P = Mat<E>::zeros(2 * n, 2 * n, X.zero());
  P.set_block(0, n, -X);
  P.set_block(n, 0, X);
  return P;
}

inline std::string e_label(int exp, std::size_t i) {
  std::string e = "e" + std::to_string(i);
  if (exp == 0) return e;
  if (exp == 1) return "pi*" + e;
  return "pi^" + std::to_string(exp) + "*" + e;
}

// O_F0-basis of a lattice: x_1..x_n, then pi x_1..pi x_n, where x_t runs over
// `order` (1-based indices into e) with exponents from L.
inline std::vector<std::string> lattice_labels(const LatticeSpec& L, const std::vector<std::size_t>& order) {
  std::vector<std::string> out;
  for (int shift : {0, 1})
    for (auto i : order) out.push_back(e_label(L.exponents[i - 1] + shift, i));
  return out;
}

inline std::vector<std::size_t> natural_order(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i + 1;
  return v;
}

// e_{m+2}..e_n, then e_1..e_{k}, then e_{k+1}..e_{m+1}: the reordering used at
// the worst point, with k = m for Lambda_m and k = m + 1 for Lambda_{m+1}.
inline std::vector<std::size_t> worst_point_order(std::size_t m) {
  std::vector<std::size_t> v;
  for (std::size_t i = m + 2; i <= 2 * m + 1; ++i) v.push_back(i);
  for (std::size_t i = 1; i <= m + 1; ++i) v.push_back(i);
  return v;
}

template <RingElement E>
void check_case_matrices(const CaseMatrices<E>& cm) {
  const Mat<E>& P = cm.pairing;
  E d = det(P);
  if (!(d == d.one_like() || d == -d.one_like())) fail(Errc::Inconsistent, "pairing matrix is not unimodular");
  if (cm.symmetry == PairingSymmetry::Alternating && !(P.transpose() == -P))
    fail(Errc::Inconsistent, "alternating pairing is not antisymmetric");
  if (cm.symmetry == PairingSymmetry::Symmetric && !(P.transpose() == P))
    fail(Errc::Inconsistent, "symmetric pairing is not symmetric");
  if (!(cm.pi_action.transpose() * P == -(P * cm.pi_action)))
    fail(Errc::Inconsistent, "Pi is not anti-self-adjoint for the pairing");
}

}  // namespace detail

// Matrices of one case over the ring of `one`. For the worst-point basis the
// special fiber is implied and pi0 must be zero.
template <RingElement E>
CaseMatrices<E> case_matrices(const CaseId& c, const E& pi0, Basis basis = Basis::Chart) {
  const E one = pi0.one_like();
  const auto n = static_cast<std::size_t>(c.n), m = static_cast<std::size_t>(c.m);
  CaseMatrices<E> cm;

  if (basis == Basis::WorstPoint) {
    if (c.family != Family::OddM) fail(Errc::UnsupportedCase, "the worst-point basis exists for odd n, I={m} only");
    if (!pi0.is_zero()) fail(Errc::PreconditionViolated, "the worst-point basis lives on the special fiber (pi0 = 0)");
    Mat<E> K = k_mat(n, one), Jp = jprime_mat(2 * m, one), I = unit_mat(n, one);
    Mat<E> A = Mat<E>::zeros(2 * n, 2 * n, one);
    A.set_block(0, 0, I - K);
    A.set_block(n, 0, K);
    A.set_block(n, n, I - K);
    cm.inclusion_in = A;
    cm.pairing = Mat<E>::zeros(2 * n, 2 * n, one);
    cm.pairing.set_block(0, n, Jp - K);
    cm.pairing.set_block(n, 0, K - Jp);
    cm.pi_action = pi_action_mat(n, one.zero_like());
    cm.symmetry = PairingSymmetry::Cross;
    auto order = detail::worst_point_order(m);
    cm.basis_labels = detail::lattice_labels(standard_lattice(c.m, c.n), order);
    cm.complement_basis_labels = detail::lattice_labels(standard_lattice(c.m + 1, c.n), order);
    detail::check_case_matrices(cm);
    return cm;
  }

  cm.pi_action = pi_action_mat(n, pi0);
  switch (c.family) {
    case Family::OddM: {
      cm.pairing = detail::antidiag_pair(j_mat(m, m + 1, one));
      cm.symmetry = PairingSymmetry::Cross;
      // row/column blocks m, 1, m, m, 1, m
      const std::size_t bl[7] = {0, m, m + 1, 2 * m + 1, 3 * m + 1, 3 * m + 2, 4 * m + 2};
      auto put = [&](Mat<E>& X, int rb, int cb, const Mat<E>& v) { X.set_block(bl[rb], bl[cb], v); };
      Mat<E> Im = unit_mat(m, one), one11 = unit_mat(1, one), pi011 = Mat<E>(1, 1, pi0);
      Mat<E> A = Mat<E>::zeros(2 * n, 2 * n, one);
      put(A, 0, 0, Im);
      put(A, 1, 4, pi011);
      put(A, 2, 2, Im);
      put(A, 3, 3, Im);
      put(A, 4, 1, one11);
      put(A, 5, 5, Im);
      Mat<E> Ap = Mat<E>::zeros(2 * n, 2 * n, one);
      put(Ap, 0, 3, pi0 * Im);
      put(Ap, 1, 1, one11);
      put(Ap, 2, 5, pi0 * Im);
      put(Ap, 3, 0, Im);
      put(Ap, 4, 4, one11);
      put(Ap, 5, 2, Im);
      cm.inclusion_in = A;
      cm.inclusion_out = Ap;
      auto order = detail::natural_order(n);
      cm.basis_labels = detail::lattice_labels(standard_lattice(c.m, c.n), order);
      cm.complement_basis_labels = detail::lattice_labels(standard_lattice(c.m + 1, c.n), order);
      break;
    }
    case Family::OddZero: {
      cm.pairing = -j2_mat(2 * n, one);
      cm.symmetry = PairingSymmetry::Alternating;
      cm.basis_labels = detail::lattice_labels(standard_lattice(0, c.n), detail::natural_order(n));
      break;
    }
    case Family::EvenM: {
      cm.pairing = detail::antidiag_pair(j2_mat(2 * m, one));
      cm.symmetry = PairingSymmetry::Symmetric;
      cm.basis_labels = detail::lattice_labels(standard_lattice(c.m, c.n), detail::natural_order(n));
      break;
    }
  }
  detail::check_case_matrices(cm);
  return cm;
}

}  // namespace locmod
