#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "locmod/exactalg/error.hpp"
#include "locmod/exactalg/matrix.hpp"
#include "locmod/exactalg/ring.hpp"
#include "locmod/exactalg/upoly.hpp"

namespace locmod {

namespace detail {

constexpr std::size_t kMaxSubsetColumns = 30;

// One Laplace step: extend every partial expansion (keyed by the set of used
// columns) by the entries of `row`. The sign counts used columns to the right
// of the new one, which is the inversion count of the growing permutation.
template <RingElement E>
std::map<std::uint32_t, E> extend_by_row(const std::map<std::uint32_t, E>& cur, const Mat<E>& A, std::size_t row,
                                         std::size_t ncols) {
  std::map<std::uint32_t, E> next;
  for (const auto& [mask, val] : cur) {
    for (std::size_t c = 0; c < ncols; ++c) {
      if (mask & (1u << c)) continue;
      const E& a = A(row, c);
      if (a.is_zero()) continue;
      std::uint32_t above = mask >> (c + 1);
      E term = val * a;
      if (std::popcount(above) & 1) term = -term;
      std::uint32_t key = mask | (1u << c);
      auto it = next.find(key);
      if (it == next.end()) next.emplace(key, std::move(term));
      else it->second = it->second + term;
    }
  }
  for (auto it = next.begin(); it != next.end();) it = it->second.is_zero() ? next.erase(it) : std::next(it);
  return next;
}

template <RingElement E>
E det_expansion(const Mat<E>& A) {
  const std::size_t n = A.rows();
  if (n > kMaxSubsetColumns) fail(Errc::TooLarge, "cofactor expansion limited to 30 columns");
  std::map<std::uint32_t, E> cur;
  cur.emplace(0u, A.zero().one_like());
  for (std::size_t i = 0; i < n && !cur.empty(); ++i) cur = extend_by_row(cur, A, i, n);
  auto it = cur.find(n == 32 ? ~0u : (1u << n) - 1u);
  return it == cur.end() ? A.zero() : it->second;
}

template <RingElement E>
E det_gauss(Mat<E> A) {
  const std::size_t n = A.rows();
  E d = A.zero().one_like();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && A(p, c).is_zero()) ++p;
    if (p == n) return A.zero();
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(A(p, j), A(c, j));
      d = -d;
    }
    d = d * A(c, c);
    E inv = A(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (A(i, c).is_zero()) continue;
      E f = A(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) A(i, j) = A(i, j) - f * A(c, j);
    }
  }
  return d;
}

}  // namespace detail

template <RingElement E>
E det(const Mat<E>& A) {
  if (!A.square()) fail(Errc::NotSquare, "det of " + A.shape());
  if (A.rows() == 0) return A.zero().one_like();
  if constexpr (is_field_v<E>) return detail::det_gauss(A);
  else return detail::det_expansion(A);
}

template <RingElement E>
struct MinorWitness {
  std::vector<std::size_t> rows, cols;  // 0-based
  E value;
};

// nullopt iff every k x k minor vanishes; otherwise the first nonzero minor in
// (row set, column set) lexicographic order.
template <RingElement E>
std::optional<MinorWitness<E>> nonvanishing_minor(const Mat<E>& A, std::size_t k) {
  if (k == 0) fail(Errc::KTooLarge, "minor size must be positive");
  if (k > std::min(A.rows(), A.cols()))
    fail(Errc::KTooLarge, std::to_string(k) + "-minors of a " + A.shape() + " matrix");
  if (A.cols() > detail::kMaxSubsetColumns) fail(Errc::TooLarge, "minor search limited to 30 columns");
  const std::size_t n = A.rows();
  std::vector<std::size_t> chosen;
  std::optional<MinorWitness<E>> found;

  auto rec = [&](auto&& self, std::size_t start, const std::map<std::uint32_t, E>& cur) -> void {
    if (found) return;
    if (chosen.size() == k) {
      for (const auto& [mask, val] : cur) {
        MinorWitness<E> w{chosen, {}, val};
        for (std::size_t c = 0; c < A.cols(); ++c)
          if (mask & (1u << c)) w.cols.push_back(c);
        found = std::move(w);
        return;
      }
      return;
    }
    for (std::size_t r = start; r + (k - chosen.size()) <= n && !found; ++r) {
      auto next = detail::extend_by_row(cur, A, r, A.cols());
      if (next.empty()) continue;
      chosen.push_back(r);
      self(self, r + 1, next);
      chosen.pop_back();
    }
  };
  std::map<std::uint32_t, E> start;
  start.emplace(0u, A.zero().one_like());
  rec(rec, 0, start);
  return found;
}

template <RingElement E>
bool minors_vanish(const Mat<E>& A, std::size_t k) {
  return !nonvanishing_minor(A, k).has_value();
}

template <RingElement E>
struct RowEchelon {
  Mat<E> R;                         // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

template <RingElement E>
RowEchelon<E> rref(Mat<E> A) {
  if constexpr (!is_field_v<E>) {
    fail(Errc::NotAField, "row reduction needs a field; reduce to the residue field first");
  } else {
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < A.cols() && r < A.rows(); ++c) {
      std::size_t p = r;
      while (p < A.rows() && A(p, c).is_zero()) ++p;
      if (p == A.rows()) continue;
      for (std::size_t j = 0; j < A.cols(); ++j) std::swap(A(p, j), A(r, j));
      E inv = A(r, c).inverse();
      for (std::size_t j = c; j < A.cols(); ++j) A(r, j) = A(r, j) * inv;
      for (std::size_t i = 0; i < A.rows(); ++i) {
        if (i == r || A(i, c).is_zero()) continue;
        E f = A(i, c);
        for (std::size_t j = c; j < A.cols(); ++j) A(i, j) = A(i, j) - f * A(r, j);
      }
      piv.push_back(c);
      ++r;
    }
    return {std::move(A), std::move(piv)};
  }
}

template <RingElement E>
std::size_t rank(const Mat<E>& A) {
  return rref(A).pivots.size();
}

// Columns form a basis of {x : A x = 0}.
template <RingElement E>
Mat<E> right_kernel(const Mat<E>& A) {
  auto [R, piv] = rref(A);
  std::vector<bool> is_piv(A.cols(), false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < A.cols(); ++j)
    if (!is_piv[j]) free.push_back(j);
  Mat<E> K = Mat<E>::zeros(A.cols(), free.size(), A.zero());
  for (std::size_t f = 0; f < free.size(); ++f) {
    K(free[f], f) = A.zero().one_like();
    for (std::size_t i = 0; i < piv.size(); ++i) K(piv[i], f) = -R(i, free[f]);
  }
  return K;
}

// Rows form a basis of {y : y A = 0}.
template <RingElement E>
Mat<E> left_kernel(const Mat<E>& A) {
  return right_kernel(A.transpose()).transpose();
}

// Rows form the reduced echelon basis of the row space.
template <RingElement E>
Mat<E> row_space_basis(const Mat<E>& A) {
  auto [R, piv] = rref(A);
  return R.top(piv.size());
}

template <RingElement E>
struct LinearSolution {
  Mat<E> particular;  // n x 1
  Mat<E> kernel;      // n x d, columns
};

// A x = b with b a column; nullopt when inconsistent.
template <RingElement E>
std::optional<LinearSolution<E>> solve_linear(const Mat<E>& A, const Mat<E>& b) {
  if (b.rows() != A.rows() || b.cols() != 1) fail(Errc::ShapeMismatch, "right-hand side must be a column");
  auto [R, piv] = rref(hstack(A, b));
  if (!piv.empty() && piv.back() == A.cols()) return std::nullopt;
  Mat<E> x = Mat<E>::zeros(A.cols(), 1, A.zero());
  for (std::size_t i = 0; i < piv.size(); ++i) x(piv[i], 0) = R(i, A.cols());
  return LinearSolution<E>{x, right_kernel(A)};
}

template <RingElement E>
Mat<E> inverse(const Mat<E>& A) {
  if (!A.square()) fail(Errc::NotSquare, "inverse of " + A.shape());
  const std::size_t n = A.rows();
  auto [R, piv] = rref(hstack(A, Mat<E>::identity(n, A.zero())));
  if (piv.size() < n || piv[n - 1] != n - 1) fail(Errc::NotInvertible, "singular matrix");
  return R.right(n);
}

// det(T I - A) over the polynomial extension of the entry ring.
template <RingElement E>
UPoly<E> char_poly(const Mat<E>& A) {
  if (!A.square()) fail(Errc::NotSquare, "char_poly of " + A.shape());
  const E& z = A.zero();
  Mat<UPoly<E>> M = Mat<UPoly<E>>::zeros(A.rows(), A.cols(), UPoly<E>(z));
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) {
      UPoly<E> e = UPoly<E>::constant(-A(i, j));
      if (i == j) e = e + UPoly<E>::t(z);
      M(i, j) = e;
    }
  return det(M);
}

}  // namespace locmod
