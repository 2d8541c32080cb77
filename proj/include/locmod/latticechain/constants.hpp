#pragma once

#include "locmod/exactalg/matrix.hpp"

namespace locmod {

template <RingElement E>
Mat<E> unit_mat(std::size_t l, const E& proto) {
  return Mat<E>::identity(l, proto);
}

// H_l: unit antidiagonal.
template <RingElement E>
Mat<E> h_mat(std::size_t l, const E& proto) {
  Mat<E> h = Mat<E>::zeros(l, l, proto);
  for (std::size_t i = 0; i < l; ++i) h(i, l - 1 - i) = proto.one_like();
  return h;
}

// J_{k,l} = [[0, H_l], [-H_k, 0]], size k + l. The H_l block sits in the
// first l rows and last l columns.
template <RingElement E>
Mat<E> j_mat(std::size_t k, std::size_t l, const E& proto) {
  Mat<E> j = Mat<E>::zeros(k + l, k + l, proto);
  j.set_block(0, k, h_mat(l, proto));
  j.set_block(l, 0, -h_mat(k, proto));
  return j;
}

// J_{2k} = J_{k,k}
template <RingElement E>
Mat<E> j2_mat(std::size_t two_k, const E& proto) {
  if (two_k % 2) fail(Errc::InvalidArgument, "J_{2k} needs an even size");
  return j_mat(two_k / 2, two_k / 2, proto);
}

// D_i = J_i for even i, H_i for odd i.
template <RingElement E>
Mat<E> d_mat(std::size_t i, const E& proto) {
  return i % 2 ? h_mat(i, proto) : j2_mat(i, proto);
}

// K = diag(0_{n-1}, 1)
template <RingElement E>
Mat<E> k_mat(std::size_t n, const E& proto) {
  Mat<E> k = Mat<E>::zeros(n, n, proto);
  if (n) k(n - 1, n - 1) = proto.one_like();
  return k;
}

// J'_{2m} = diag(J_{2m}, 0), size 2m + 1.
template <RingElement E>
Mat<E> jprime_mat(std::size_t two_m, const E& proto) {
  Mat<E> j = Mat<E>::zeros(two_m + 1, two_m + 1, proto);
  j.set_block(0, 0, j2_mat(two_m, proto));
  return j;
}

// iota(B) = H_l B^t H_k for B of shape k x l: reflection in the antidiagonal.
template <RingElement E>
Mat<E> iota(const Mat<E>& B) {
  const std::size_t k = B.rows(), l = B.cols();
  Mat<E> out = Mat<E>::zeros(l, k, B.zero());
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < k; ++j) out(i, j) = B(k - 1 - j, l - 1 - i);
  return out;
}

namespace detail {
// sign of the antidiagonal entry of D_i in row p
inline bool d_negative(std::size_t i, std::size_t p) { return i % 2 == 0 && p >= i / 2; }
}  // namespace detail

// sigma(B) = D_l B^t D_k: the signed reflection.
template <RingElement E>
Mat<E> sigma(const Mat<E>& B) {
  const std::size_t k = B.rows(), l = B.cols();
  Mat<E> out = Mat<E>::zeros(l, k, B.zero());
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const E& x = B(k - 1 - j, l - 1 - i);
      bool neg = detail::d_negative(l, i) != detail::d_negative(k, k - 1 - j);
      out(i, j) = neg ? -x : x;
    }
  return out;
}

}  // namespace locmod
