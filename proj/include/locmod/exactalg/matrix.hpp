#pragma once

#include <functional>
#include <string>
#include <vector>

#include "locmod/exactalg/error.hpp"
#include "locmod/exactalg/ring.hpp"

namespace locmod {

// Dense row-major matrix. Indices are 0-based; the block accessors mirror
// the usual "first i rows" / "last j columns" notation:
//   top(i) = B^[i], bottom(i) = B_[i], left(j) = ^[j]B, right(j) = _[j]B.
template <RingElement E>
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols, const E& fill) : rows_(rows), cols_(cols), zero_(fill.zero_like()), a_(rows * cols, fill) {}

  static Mat zeros(std::size_t rows, std::size_t cols, const E& proto) { return Mat(rows, cols, proto.zero_like()); }
  static Mat identity(std::size_t n, const E& proto) {
    Mat m = zeros(n, n, proto);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = proto.one_like();
    return m;
  }
  static Mat from_rows(const std::vector<std::vector<E>>& rows) {
    if (rows.empty() || rows[0].empty()) fail(Errc::ShapeMismatch, "from_rows needs a nonempty matrix");
    Mat m = zeros(rows.size(), rows[0].size(), rows[0][0]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) fail(Errc::ShapeMismatch, "ragged rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  // Integer pattern lifted through proto.from_int.
  static Mat from_ints(const std::vector<std::vector<std::int64_t>>& rows, const E& proto) {
    Mat m = zeros(rows.size(), rows.empty() ? 0 : rows[0].size(), proto);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = proto.from_int(rows[i][j]);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  const E& zero() const { return zero_; }

  E& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const E& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  E& at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) fail(Errc::ShapeMismatch, "index out of range");
    return (*this)(i, j);
  }
  const E& at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) fail(Errc::ShapeMismatch, "index out of range");
    return (*this)(i, j);
  }

  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) fail(Errc::ShapeMismatch, "block out of range");
    Mat m = zeros(nr, nc, zero_);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
  }
  Mat top(std::size_t i) const { return block(0, 0, i, cols_); }
  Mat bottom(std::size_t i) const { return block(rows_ - i, 0, i, cols_); }
  Mat left(std::size_t j) const { return block(0, 0, rows_, j); }
  Mat right(std::size_t j) const { return block(0, cols_ - j, rows_, j); }
  Mat row(std::size_t i) const { return block(i, 0, 1, cols_); }
  Mat col(std::size_t j) const { return block(0, j, rows_, 1); }

  Mat select(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
    Mat m = zeros(rs.size(), cs.size(), zero_);
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < cs.size(); ++j) m(i, j) = at(rs[i], cs[j]);
    return m;
  }
  Mat select_rows(const std::vector<std::size_t>& rs) const {
    std::vector<std::size_t> cs(cols_);
    for (std::size_t j = 0; j < cols_; ++j) cs[j] = j;
    return select(rs, cs);
  }

  void set_block(std::size_t r0, std::size_t c0, const Mat& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) fail(Errc::ShapeMismatch, "set_block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  Mat transpose() const {
    Mat m = zeros(cols_, rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  template <class F>
  auto map(F&& f) const {
    using T = std::decay_t<decltype(f(std::declval<const E&>()))>;
    std::vector<T> out;
    out.reserve(a_.size());
    for (const auto& x : a_) out.push_back(f(x));
    return Mat<T>::from_flat(rows_, cols_, f(zero_), std::move(out));
  }

  static Mat from_flat(std::size_t rows, std::size_t cols, const E& zero, std::vector<E> flat) {
    if (flat.size() != rows * cols) fail(Errc::ShapeMismatch, "flat size mismatch");
    Mat m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.zero_ = zero.zero_like();
    m.a_ = std::move(flat);
    return m;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }
  // first nonzero entry, row-major
  bool first_nonzero(std::size_t& i, std::size_t& j) const {
    for (std::size_t k = 0; k < a_.size(); ++k)
      if (!a_[k].is_zero()) {
        i = k / cols_;
        j = k % cols_;
        return true;
      }
    return false;
  }

  friend Mat operator+(const Mat& a, const Mat& b) {
    same_shape(a, b, "+");
    Mat m = a;
    for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] = a.a_[k] + b.a_[k];
    return m;
  }
  friend Mat operator-(const Mat& a, const Mat& b) {
    same_shape(a, b, "-");
    Mat m = a;
    for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] = a.a_[k] - b.a_[k];
    return m;
  }
  Mat operator-() const {
    Mat m = *this;
    for (auto& x : m.a_) x = -x;
    return m;
  }
  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_)
      fail(Errc::ShapeMismatch, "product of " + a.shape() + " and " + b.shape());
    Mat m = zeros(a.rows_, b.cols_, a.rows_ != 0 && a.cols_ != 0 ? a.zero_ : b.zero_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const E& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const E& y = b(k, j);
          if (!y.is_zero()) m(i, j) = m(i, j) + x * y;
        }
      }
    return m;
  }
  friend Mat operator*(const E& s, const Mat& a) {
    Mat m = a;
    for (auto& x : m.a_) x = s * x;
    return m;
  }
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }
  std::string str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      out += i ? ", [" : "[";
      for (std::size_t j = 0; j < cols_; ++j) out += (j ? ", " : "") + (*this)(i, j).str();
      out += "]";
    }
    return out + "]";
  }

 private:
  static void same_shape(const Mat& a, const Mat& b, const char* op) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      fail(Errc::ShapeMismatch, std::string("operator") + op + " on " + a.shape() + " and " + b.shape());
  }

  std::size_t rows_ = 0, cols_ = 0;
  E zero_{};
  std::vector<E> a_;
};

template <RingElement E>
Mat<E> hstack(const Mat<E>& a, const Mat<E>& b) {
  if (a.rows() != b.rows()) fail(Errc::ShapeMismatch, "hstack row mismatch");
  Mat<E> m = Mat<E>::zeros(a.rows(), a.cols() + b.cols(), a.zero());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

template <RingElement E>
Mat<E> vstack(const Mat<E>& a, const Mat<E>& b) {
  if (a.cols() != b.cols()) fail(Errc::ShapeMismatch, "vstack column mismatch");
  Mat<E> m = Mat<E>::zeros(a.rows() + b.rows(), a.cols(), a.zero());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

// Assemble from a grid of blocks; every block in a grid row shares its height.
template <RingElement E>
Mat<E> blocks(const std::vector<std::vector<Mat<E>>>& grid) {
  std::size_t R = 0, C = 0;
  for (const auto& b : grid.at(0)) C += b.cols();
  for (const auto& row : grid) R += row.at(0).rows();
  Mat<E> m = Mat<E>::zeros(R, C, grid[0][0].zero());
  std::size_t r0 = 0;
  for (const auto& row : grid) {
    std::size_t c0 = 0, h = row[0].rows();
    for (const auto& b : row) {
      if (b.rows() != h) fail(Errc::ShapeMismatch, "block heights differ in a grid row");
      m.set_block(r0, c0, b);
      c0 += b.cols();
    }
    if (c0 != C) fail(Errc::ShapeMismatch, "block widths differ between grid rows");
    r0 += h;
  }
  return m;
}

}  // namespace locmod
