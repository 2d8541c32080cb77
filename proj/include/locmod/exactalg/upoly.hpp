#pragma once

#include <string>
#include <vector>

#include "locmod/exactalg/ring.hpp"

namespace locmod {

// Polynomials in one indeterminate T over an entry ring; used for det(T I - A).
template <RingElement E>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(E zero) : zero_(std::move(zero)) {}
  UPoly(E zero, std::vector<E> coeffs) : zero_(std::move(zero)), c_(std::move(coeffs)) { trim(); }

  static UPoly constant(const E& c) { return UPoly(c.zero_like(), {c}); }
  static UPoly t(const E& proto) { return UPoly(proto.zero_like(), {proto.zero_like(), proto.one_like()}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<E>& coeffs() const { return c_; }
  E coeff(std::size_t i) const { return i < c_.size() ? c_[i] : zero_; }

  bool is_zero() const { return c_.empty(); }
  UPoly zero_like() const { return UPoly(zero_); }
  UPoly one_like() const { return constant(zero_.one_like()); }
  UPoly from_int(std::int64_t k) const { return constant(zero_.from_int(k)); }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<E> out(std::max(a.c_.size(), b.c_.size()), a.zero_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
    return UPoly(a.zero_, std::move(out));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<E> out(std::max(a.c_.size(), b.c_.size()), a.zero_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) - b.coeff(i);
    return UPoly(a.zero_, std::move(out));
  }
  UPoly operator-() const {
    std::vector<E> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(-x);
    return UPoly(zero_, std::move(out));
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.c_.empty() || b.c_.empty()) return UPoly(a.zero_);
    std::vector<E> out(a.c_.size() + b.c_.size() - 1, a.zero_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        if (!b.c_[j].is_zero()) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
    }
    return UPoly(a.zero_, std::move(out));
  }
  UPoly& operator+=(const UPoly& o) { return *this = *this + o; }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

  friend bool operator==(const UPoly& a, const UPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }

  std::string str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i].is_zero()) continue;
      std::string t = "(" + c_[i].str() + ")";
      if (i > 0) t += i == 1 ? "*T" : "*T^" + std::to_string(i);
      out = out.empty() ? t : out + " + " + t;
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  E zero_;
  std::vector<E> c_;
};

}  // namespace locmod
