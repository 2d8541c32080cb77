#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "locmod/exactalg/error.hpp"
#include "locmod/exactalg/ring.hpp"

namespace locmod {

// Rational with int64 parts. Every operation goes through __int128 and
// throws Overflow instead of wrapping; chart identities only ever see small
// integers and halves, so this never triggers in practice.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n) {}  // NOLINT(implicit)
  Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) fail(Errc::NotInvertible, "zero denominator");
    *this = make(n, d);
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  Rational zero_like() const { return {}; }
  Rational one_like() const { return Rational(1); }
  Rational from_int(std::int64_t k) const { return Rational(k); }

  Rational operator-() const {
    Rational r;
    r.num_ = checked(-static_cast<__int128>(num_));
    r.den_ = den_;
    return r;
  }
  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == 1 && b.den_ == 1)
      return from_wide(static_cast<__int128>(a.num_) + b.num_, 1);
    return from_wide(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                     static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (a.den_ == 1 && b.den_ == 1)
      return from_wide(static_cast<__int128>(a.num_) * b.num_, 1);
    return from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
  }
  Rational inverse() const {
    if (num_ == 0) fail(Errc::NotInvertible, "inverse of zero");
    return make(den_, num_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  static std::int64_t checked(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) fail(Errc::Overflow, "rational coefficient exceeds 64 bits");
    return static_cast<std::int64_t>(v);
  }
  static __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
  static Rational from_wide(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (d != 1) {
      __int128 g = gcd128(n, d);
      if (g > 1) {
        n /= g;
        d /= g;
      }
    }
    Rational r;
    r.num_ = checked(n);
    r.den_ = n == 0 ? 1 : checked(d);
    return r;
  }
  static Rational make(std::int64_t n, std::int64_t d) { return from_wide(n, d); }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

template <>
struct ring_traits<Rational> {
  static constexpr bool is_field = true;
};

}  // namespace locmod
