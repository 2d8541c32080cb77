#pragma once

#include <memory>
#include <string>

#include "locmod/exactalg/error.hpp"
#include "locmod/exactalg/ring.hpp"

namespace locmod {

template <RingElement B>
class QuotientPi;

// B[pi]/(pi^2 - pi0). pi0 is any element of B: zero for the special fiber,
// a variable for the symbolic base.
template <RingElement B>
class QuotientPiRing : public std::enable_shared_from_this<QuotientPiRing<B>> {
 public:
  static std::shared_ptr<const QuotientPiRing> make(B pi0) {
    return std::shared_ptr<const QuotientPiRing>(new QuotientPiRing(std::move(pi0)));
  }

  const B& pi0() const { return pi0_; }
  QuotientPi<B> zero() const { return embed(pi0_.zero_like()); }
  QuotientPi<B> one() const { return embed(pi0_.one_like()); }
  QuotientPi<B> pi() const { return {this->shared_from_this(), pi0_.zero_like(), pi0_.one_like()}; }
  QuotientPi<B> embed(const B& x) const { return {this->shared_from_this(), x, pi0_.zero_like()}; }
  QuotientPi<B> make_elem(const B& x, const B& y) const { return {this->shared_from_this(), x, y}; }

 private:
  explicit QuotientPiRing(B pi0) : pi0_(std::move(pi0)) {}
  B pi0_;
};

template <RingElement B>
class QuotientPi {
 public:
  using Ring = QuotientPiRing<B>;

  QuotientPi() = default;
  QuotientPi(std::shared_ptr<const Ring> ring, B x, B y) : ring_(std::move(ring)), x_(std::move(x)), y_(std::move(y)) {}

  const B& x() const { return x_; }  // pi^0 part
  const B& y() const { return y_; }  // pi^1 part
  const std::shared_ptr<const Ring>& ring() const { return ring_; }

  bool is_zero() const { return x_.is_zero() && y_.is_zero(); }
  QuotientPi zero_like() const { return {ring_, x_.zero_like(), x_.zero_like()}; }
  QuotientPi one_like() const { return {ring_, x_.one_like(), x_.zero_like()}; }
  QuotientPi from_int(std::int64_t k) const { return {ring_, x_.from_int(k), x_.zero_like()}; }

  friend QuotientPi operator+(const QuotientPi& a, const QuotientPi& b) {
    return {a.ring_ ? a.ring_ : b.ring_, a.x_ + b.x_, a.y_ + b.y_};
  }
  friend QuotientPi operator-(const QuotientPi& a, const QuotientPi& b) {
    return {a.ring_ ? a.ring_ : b.ring_, a.x_ - b.x_, a.y_ - b.y_};
  }
  QuotientPi operator-() const { return {ring_, -x_, -y_}; }
  // (x + y pi)(x' + y' pi) = (x x' + pi0 y y') + (x y' + x' y) pi
  friend QuotientPi operator*(const QuotientPi& a, const QuotientPi& b) {
    const auto& ring = a.ring_ ? a.ring_ : b.ring_;
    B yy = a.y_ * b.y_;
    B x = a.x_ * b.x_;
    if (!yy.is_zero()) x = x + ring->pi0() * yy;
    return {ring, std::move(x), a.x_ * b.y_ + b.x_ * a.y_};
  }
  QuotientPi& operator+=(const QuotientPi& o) { return *this = *this + o; }
  QuotientPi& operator-=(const QuotientPi& o) { return *this = *this - o; }
  QuotientPi& operator*=(const QuotientPi& o) { return *this = *this * o; }

  friend bool operator==(const QuotientPi& a, const QuotientPi& b) { return a.x_ == b.x_ && a.y_ == b.y_; }

  // Units only: (x + y pi)^-1 = (x - y pi) / (x^2 - pi0 y^2).
  QuotientPi inverse() const {
    if constexpr (requires(const B& b) { b.inverse(); }) {
      B norm = x_ * x_ - ring_->pi0() * y_ * y_;
      if (norm.is_zero()) fail(Errc::NotInvertible, "element of B[pi]/(pi^2-pi0) is not a unit");
      B ni = norm.inverse();
      return {ring_, x_ * ni, -(y_ * ni)};
    } else {
      fail(Errc::NotInvertible, "base ring has no inversion");
    }
  }

  std::string str() const {
    if (y_.is_zero()) return x_.str();
    std::string ys = y_.str();
    std::string py = (ys == "1") ? "pi" : "(" + ys + ")*pi";
    if (x_.is_zero()) return py;
    return x_.str() + " + " + py;
  }

 private:
  std::shared_ptr<const Ring> ring_;
  B x_, y_;
};

}  // namespace locmod
