#pragma once

#include <memory>
#include <string>
#include <vector>

#include "locmod/exactalg.hpp"

namespace locmod {

// Chart identities live in Q[free vars, pi0][pi]/(pi^2 - pi0). Coefficients
// are rational only because of the 1/2 on antidiagonals; everything else is
// integral.
using SymPoly = Poly<Rational>;
using Sym = QuotientPi<SymPoly>;
using SymMat = Mat<Sym>;

class SymbolicContext {
 public:
  static std::shared_ptr<const SymbolicContext> make(std::vector<std::string> free_names) {
    auto ctx = std::shared_ptr<SymbolicContext>(new SymbolicContext());
    ctx->free_ = free_names;
    free_names.push_back("pi0");
    ctx->poly_ = PolyRing<Rational>::make(free_names, Rational(0));
    ctx->ring_ = QuotientPiRing<SymPoly>::make(ctx->poly_->var("pi0"));
    return ctx;
  }

  const std::vector<std::string>& free_names() const { return free_; }
  std::size_t nfree() const { return free_.size(); }
  const PolyRing<Rational>& poly() const { return *poly_; }

  Sym zero() const { return ring_->zero(); }
  Sym one() const { return ring_->one(); }
  Sym pi() const { return ring_->pi(); }
  Sym pi0() const { return ring_->embed(poly_->var("pi0")); }
  Sym var(std::size_t i) const { return ring_->embed(poly_->var(i)); }
  Sym var(const std::string& name) const { return ring_->embed(poly_->var(name)); }
  Sym rational(std::int64_t num, std::int64_t den) const {
    return ring_->embed(poly_->constant(Rational(num) / Rational(den)));
  }

 private:
  SymbolicContext() = default;
  std::vector<std::string> free_;
  std::shared_ptr<const PolyRing<Rational>> poly_;
  std::shared_ptr<const QuotientPiRing<SymPoly>> ring_;
};

// Rational -> ring with a unit 1; throws NotInvertible when the denominator
// vanishes there (1/2 in characteristic 2).
template <RingElement T>
T rational_to(const Rational& c, const T& proto) {
  T num = proto.from_int(c.num());
  if (c.den() == 1) return num;
  T den = proto.from_int(c.den());
  if (den.is_zero()) fail(Errc::NotInvertible, "denominator " + std::to_string(c.den()) + " vanishes in the target ring");
  return num * den.inverse();
}

// Ring map sending free variable i to values[i], pi0 to pi*pi and pi to pi.
template <RingElement T>
T specialize(const Sym& x, const std::vector<T>& values, const T& pi) {
  std::vector<T> v = values;
  v.push_back(pi * pi);
  auto conv = [&](const Rational& c) { return rational_to(c, pi); };
  T zero = pi.zero_like();
  T out = x.x().evaluate(v, conv, zero);
  if (!x.y().is_zero()) out = out + x.y().evaluate(v, conv, zero) * pi;
  return out;
}

template <RingElement T>
Mat<T> specialize(const SymMat& A, const std::vector<T>& values, const T& pi) {
  Mat<T> out = Mat<T>::zeros(A.rows(), A.cols(), pi);
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) out(i, j) = specialize(A(i, j), values, pi);
  return out;
}

}  // namespace locmod
