#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "locmod/exactalg/error.hpp"
#include "locmod/exactalg/ring.hpp"

namespace locmod {

// Exponent vector packed into 32 bytes: byte 0 is the total degree, bytes
// 1..31 the exponents. Comparing the raw bytes is then graded-lex order with
// x_0 > x_1 > ...
struct Monomial {
  static constexpr std::size_t kMaxVars = 31;
  std::array<std::uint8_t, 32> e{};

  std::uint8_t degree() const { return e[0]; }
  std::uint8_t exp(std::size_t var) const { return e[1 + var]; }

  static Monomial var(std::size_t i, unsigned k = 1) {
    Monomial m;
    m.e[1 + i] = static_cast<std::uint8_t>(k);
    m.e[0] = static_cast<std::uint8_t>(k);
    return m;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < 32; ++i) {
      unsigned s = unsigned(a.e[i]) + b.e[i];
      if (s > 255) fail(Errc::Overflow, "monomial exponent above 255");
      m.e[i] = static_cast<std::uint8_t>(s);
    }
    return m;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  friend int compare(const Monomial& a, const Monomial& b) {
    return std::memcmp(a.e.data(), b.e.data(), 32);
  }
};

template <RingElement C>
class Poly;

template <RingElement C>
class PolyRing : public std::enable_shared_from_this<PolyRing<C>> {
 public:
  static std::shared_ptr<const PolyRing> make(std::vector<std::string> names, C coeff_zero) {
    if (names.size() > Monomial::kMaxVars)
      fail(Errc::TooLarge, "at most " + std::to_string(Monomial::kMaxVars) + " variables");
    return std::shared_ptr<const PolyRing>(new PolyRing(std::move(names), std::move(coeff_zero)));
  }

  std::size_t nvars() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(const std::string& n) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == n) return i;
    return std::nullopt;
  }
  const C& coeff_zero() const { return zero_; }

  Poly<C> zero() const { return Poly<C>(this->shared_from_this()); }
  Poly<C> one() const { return constant(zero_.one_like()); }
  Poly<C> constant(const C& c) const { return Poly<C>(this->shared_from_this(), Monomial{}, c); }
  Poly<C> var(std::size_t i) const {
    if (i >= names_.size()) fail(Errc::InvalidArgument, "variable index out of range");
    return Poly<C>(this->shared_from_this(), Monomial::var(i), zero_.one_like());
  }
  Poly<C> var(const std::string& n) const {
    auto i = index_of(n);
    if (!i) fail(Errc::InvalidArgument, "unknown variable " + n);
    return var(*i);
  }

 private:
  PolyRing(std::vector<std::string> names, C zero) : names_(std::move(names)), zero_(std::move(zero)) {}
  std::vector<std::string> names_;
  C zero_;
};

// Sparse polynomial; terms kept in strictly decreasing graded-lex order with
// nonzero coefficients, so equality is term-list equality.
template <RingElement C>
class Poly {
 public:
  using Term = std::pair<Monomial, C>;
  using Ring = PolyRing<C>;

  Poly() = default;
  explicit Poly(std::shared_ptr<const Ring> ring) : ring_(std::move(ring)) {}
  Poly(std::shared_ptr<const Ring> ring, const Monomial& m, const C& c) : ring_(std::move(ring)) {
    if (!c.is_zero()) terms_.emplace_back(m, c);
  }

  const std::shared_ptr<const Ring>& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.degree() == 0); }
  C constant_term() const {
    if (!terms_.empty() && terms_.back().first.degree() == 0) return terms_.back().second;
    return ring_->coeff_zero();
  }
  int total_degree() const { return terms_.empty() ? -1 : terms_.front().first.degree(); }

  Poly zero_like() const { return Poly(ring_); }
  Poly one_like() const { return ring_->one(); }
  Poly from_int(std::int64_t k) const { return ring_->constant(ring_->coeff_zero().from_int(k)); }

  friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
  friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }
  Poly operator-() const {
    Poly r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) r.terms_.emplace_back(m, -c);
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    const auto& ring = a.ring_ ? a.ring_ : b.ring_;
    Poly r(ring);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    if (a.terms_.size() == 1 && a.terms_[0].first.degree() == 0) return b.scaled(a.terms_[0].second);
    if (b.terms_.size() == 1 && b.terms_[0].first.degree() == 0) return a.scaled(b.terms_[0].second);
    std::vector<Term> raw;
    raw.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) raw.emplace_back(ma * mb, ca * cb);
    std::sort(raw.begin(), raw.end(), [](const Term& x, const Term& y) { return compare(x.first, y.first) > 0; });
    for (auto& t : raw) {
      if (!r.terms_.empty() && r.terms_.back().first == t.first) {
        r.terms_.back().second = r.terms_.back().second + t.second;
        if (r.terms_.back().second.is_zero()) r.terms_.pop_back();
      } else if (!t.second.is_zero()) {
        r.terms_.push_back(std::move(t));
      }
    }
    return r;
  }
  Poly scaled(const C& k) const {
    Poly r(ring_);
    if (k.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
      C v = c * k;
      if (!v.is_zero()) r.terms_.emplace_back(m, std::move(v));
    }
    return r;
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].first == b.terms_[i].first) || !(a.terms_[i].second == b.terms_[i].second)) return false;
    return true;
  }

  // Ring homomorphism into T: variable i goes to values[i], coefficients via conv.
  template <class T, class Conv>
  T evaluate(const std::vector<T>& values, Conv&& conv, const T& zero) const {
    T acc = zero;
    for (const auto& [m, c] : terms_) {
      T t = conv(c);
      for (std::size_t i = 0; i < Monomial::kMaxVars && m.degree(); ++i)
        if (unsigned k = m.exp(i)) t = t * power(values.at(i), k);
      acc = acc + t;
    }
    return acc;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      std::string cs = c.str();
      std::string mono;
      for (std::size_t i = 0; i < Monomial::kMaxVars; ++i) {
        if (!m.exp(i)) continue;
        if (!mono.empty()) mono += "*";
        mono += ring_ ? ring_->name(i) : "x" + std::to_string(i);
        if (m.exp(i) > 1) mono += "^" + std::to_string(m.exp(i));
      }
      bool neg = !cs.empty() && cs[0] == '-';
      if (neg) cs = cs.substr(1);
      std::string term;
      if (mono.empty()) term = cs;
      else if (cs == "1") term = mono;
      else term = (cs.find_first_of("+-") != std::string::npos ? "(" + cs + ")" : cs) + "*" + mono;
      if (out.empty()) out = neg ? "-" + term : term;
      else out += (neg ? " - " : " + ") + term;
    }
    return out;
  }

 private:
  static Poly merge(const Poly& a, const Poly& b, bool subtract) {
    Poly r(a.ring_ ? a.ring_ : b.ring_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      int cmp = i == a.terms_.size() ? -1 : j == b.terms_.size() ? 1 : compare(a.terms_[i].first, b.terms_[j].first);
      if (cmp > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (cmp < 0) {
        const auto& t = b.terms_[j++];
        r.terms_.emplace_back(t.first, subtract ? -t.second : t.second);
      } else {
        C c = subtract ? a.terms_[i].second - b.terms_[j].second : a.terms_[i].second + b.terms_[j].second;
        if (!c.is_zero()) r.terms_.emplace_back(a.terms_[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::shared_ptr<const Ring> ring_;
  std::vector<Term> terms_;
};

}  // namespace locmod
