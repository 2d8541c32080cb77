#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "locmod/exactalg/error.hpp"
#include "locmod/exactalg/ring.hpp"

namespace locmod {

class Fq;

struct FieldOptions {
  // Characteristic 2 is refused unless a caller explicitly opts in. Only the
  // raw-condition enumeration of the chart oracle does that.
  bool allow_characteristic_two = false;
};

// GF(p^k). Elements are indices in [0, q): the base-p digits of an index are
// the coefficients (lowest first) of a polynomial reduced modulo `modulus`.
// For k = 1 the index is simply the residue.
//
// Field objects are interned and never destroyed, so elements can hold a
// plain pointer to their field.
class FiniteField {
 public:
  using Options = FieldOptions;

  static const FiniteField& prime(std::uint32_t p, Options opt = {}) {
    check_prime(p, opt);
    return intern({p}, p, 1, {});
  }

  // modulus: monic polynomial over F_p, coefficients lowest degree first.
  static const FiniteField& extension(std::uint32_t p, std::vector<std::uint32_t> modulus,
                                      Options opt = {}) {
    check_prime(p, opt);
    if (modulus.size() < 2 || modulus.back() != 1)
      fail(Errc::InvalidArgument, "extension modulus must be monic of degree >= 1");
    for (auto c : modulus)
      if (c >= p) fail(Errc::InvalidArgument, "modulus coefficient out of range");
    const auto k = static_cast<std::uint32_t>(modulus.size() - 1);
    if (k == 1) return prime(p, opt);
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
      q *= p;
      if (q > kMaxExtensionOrder) fail(Errc::TooLarge, "extension field order above 65536");
    }
    if (!irreducible(p, modulus)) fail(Errc::ReducibleModulus, "modulus is reducible over F_" + std::to_string(p));
    std::vector<std::uint32_t> key{p};
    key.insert(key.end(), modulus.begin(), modulus.end());
    return intern(key, p, k, modulus);
  }

  // Picks the first monic irreducible polynomial in counting order.
  static const FiniteField& of_order(std::uint64_t q, Options opt = {}) {
    if (q < 2) fail(Errc::NonPrimeModulus, "field order must be a prime power");
    std::uint64_t p = 2;
    while (q % p) ++p;
    std::uint32_t k = 0;
    std::uint64_t t = q;
    while (t % p == 0) {
      t /= p;
      ++k;
    }
    if (t != 1) fail(Errc::NonPrimeModulus, std::to_string(q) + " is not a prime power");
    const auto pp = static_cast<std::uint32_t>(p);
    if (k == 1) return prime(pp, opt);
    check_prime(pp, opt);
    std::vector<std::uint32_t> f(k + 1, 0);
    f[k] = 1;
    for (;;) {
      if (f[0] != 0 && irreducible(pp, f)) return extension(pp, f, opt);
      std::uint32_t i = 0;
      while (i < k && ++f[i] == pp) f[i++] = 0;
      if (i == k) fail(Errc::ReducibleModulus, "no irreducible polynomial found");
    }
  }

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return k_; }
  std::uint32_t order() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Fq zero() const;
  Fq one() const;
  Fq elem(std::int64_t v) const;
  Fq at(std::uint32_t index) const;

  // Raw index arithmetic, used directly by enumeration kernels.
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (k_ == 1) {
      std::uint32_t s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    if (!add_table_.empty()) return add_table_[a * q_ + b];
    return digitwise(a, b, false);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    if (k_ == 1) return a >= b ? a - b : a + p_ - b;
    return digitwise(a, b, true);
  }
  std::uint32_t neg(std::uint32_t a) const { return sub(0, a); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (k_ == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
    if (a == 0 || b == 0) return 0;
    std::uint32_t e = log_[a] + log_[b];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
  }
  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) fail(Errc::NotInvertible, "inverse of zero in F_" + std::to_string(q_));
    if (k_ == 1) {
      std::int64_t t = 0, nt = 1, r = p_, nr = a;
      while (nr) {
        std::int64_t qq = r / nr;
        std::int64_t tmp = t - qq * nt;
        t = nt;
        nt = tmp;
        tmp = r - qq * nr;
        r = nr;
        nr = tmp;
      }
      return static_cast<std::uint32_t>(t < 0 ? t + p_ : t);
    }
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }
  std::uint32_t from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r);
  }

  std::string str(std::uint32_t a) const {
    if (k_ == 1) return std::to_string(a);
    std::string out;
    std::uint32_t t = a;
    for (std::uint32_t i = 0; i < k_; ++i, t /= p_) {
      std::uint32_t c = t % p_;
      if (!c) continue;
      std::string mono = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
      std::string term = (c == 1 && i) ? mono : std::to_string(c) + (i ? "*" + mono : "");
      out = out.empty() ? term : term + "+" + out;
    }
    return out.empty() ? "0" : out;
  }

  std::string name() const {
    return k_ == 1 ? "F_" + std::to_string(p_) : "F_" + std::to_string(q_);
  }

 private:
  static constexpr std::uint64_t kMaxExtensionOrder = 65536;

  FiniteField(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus)
      : p_(p), k_(k), modulus_(std::move(modulus)) {
    q_ = 1;
    for (std::uint32_t i = 0; i < k_; ++i) q_ *= p_;
    if (k_ == 1) {
      modulus_ = {0, 1};
      return;
    }
    build_tables();
  }

  static void check_prime(std::uint32_t p, const Options& opt) {
    if (p < 2) fail(Errc::NonPrimeModulus, std::to_string(p) + " is not prime");
    if (p > (1u << 31)) fail(Errc::TooLarge, "characteristic above 2^31");
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) fail(Errc::NonPrimeModulus, std::to_string(p) + " is not prime");
    if (p == 2 && !opt.allow_characteristic_two)
      fail(Errc::CharacteristicTwo, "characteristic 2 is not supported");
  }

  // f mod g over F_p, both monic-ish, lowest coefficient first
  static std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> f, const std::vector<std::uint32_t>& g,
                                             std::uint32_t p) {
    const std::size_t dg = g.size() - 1;
    std::uint64_t lead_inv = 1;
    {
      // g is monic in all our uses except when trial dividing; invert lead anyway
      std::uint64_t b = g.back(), e = p - 2, r = 1;
      while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
      }
      lead_inv = r;
    }
    for (std::size_t i = f.size(); i-- > dg;) {
      std::uint64_t c = f[i] * lead_inv % p;
      if (!c) continue;
      for (std::size_t j = 0; j <= dg; ++j) {
        std::uint64_t sub = c * g[j] % p;
        f[i - dg + j] = static_cast<std::uint32_t>((f[i - dg + j] + p - sub) % p);
      }
    }
    f.resize(dg);
    return f;
  }

  static bool irreducible(std::uint32_t p, const std::vector<std::uint32_t>& f) {
    const std::size_t k = f.size() - 1;
    for (std::size_t d = 1; d <= k / 2; ++d) {
      std::vector<std::uint32_t> g(d + 1, 0);
      g[d] = 1;
      for (;;) {
        auto rem = poly_mod(f, g, p);
        bool zero = true;
        for (auto c : rem) zero = zero && c == 0;
        if (zero) return false;
        std::size_t i = 0;
        while (i < d && ++g[i] == p) g[i++] = 0;
        if (i == d) break;
      }
    }
    return true;
  }

  std::uint32_t digitwise(std::uint32_t a, std::uint32_t b, bool subtract) const {
    std::uint32_t out = 0, scale = 1;
    for (std::uint32_t i = 0; i < k_; ++i, a /= p_, b /= p_, scale *= p_) {
      std::uint32_t x = a % p_, y = b % p_;
      std::uint32_t z = subtract ? (x + p_ - y) % p_ : (x + y) % p_;
      out += z * scale;
    }
    return out;
  }

  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
    std::vector<std::uint32_t> x(k_), y(k_), prod(2 * k_ - 1, 0);
    for (std::uint32_t i = 0; i < k_; ++i, a /= p_, b /= p_) {
      x[i] = a % p_;
      y[i] = b % p_;
    }
    for (std::uint32_t i = 0; i < k_; ++i)
      for (std::uint32_t j = 0; j < k_; ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(x[i]) * y[j]) % p_);
    auto rem = poly_mod(prod, modulus_, p_);
    std::uint32_t out = 0, scale = 1;
    for (std::uint32_t i = 0; i < k_; ++i, scale *= p_) out += rem[i] * scale;
    return out;
  }

  void build_tables() {
    if (q_ <= 256) {
      add_table_.resize(static_cast<std::size_t>(q_) * q_);
      for (std::uint32_t a = 0; a < q_; ++a)
        for (std::uint32_t b = 0; b < q_; ++b) add_table_[a * q_ + b] = static_cast<std::uint16_t>(digitwise(a, b, false));
    }
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    for (std::uint32_t g = 2; g < q_; ++g) {
      std::uint32_t x = 1, ord = 0;
      do {
        exp_[ord++] = x;
        x = slow_mul(x, g);
      } while (x != 1 && ord < q_ - 1);
      if (x == 1 && ord == q_ - 1) {
        for (std::uint32_t e = 0; e < q_ - 1; ++e) log_[exp_[e]] = e;
        return;
      }
    }
    fail(Errc::ReducibleModulus, "no primitive element found");
  }

  static const FiniteField& intern(const std::vector<std::uint32_t>& key, std::uint32_t p, std::uint32_t k,
                                   std::vector<std::uint32_t> modulus) {
    static std::mutex mu;
    static std::map<std::vector<std::uint32_t>, std::unique_ptr<FiniteField>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find(key);
    if (it != registry.end()) return *it->second;
    auto* f = new FiniteField(p, k, std::move(modulus));
    registry.emplace(key, std::unique_ptr<FiniteField>(f));
    return *f;
  }

  std::uint32_t p_ = 0, k_ = 1, q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint16_t> add_table_;
  std::vector<std::uint32_t> exp_, log_;
};

class Fq {
 public:
  Fq() = default;
  Fq(const FiniteField* f, std::uint32_t v) : f_(f), v_(v) {}

  const FiniteField& field() const { return *f_; }
  std::uint32_t index() const { return v_; }

  bool is_zero() const { return v_ == 0; }
  Fq zero_like() const { return {f_, 0}; }
  Fq one_like() const { return {f_, 1}; }
  Fq from_int(std::int64_t k) const { return {f_, f_->from_int(k)}; }

  friend Fq operator+(const Fq& a, const Fq& b) { return {a.f_, a.f_->add(a.v_, same(a, b).v_)}; }
  friend Fq operator-(const Fq& a, const Fq& b) { return {a.f_, a.f_->sub(a.v_, same(a, b).v_)}; }
  friend Fq operator*(const Fq& a, const Fq& b) { return {a.f_, a.f_->mul(a.v_, same(a, b).v_)}; }
  friend Fq operator/(const Fq& a, const Fq& b) { return a * b.inverse(); }
  Fq operator-() const { return {f_, f_->neg(v_)}; }
  Fq inverse() const { return {f_, f_->inv(v_)}; }
  Fq& operator+=(const Fq& o) { return *this = *this + o; }
  Fq& operator-=(const Fq& o) { return *this = *this - o; }
  Fq& operator*=(const Fq& o) { return *this = *this * o; }

  friend bool operator==(const Fq& a, const Fq& b) { return a.v_ == b.v_ && a.f_ == b.f_; }

  std::string str() const { return f_ ? f_->str(v_) : "<null>"; }

 private:
  static const Fq& same(const Fq& a, const Fq& b) {
    if (a.f_ != b.f_) fail(Errc::InvalidArgument, "operands from different fields");
    return b;
  }

  const FiniteField* f_ = nullptr;
  std::uint32_t v_ = 0;
};

inline Fq FiniteField::zero() const { return {this, 0}; }
inline Fq FiniteField::one() const { return {this, 1}; }
inline Fq FiniteField::elem(std::int64_t v) const { return {this, from_int(v)}; }
inline Fq FiniteField::at(std::uint32_t index) const {
  if (index >= q_) fail(Errc::InvalidArgument, "element index out of range");
  return {this, index};
}

template <>
struct ring_traits<Fq> {
  static constexpr bool is_field = true;
};

}  // namespace locmod
