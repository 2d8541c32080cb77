#pragma once

#include <string>
#include <vector>

#include "locmod/exactalg/error.hpp"

namespace locmod {

enum class Family { OddM, OddZero, EvenM };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::OddM: return "odd-m";
    case Family::OddZero: return "odd-0";
    case Family::EvenM: return "even-m";
  }
  return "?";
}

inline Family parse_family(const std::string& s) {
  if (s == "odd-m") return Family::OddM;
  if (s == "odd-0") return Family::OddZero;
  if (s == "even-m") return Family::EvenM;
  fail(Errc::UnsupportedCase, "unknown case '" + s + "' (expected odd-m, odd-0 or even-m)");
}

struct CaseId {
  Family family = Family::OddM;
  int n = 3, m = 1, s = 1, r = 2;

  bool odd() const { return family != Family::EvenM; }
  // I = {0} or I = {m}
  std::string index_set() const { return family == Family::OddZero ? "{0}" : "{m}"; }
  std::string name() const {
    return std::string(family_name(family)) + " n=" + std::to_string(n) + " s=" + std::to_string(s);
  }

  static CaseId make(Family f, int n, int s) {
    const bool want_odd = f != Family::EvenM;
    if (n < 3) fail(Errc::PreconditionViolated, "n must be at least 3");
    if ((n % 2 == 1) != want_odd)
      fail(Errc::PreconditionViolated,
           std::string(family_name(f)) + " needs " + (want_odd ? "odd" : "even") + " n, got " + std::to_string(n));
    if (s < 1 || 2 * s > n)
      fail(Errc::PreconditionViolated, "need 0 < s <= r = n - s, got s=" + std::to_string(s));
    CaseId c;
    c.family = f;
    c.n = n;
    c.m = n / 2;
    c.s = s;
    c.r = n - s;
    return c;
  }

  // Every supported (case, n, s) with n <= max_n, in sweep order.
  static std::vector<CaseId> all_up_to(int max_n) {
    std::vector<CaseId> out;
    for (Family f : {Family::OddM, Family::OddZero, Family::EvenM})
      for (int n = 3; n <= max_n; ++n) {
        if ((n % 2 == 1) != (f != Family::EvenM)) continue;
        for (int s = 1; 2 * s <= n; ++s) out.push_back(make(f, n, s));
      }
    return out;
  }

  friend bool operator==(const CaseId&, const CaseId&) = default;
};

enum class FormKind { Alternating, Symmetric };

// A lattice diagonal in the split basis: basis vector i is pi^{exponents[i]} e_i.
struct LatticeSpec {
  std::vector<int> exponents;
  friend bool operator==(const LatticeSpec&, const LatticeSpec&) = default;
};

// Lambda_i = span(pi^-1 e_1..pi^-1 e_i, e_{i+1}..e_n)
inline LatticeSpec standard_lattice(int i, int n) {
  if (n <= 0 || i < 0 || i > n) fail(Errc::PreconditionViolated, "standard lattice needs 0 <= i <= n");
  LatticeSpec L;
  L.exponents.assign(n, 0);
  for (int t = 0; t < i; ++t) L.exponents[t] = -1;
  return L;
}

// Lambda_{kn+i} = pi^-k Lambda_i, for any integer index.
inline LatticeSpec periodic_lattice(int j, int n) {
  if (n <= 0) fail(Errc::PreconditionViolated, "n must be positive");
  int k = j >= 0 ? j / n : -((-j + n - 1) / n);
  LatticeSpec L = standard_lattice(j - k * n, n);
  for (int& e : L.exponents) e -= k;
  return L;
}

// e_i pairs with e_{n+1-i} (unit), so pi^a e_i is dual to pi^{-a} e_{n+1-i}
// for the alternating form; the symmetric form carries an extra pi^-1.
inline LatticeSpec dual_lattice(const LatticeSpec& L, FormKind form) {
  const std::size_t n = L.exponents.size();
  LatticeSpec D;
  D.exponents.resize(n);
  for (std::size_t t = 0; t < n; ++t) D.exponents[t] = -L.exponents[n - 1 - t];
  if (form == FormKind::Symmetric)
    for (int& e : D.exponents) e -= 1;
  return D;
}

inline std::string lattice_str(const LatticeSpec& L) {
  std::string out = "(";
  for (std::size_t i = 0; i < L.exponents.size(); ++i) out += (i ? "," : "") + std::to_string(L.exponents[i]);
  return out + ")";
}

}  // namespace locmod
