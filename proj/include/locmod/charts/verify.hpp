#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "locmod/charts/chart.hpp"

namespace locmod {

enum class CheckState { Verified, Failed, NotApplicable };

inline const char* state_name(CheckState s) {
  switch (s) {
    case CheckState::Verified: return "Verified";
    case CheckState::Failed: return "Failed";
    case CheckState::NotApplicable: return "NotApplicable";
  }
  return "?";
}

struct CheckResult {
  std::string name;
  CheckState state = CheckState::NotApplicable;
  std::string witness;  // first nonzero entry / minor / polynomial, when Failed
};

inline const std::vector<std::string>& canonical_conditions() {
  static const std::vector<std::string> names{"N2_in", "N2_out", "N3",   "N4_F", "N4_G",
                                              "W_F",   "W_G",    "Pi_F", "Pi_G"};
  return names;
}

struct ConditionReport {
  CaseId id;
  std::size_t free_vars = 0;
  std::vector<CheckResult> checks;  // canonical conditions first, then the literal identities

  bool accepted() const {
    for (const auto& c : checks)
      if (c.state == CheckState::Failed) return false;
    return true;
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
  std::vector<const CheckResult*> failures() const {
    std::vector<const CheckResult*> out;
    for (const auto& c : checks)
      if (c.state == CheckState::Failed) out.push_back(&c);
    return out;
  }
};

namespace detail {

inline std::string clip(std::string s, std::size_t max = 240) {
  if (s.size() > max) s = s.substr(0, max) + "...";
  return s;
}

inline CheckResult not_applicable(std::string name) { return {std::move(name), CheckState::NotApplicable, {}}; }
inline CheckResult verified(std::string name) { return {std::move(name), CheckState::Verified, {}}; }
inline CheckResult failed(std::string name, std::string w) {
  return {std::move(name), CheckState::Failed, clip(std::move(w))};
}

template <RingElement E>
CheckResult zero_check(std::string name, const Mat<E>& X) {
  std::size_t i = 0, j = 0;
  if (!X.first_nonzero(i, j)) return verified(std::move(name));
  return failed(std::move(name), "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " + X(i, j).str());
}

template <RingElement E>
CheckResult equal_check(std::string name, const Mat<E>& lhs, const Mat<E>& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
    return failed(std::move(name), "shape " + lhs.shape() + " vs " + rhs.shape());
  return zero_check(std::move(name), lhs - rhs);
}

inline std::string index_list(const std::vector<std::size_t>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i] + 1);
  return out + "}";
}

template <RingElement E>
std::optional<std::string> minor_witness(const Mat<E>& A, std::size_t k, const char* label) {
  if (k > std::min(A.rows(), A.cols())) return std::nullopt;
  auto w = nonvanishing_minor(A, k);
  if (!w) return std::nullopt;
  return std::string(label) + " " + std::to_string(k) + "-minor rows " + index_list(w->rows) + " cols " +
         index_list(w->cols) + " = " + w->value.str();
}

// Wedge condition on an n x n action matrix: (r+1)-minors of R - pi and
// (s+1)-minors of R + pi vanish.
template <RingElement E>
CheckResult wedge_check(std::string name, const Mat<E>& R, std::size_t s, std::size_t r, const E& pi) {
  Mat<E> PI = pi * Mat<E>::identity(R.rows(), pi);
  if (auto w = minor_witness(R - PI, r + 1, "R-pi")) return failed(std::move(name), *w);
  if (auto w = minor_witness(R + PI, s + 1, "R+pi")) return failed(std::move(name), *w);
  return verified(std::move(name));
}

template <RingElement E>
UPoly<E> target_char_poly(std::size_t s, std::size_t r, const E& pi) {
  UPoly<E> t = UPoly<E>::t(pi);
  UPoly<E> out = UPoly<E>::constant(pi.one_like());
  for (std::size_t i = 0; i < s; ++i) out = out * (t - UPoly<E>::constant(pi));
  for (std::size_t i = 0; i < r; ++i) out = out * (t + UPoly<E>::constant(pi));
  return out;
}

template <RingElement E>
CheckResult char_poly_check(std::string name, const Mat<E>& R, std::size_t s, std::size_t r, const E& pi) {
  UPoly<E> diff = char_poly(R) - target_char_poly(s, r, pi);
  if (diff.is_zero()) return verified(std::move(name));
  return failed(std::move(name), "char poly minus target = " + diff.str());
}

template <RingElement E>
CheckResult pi_stable_check(std::string name, const CaseId& c, const Mat<E>& Pi, const Mat<E>& X) {
  Mat<E> PX = Pi * X;
  return zero_check(std::move(name), PX - X * PX.select_rows(chart_identity_rows(c)));
}

}  // namespace detail

// The nine canonical conditions for a chart matrix F over any entry ring.
// G is the complement (odd n, I={m}); when absent it is solved for. With
// short_circuit the evaluation stops at the first failure, which is what the
// exhaustive oracle wants.
template <RingElement E>
std::vector<CheckResult> evaluate_conditions(const CaseId& c, const CaseMatrices<E>& cm, const Mat<E>& F,
                                             const std::optional<Mat<E>>& G_in, const E& pi,
                                             bool short_circuit = false) {
  using namespace detail;
  const std::size_t s = c.s, r = c.r;
  std::vector<CheckResult> out;
  auto done = [&] { return short_circuit && !out.empty() && out.back().state == CheckState::Failed; };
  const bool wedge = r != s;
  const bool odd_m = c.family == Family::OddM;

  out.push_back(pi_stable_check("Pi_F", c, cm.pi_action, F));
  if (done()) return out;
  Mat<E> R = (cm.pi_action * F).select_rows(chart_identity_rows(c));
  out.push_back(wedge ? wedge_check("W_F", R, s, r, pi) : not_applicable("W_F"));
  if (done()) return out;
  out.push_back(char_poly_check("N4_F", R, s, r, pi));
  if (done()) return out;

  if (!odd_m) {
    out.push_back(zero_check("N3", F.transpose() * cm.pairing * F));
    for (const char* k : {"N2_in", "N2_out", "N4_G", "W_G", "Pi_G"}) out.push_back(not_applicable(k));
    return out;
  }

  out.push_back(zero_check("N2_in", F.transpose() * cm.inclusion_in->transpose() * cm.pairing * F));
  if (done()) return out;
  Mat<E> G = G_in ? *G_in : complement_by_solving(c, F, cm.pairing);
  out.push_back(zero_check("N3", G.transpose() * cm.pairing * F));
  if (done()) return out;
  Mat<E> AG = *cm.inclusion_out * G;
  out.push_back(zero_check("N2_out", AG - F * AG.select_rows(chart_identity_rows(c))));
  if (done()) return out;
  out.push_back(pi_stable_check("Pi_G", c, cm.pi_action, G));
  if (done()) return out;
  Mat<E> Rp = (cm.pi_action * G).select_rows(chart_identity_rows(c));
  out.push_back(wedge_check("W_G", Rp, s, r, pi));
  if (done()) return out;
  out.push_back(char_poly_check("N4_G", Rp, s, r, pi));
  return out;
}

inline bool all_hold(const std::vector<CheckResult>& v) {
  for (const auto& c : v)
    if (c.state == CheckState::Failed) return false;
  return true;
}

namespace detail {

inline void sort_canonical(std::vector<CheckResult>& v) {
  const auto& names = canonical_conditions();
  std::vector<CheckResult> out;
  for (const auto& n : names)
    for (auto& c : v)
      if (c.name == n) out.push_back(c);
  v = std::move(out);
}

// Unsubstituted a-block, for the reflection-symmetry checks that hold as
// identities before any elimination.
inline SymMat raw_a_block(const CaseId& c, std::shared_ptr<const SymbolicContext>& holder) {
  std::vector<std::string> names;
  for (int i = 0; i < c.r; ++i)
    for (int j = 0; j < c.s; ++j) names.push_back(EntryRef{'a', std::size_t(i), std::size_t(j)}.str());
  holder = SymbolicContext::make(names);
  SymMat a = SymMat::zeros(c.r, c.s, holder->zero());
  for (int i = 0; i < c.r; ++i)
    for (int j = 0; j < c.s; ++j) a(i, j) = holder->var(std::size_t(i * c.s + j));
  return a;
}

// The two sides of the reflection identity for the bottom s x s block of a,
// arranged so that the identity reads lhs = rhs.
struct MainEq {
  SymMat lhs, rhs;
  int parity;  // +1: both sides iota-symmetric, -1: iota-antisymmetric
};

inline MainEq main_equation(const CaseId& c, const SymMat& a) {
  const std::size_t s = c.s, r = c.r, m = c.m, k = r - s;
  const Sym z = a.zero();
  SymMat as = a.bottom(s), atop = a.top(k);
  switch (c.family) {
    case Family::OddM: {
      SymMat amid = a.bottom(m).top(m - s), au = a.top(m - s);
      return {as - iota(as), iota(amid) * au - iota(au) * amid, -1};
    }
    case Family::OddZero: return {as + iota(as), -(iota(atop) * atop), +1};
    case Family::EvenM: {
      SymMat rhs = k ? h_mat(s, z) * atop.transpose() * j2_mat(k, z) * atop : SymMat::zeros(s, s, z);
      return {iota(as) - as, rhs, -1};
    }
  }
  fail(Errc::UnsupportedCase, "unknown family");
}

inline void odd_m_literal_checks(const Chart& ch, std::vector<CheckResult>& out) {
  const CaseId& c = ch.id;
  const std::size_t s = c.s, r = c.r, m = c.m, ms = m - s;
  const auto& ctx = *ch.ctx;
  const Sym z = ctx.zero(), pi = ctx.pi(), pi0 = ctx.pi0();
  auto [a, b, cc, d] = chart_blocks(ch.F, s);
  auto H = [&](std::size_t l) { return h_mat(l, z); };
  auto T = [](const SymMat& X) { return X.transpose(); };

  // Blocks named after the row m-s (0-based) of a and b and the column split
  // (m, 1, m-s) of b and d.
  SymMat arow = a.row(ms);
  SymMat a_m = a.bottom(m), a_ms = a.top(ms);
  SymMat brow_m = b.block(ms, 0, 1, m);          // first m entries of row m-s
  SymMat bpiv = b.block(ms, m, 1, 1);            // the entry (m-s, m)
  SymMat brow_ms = b.block(ms, m + 1, 1, ms);    // last m-s entries of row m-s
  SymMat bbot_m = b.block(r - m, 0, m, m);       // last m rows, first m columns
  SymMat bbot_1 = b.block(r - m, m, m, 1);
  SymMat bbot_ms = b.block(r - m, m + 1, m, ms);
  SymMat btop_m = b.block(0, 0, ms, m);          // first m-s rows
  SymMat btop_1 = b.block(0, m, ms, 1);
  SymMat btop_ms = b.block(0, m + 1, ms, ms);
  SymMat d_m = d.left(m), d_1 = d.block(0, m, s, 1), d_ms = d.right(ms);

  out.push_back(zero_check("C1", -(H(s) * cc) + T(arow) * arow - T(cc) * H(s)));
  out.push_back(zero_check("C2", -(H(s) * d_m) + T(arow) * brow_m + T(a_m) * H(m)));
  out.push_back(zero_check("C3", -(H(s) * d_1) + T(arow) * bpiv));
  out.push_back(zero_check("C4", -(H(s) * d_ms) - T(a_ms) * H(ms) + T(arow) * brow_ms));
  out.push_back(zero_check("C5", T(brow_m) * brow_m + T(bbot_m) * H(m) + H(m) * bbot_m));
  out.push_back(zero_check("C6", T(brow_m) * bpiv + H(m) * bbot_1));
  out.push_back(zero_check("C7", -(T(btop_m) * H(ms)) + T(brow_m) * brow_ms + H(m) * bbot_ms));
  out.push_back(zero_check("C8", bpiv * bpiv - SymMat(1, 1, pi0)));
  out.push_back(zero_check("C9", -(T(btop_1) * H(ms)) + bpiv(0, 0) * brow_ms));
  out.push_back(zero_check("C10", -(T(btop_ms) * H(ms)) + T(brow_ms) * brow_ms - H(ms) * btop_ms));

  out.push_back(equal_check("C1'", cc + iota(cc), H(s) * T(arow) * arow));
  SymMat prow = hstack(pi * arow, SymMat::zeros(1, ms, z));
  out.push_back(equal_check("C2'", d_m, iota(a_m) + H(s) * T(arow) * prow));
  out.push_back(equal_check("C3'", d_1, -(pi * iota(arow))));
  out.push_back(equal_check("C4'", d_ms, -iota(a_ms)));

  // Q, block rows/cols s, s, m-s, 1, m-s
  const std::size_t qb[6] = {0, s, 2 * s, m + s, m + s + 1, 2 * m + 1};
  SymMat Q = SymMat::zeros(c.n, c.n, z);
  auto putq = [&](int rb, int cb, const SymMat& v) { Q.set_block(qb[rb], qb[cb], v); };
  putq(0, 1, pi0 * SymMat::identity(s, z));
  putq(1, 0, SymMat::identity(s, z));
  if (ms > 0) {
    SymMat dd = d_ms, dm = d_m.right(ms);
    putq(2, 0, -iota(dd));
    putq(2, 1, -(pi * iota(dd)));
    putq(2, 2, -(pi * SymMat::identity(ms, z)));
    putq(4, 0, iota(dm));
    putq(4, 1, pi * iota(dm));
    putq(4, 4, -(pi * SymMat::identity(ms, z)));
  }
  putq(3, 3, SymMat::identity(1, z));
  auto cm = case_matrices(c, pi0);
  out.push_back(equal_check("Q_display", *cm.inclusion_out * *ch.G, ch.F * Q));

  out.push_back(equal_check("G_closed_form", *ch.G, complement_by_solving(c, ch.F, cm.pairing)));
  out.push_back(equal_check("complement_involution", complement_by_solving(c, *ch.G, cm.pairing.transpose()), ch.F));
  out.push_back(equal_check("c_tilde", chart_blocks(*ch.G, s).c, -iota(cc)));
  Mat<Sym> Rp = pi_matrix_of(c, *ch.G, pi0);
  out.push_back(equal_check("R_prime_block", Rp.block(2 * s, 2 * s, r - s, r - s),
                            -(pi * SymMat::identity(r - s, z))));
}

inline void n3_split_checks(const Chart& ch, const CaseMatrices<Sym>& cm, std::vector<CheckResult>& out) {
  const std::size_t s = ch.id.s, r = ch.id.r;
  SymMat Fs = ch.F.left(s), Fr = ch.F.right(r);
  out.push_back(zero_check("N3a", Fs.transpose() * cm.pairing * Fs));
  out.push_back(zero_check("N3b", Fs.transpose() * cm.pairing * Fr));
  out.push_back(zero_check("N3c", Fr.transpose() * cm.pairing * Fr));
}

inline void odd_zero_literal_checks(const Chart& ch, std::vector<CheckResult>& out) {
  const std::size_t s = ch.id.s;
  const Sym z = ch.ctx->zero();
  auto [a, b, cc, d] = chart_blocks(ch.F, s);
  auto cm = case_matrices(ch.id, ch.ctx->pi0());
  n3_split_checks(ch, cm, out);
  out.push_back(equal_check("c_symmetric", cc, iota(cc)));
  out.push_back(equal_check("d_formula", d, -iota(a)));
  out.push_back(zero_check("N3b_display", h_mat(s, z) * d + a.transpose() * h_mat(ch.id.r, z)));
  out.push_back(equal_check("N3c_iota", iota(b), b));
  out.push_back(equal_check("complement_equals_F", complement_by_solving(ch.id, ch.F, cm.pairing), ch.F));
}

inline void even_literal_checks(const Chart& ch, std::vector<CheckResult>& out) {
  const CaseId& c = ch.id;
  const std::size_t s = c.s, r = c.r, m = c.m, k = r - s;
  const Sym z = ch.ctx->zero(), pi = ch.ctx->pi(), pi0 = ch.ctx->pi0();
  auto [a, b, cc, d] = chart_blocks(ch.F, s);
  auto cm = case_matrices(c, pi0);
  n3_split_checks(ch, cm, out);
  out.push_back(equal_check("c_antisymmetric", cc, -iota(cc)));
  SymMat Jm = j_mat(m, m - s, z), Hs = h_mat(s, z);
  out.push_back(equal_check("d_formula", d, -(Hs * a.transpose() * Jm)));
  out.push_back(equal_check("d_first_s", d.left(s), iota(a.bottom(s))));
  SymMat ar = a.top(k), rd = d.right(k);
  if (k > 0) {
    SymMat J2 = j2_mat(k, z);
    out.push_back(equal_check("d_last_r-s", rd, -(Hs * ar.transpose() * J2)));
    out.push_back(equal_check("N3c_block1", pi * ar, J2 * (-(pi * rd)).transpose() * Hs));
    SymMat mpI = -(pi * SymMat::identity(k, z));
    out.push_back(equal_check("N3c_block2", mpI, -(J2 * mpI.transpose() * J2)));
    out.push_back(equal_check("N3c_block4", -(pi * rd), Hs * (pi * ar).transpose() * J2));
  }
  SymMat blk3 = pi0 * cc + pi * (rd * ar);
  out.push_back(equal_check("N3c_block3", blk3, -(Hs * blk3.transpose() * Hs)));
  out.push_back(equal_check("N3c_display", b, -(Jm * b.transpose() * Jm)));
  out.push_back(equal_check("complement_equals_F", complement_by_solving(c, ch.F, cm.pairing), ch.F));
}

// The shared identities: R's display, the b-block formula, the a_s identity
// and the reflection identity for the bottom of a.
inline void common_literal_checks(const Chart& ch, std::vector<CheckResult>& out) {
  const CaseId& c = ch.id;
  const std::size_t s = c.s, r = c.r, n = c.n, k = r - s;
  const auto& ctx = *ch.ctx;
  const Sym z = ctx.zero(), pi = ctx.pi(), pi0 = ctx.pi0();
  auto [a, b, cc, d] = chart_blocks(ch.F, s);

  SymMat Rd = SymMat::zeros(n, n, z);
  Rd.set_block(0, s, pi0 * SymMat::identity(s, z));
  Rd.set_block(s, 0, SymMat::identity(s, z));
  Rd.set_block(2 * s, 0, a.top(k));
  Rd.set_block(2 * s, s, b.top(k));
  out.push_back(equal_check("R_display", ch.R, Rd));
  out.push_back(equal_check("wedge_b_top_left", b.block(0, 0, k, s), pi * a.top(k)));
  out.push_back(equal_check("wedge_b_top_right", b.block(0, s, k, k), -(pi * SymMat::identity(k, z))));
  out.push_back(equal_check("b_formula", b, b_from_acd(a, cc, d, pi, pi0)));
  out.push_back(equal_check("a_s_identity", d.left(s), a.bottom(s) - d.right(k) * a.top(k)));

  MainEq eq = main_equation(c, a);
  out.push_back(equal_check("main_equation", eq.lhs, eq.rhs));
  std::shared_ptr<const SymbolicContext> raw_ctx;
  MainEq raw = main_equation(c, raw_a_block(c, raw_ctx));
  auto refl = [&](const SymMat& X) { return eq.parity > 0 ? iota(X) - X : iota(X) + X; };
  out.push_back(zero_check("main_equation_lhs_reflection", refl(raw.lhs)));
  out.push_back(zero_check("main_equation_rhs_reflection", refl(raw.rhs)));

  const std::size_t want = static_cast<std::size_t>(c.r) * c.s;
  if (ch.free_vars.size() == want) out.push_back(verified("free_vars_rs"));
  else out.push_back(failed("free_vars_rs", std::to_string(ch.free_vars.size()) + " free variables, rs = " + std::to_string(want)));
}

constexpr std::uint32_t kSpecializationPrime = 1000003;

// Evaluate the chart at a random point of F_p (pi random, pi0 = pi^2) and
// rerun the canonical conditions there.
inline CheckResult specialization_check(const Chart& ch, std::uint64_t seed) {
  const auto& Fp = FiniteField::prime(kSpecializationPrime);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> U(0, kSpecializationPrime - 1);
  std::vector<Fq> vals;
  for (std::size_t i = 0; i < ch.free_vars.size(); ++i) vals.push_back(Fp.at(U(rng)));
  Fq pi = Fp.at(U(rng));
  Mat<Fq> F = specialize(ch.F, vals, pi);
  std::optional<Mat<Fq>> G;
  if (ch.G) G = specialize(*ch.G, vals, pi);
  auto cm = case_matrices(ch.id, pi * pi);
  auto res = evaluate_conditions(ch.id, cm, F, G, pi);
  for (const auto& r : res)
    if (r.state == CheckState::Failed) return failed("specialized_Fp", r.name + " at a random F_p point: " + r.witness);
  return verified("specialized_Fp");
}

}  // namespace detail

struct VerifyOptions {
  bool literal_checks = true;
  bool specialization = true;
  std::uint64_t seed = 1;
};

inline ConditionReport verify_chart(const Chart& ch, const VerifyOptions& opt = {}) {
  ConditionReport rep;
  rep.id = ch.id;
  rep.free_vars = ch.free_vars.size();
  const auto& ctx = *ch.ctx;
  auto cm = case_matrices(ch.id, ctx.pi0());
  rep.checks = evaluate_conditions(ch.id, cm, ch.F, ch.G, ctx.pi());
  detail::sort_canonical(rep.checks);
  if (opt.literal_checks) {
    detail::common_literal_checks(ch, rep.checks);
    switch (ch.id.family) {
      case Family::OddM: detail::odd_m_literal_checks(ch, rep.checks); break;
      case Family::OddZero: detail::odd_zero_literal_checks(ch, rep.checks); break;
      case Family::EvenM: detail::even_literal_checks(ch, rep.checks); break;
    }
  }
  if (opt.specialization) rep.checks.push_back(detail::specialization_check(ch, opt.seed));
  return rep;
}

}  // namespace locmod
