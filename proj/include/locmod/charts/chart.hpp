#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "locmod/charts/symbolic.hpp"
#include "locmod/latticechain/case_matrices.hpp"

namespace locmod {

// One entry of a chart block; row/col are 0-based.
struct EntryRef {
  char block = 'a';  // 'a', 'b', 'c' or 'd'
  std::size_t row = 0, col = 0;
  auto operator<=>(const EntryRef&) const = default;
  std::string str() const {
    return std::string(1, block) + "_" + std::to_string(row + 1) + "_" + std::to_string(col + 1);
  }
};

// Rows 0..s-1 and n..n+r-1 of a chart matrix carry the identity blocks.
inline std::vector<std::size_t> chart_identity_rows(const CaseId& c) {
  std::vector<std::size_t> J;
  for (int i = 0; i < c.s; ++i) J.push_back(i);
  for (int i = 0; i < c.r; ++i) J.push_back(c.n + i);
  return J;
}

inline std::vector<std::size_t> chart_other_rows(const CaseId& c) {
  std::vector<std::size_t> out;
  for (int i = c.s; i < c.n; ++i) out.push_back(i);
  for (int i = c.n + c.r; i < 2 * c.n; ++i) out.push_back(i);
  return out;
}

// F = [[I_s, 0], [a, b], [0, I_r], [c, d]], row blocks s, r, r, s.
template <RingElement E>
Mat<E> assemble_chart(const Mat<E>& a, const Mat<E>& b, const Mat<E>& c, const Mat<E>& d) {
  const std::size_t s = c.rows(), r = b.rows(), n = r + s;
  const E& z = b.zero();
  Mat<E> F = Mat<E>::zeros(2 * n, n, z);
  F.set_block(0, 0, Mat<E>::identity(s, z));
  F.set_block(s, 0, a);
  F.set_block(s, s, b);
  F.set_block(n, s, Mat<E>::identity(r, z));
  F.set_block(n + r, 0, c);
  F.set_block(n + r, s, d);
  return F;
}

template <RingElement E>
struct ChartBlocks {
  Mat<E> a, b, c, d;
};

template <RingElement E>
ChartBlocks<E> chart_blocks(const Mat<E>& F, std::size_t s) {
  const std::size_t n = F.cols(), r = n - s;
  return {F.block(s, 0, r, s), F.block(s, s, r, r), F.block(n + r, 0, s, s), F.block(n + r, s, s, r)};
}

// R = (Pi F) restricted to the identity rows; Pi F = F R then says F is Pi-stable.
template <RingElement E>
Mat<E> pi_matrix_of(const CaseId& c, const Mat<E>& F, const E& pi0) {
  return (pi_action_mat(static_cast<std::size_t>(c.n), pi0) * F).select_rows(chart_identity_rows(c));
}

// b from a, c, d: the Pi-stability and wedge identities leave no freedom in b.
template <RingElement E>
Mat<E> b_from_acd(const Mat<E>& a, const Mat<E>& c, const Mat<E>& d, const E& pi, const E& pi0) {
  const std::size_t s = c.rows(), r = a.rows(), k = r - s;
  Mat<E> ar = a.top(k), rd = d.right(k);
  Mat<E> b = Mat<E>::zeros(r, r, pi);
  b.set_block(0, 0, pi * ar);
  b.set_block(0, s, -(pi * Mat<E>::identity(k, pi)));
  b.set_block(k, 0, pi0 * c + pi * (rd * ar));
  b.set_block(k, s, -(pi * rd));
  return b;
}

// Closed-form complement for odd n, I={m}: the g-chart with blocks
// a~ = [-iota(_[r-m]d); iota(^[m]d)], c~ = -iota(c), etc.
template <RingElement E>
Mat<E> complement_closed_form(const CaseId& cid, const Mat<E>& F) {
  if (cid.family != Family::OddM) fail(Errc::UnsupportedCase, "closed-form complement exists for odd n, I={m}");
  const std::size_t m = cid.m, s = cid.s, r = cid.r;
  auto [a, b, c, d] = chart_blocks(F, s);
  Mat<E> at = vstack(-iota(d.right(r - m)), iota(d.left(m)));
  Mat<E> bl = b.bottom(m + 1), bu = b.top(m - s);
  Mat<E> bt = vstack(hstack(iota(bl.right(r - m)), -iota(bu.right(r - m))),
                     hstack(-iota(bl.left(m)), iota(bu.left(m))));
  Mat<E> ct = -iota(c);
  Mat<E> dt = hstack(iota(a.bottom(m + 1)), -iota(a.top(m - s)));
  return assemble_chart(at, bt, ct, dt);
}

// Complement by solving F^t P^t G = 0 with G's identity rows fixed. The
// columns of F^t P^t outside the identity rows form a signed permutation
// whenever P pairs each identity row with a non-identity row.
template <RingElement E>
Mat<E> complement_by_solving(const CaseId& cid, const Mat<E>& F, const Mat<E>& pairing) {
  if (F.rows() != 2 * static_cast<std::size_t>(cid.n) || F.cols() != static_cast<std::size_t>(cid.n) ||
      pairing.rows() != F.rows() || !pairing.square())
    fail(Errc::ShapeMismatch, "complement of " + F.shape() + " against " + pairing.shape());
  const auto J = chart_identity_rows(cid), Jc = chart_other_rows(cid);
  const std::size_t n = cid.n;
  Mat<E> K = F.transpose() * pairing.transpose();
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  Mat<E> Kc = K.select(all, Jc), KJ = K.select(all, J);
  const E one = F.zero().one_like();
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t nz = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const E& x = Kc(i, j);
      if (x.is_zero()) continue;
      if (!(x == one || x == -one)) fail(Errc::PreconditionViolated, "pairing does not match the chart shape");
      ++nz;
    }
    if (nz != 1) fail(Errc::PreconditionViolated, "pairing does not match the chart shape");
  }
  Mat<E> U = -(Kc.transpose() * KJ);
  Mat<E> G = Mat<E>::zeros(2 * n, n, F.zero());
  for (std::size_t t = 0; t < n; ++t) G(J[t], t) = one;
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t j = 0; j < n; ++j) G(Jc[t], j) = U(t, j);
  return G;
}

template <RingElement E>
Mat<E> orthogonal_complement(const CaseId& cid, const Mat<E>& F, const E& pi0) {
  if (F.rows() != 2 * static_cast<std::size_t>(cid.n) || F.cols() != static_cast<std::size_t>(cid.n))
    fail(Errc::ShapeMismatch, "chart matrix must be 2n x n, got " + F.shape());
  if (cid.family == Family::OddM) return complement_closed_form(cid, F);
  return complement_by_solving(cid, F, case_matrices(cid, pi0).pairing);
}

struct Chart {
  CaseId id;
  std::shared_ptr<const SymbolicContext> ctx;
  std::vector<std::string> free_vars;
  std::vector<EntryRef> free_entries;       // parallel to free_vars
  std::map<EntryRef, Sym> substitutions;    // dependent entries, in free variables
  SymMat F, R;
  std::optional<SymMat> G;  // odd n, I={m} only

  std::size_t s() const { return id.s; }
  std::size_t r() const { return id.r; }

  Sym entry(const EntryRef& e) const {
    auto it = substitutions.find(e);
    if (it != substitutions.end()) return it->second;
    for (std::size_t i = 0; i < free_entries.size(); ++i)
      if (free_entries[i] == e) return ctx->var(i);
    fail(Errc::InvalidArgument, "entry " + e.str() + " is neither free nor substituted");
  }

  // Rebuild F, R and G from the free variables and the substitution map.
  void refresh() {
    const std::size_t s = id.s, r = id.r;
    const Sym z = ctx->zero();
    auto fill = [&](char blk, std::size_t rows, std::size_t cols) {
      SymMat X = SymMat::zeros(rows, cols, z);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) X(i, j) = entry({blk, i, j});
      return X;
    };
    F = assemble_chart(fill('a', r, s), fill('b', r, r), fill('c', s, s), fill('d', s, r));
    R = pi_matrix_of(id, F, ctx->pi0());
    if (id.family == Family::OddM) G = complement_closed_form(id, F);
    else G.reset();
  }
};

namespace detail {

// Assigns dependent entries; a second assignment to the same entry is a bug
// in the elimination order.
class SubstitutionBuilder {
 public:
  explicit SubstitutionBuilder(std::map<EntryRef, Sym>& out) : out_(out) {}
  void set(const EntryRef& e, const Sym& v) {
    if (!out_.emplace(e, v).second) fail(Errc::SubstitutionConflict, "entry " + e.str() + " assigned twice");
  }
  void set_block(char blk, const SymMat& X) {
    for (std::size_t i = 0; i < X.rows(); ++i)
      for (std::size_t j = 0; j < X.cols(); ++j) set({blk, i, j}, X(i, j));
  }

 private:
  std::map<EntryRef, Sym>& out_;
};

// Which entries of a / c stay free. For the a-block only the last s rows
// carry dependent entries. The flags say whether the antidiagonal is free.
struct FreePattern {
  bool a_antidiag_free;
  bool c_antidiag_free;
};

inline FreePattern free_pattern(Family f) {
  switch (f) {
    case Family::OddM: return {true, false};
    case Family::OddZero: return {false, true};
    case Family::EvenM: return {true, false};
  }
  return {true, false};
}

inline bool a_is_free(const CaseId& c, std::size_t i, std::size_t j) {
  const std::size_t k = c.r - c.s;
  if (i < k) return true;
  const std::size_t ip = i - k, s1 = c.s - 1;
  return ip + j < s1 || (ip + j == s1 && free_pattern(c.family).a_antidiag_free);
}

inline bool c_is_free(const CaseId& c, std::size_t i, std::size_t j) {
  const std::size_t s1 = c.s - 1;
  return i + j < s1 || (i + j == s1 && free_pattern(c.family).c_antidiag_free);
}

}  // namespace detail

// Builds the chart with all dependent entries expressed in the rs free
// variables: b from Pi-stability and the wedge condition, then d, then the
// symmetry splits of the bottom of a and of c.
inline Chart build_chart(const CaseId& cid) {
  const std::size_t s = cid.s, r = cid.r, m = cid.m, k = r - s;

  Chart ch;
  ch.id = cid;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < s; ++j)
      if (detail::a_is_free(cid, i, j)) ch.free_entries.push_back({'a', i, j});
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j)
      if (detail::c_is_free(cid, i, j)) ch.free_entries.push_back({'c', i, j});
  for (const auto& e : ch.free_entries) ch.free_vars.push_back(e.str());
  ch.ctx = SymbolicContext::make(ch.free_vars);
  const auto& ctx = *ch.ctx;
  const Sym z = ctx.zero(), pi = ctx.pi(), pi0 = ctx.pi0(), half = ctx.rational(1, 2);

  auto free_or = [&](char blk, std::size_t i, std::size_t j) {
    for (std::size_t t = 0; t < ch.free_entries.size(); ++t)
      if (ch.free_entries[t] == EntryRef{blk, i, j}) return std::optional<Sym>(ctx.var(t));
    return std::optional<Sym>();
  };

  detail::SubstitutionBuilder sub(ch.substitutions);

  // a: the top r - s rows are free; the bottom s x s block X satisfies a
  // reflection identity X -/+ iota(X) = RHS with RHS quadratic in the top rows.
  SymMat a = SymMat::zeros(r, s, z);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < s; ++j)
      if (auto v = free_or('a', i, j)) a(i, j) = *v;
  SymMat atop = a.top(k);
  SymMat rhs = SymMat::zeros(s, s, z);
  switch (cid.family) {
    case Family::OddM: {
      SymMat amid = a.bottom(m).top(m - s);  // rows m+1-s .. 2m-2s: all free
      SymMat au = a.top(m - s);
      rhs = iota(amid) * au - iota(au) * amid;
      break;
    }
    case Family::OddZero: rhs = -(iota(atop) * atop); break;
    case Family::EvenM:
      if (k > 0) rhs = h_mat(s, z) * atop.transpose() * j2_mat(k, z) * atop;
      break;
  }
  // antidiagonal first, then below it (which reads the mirrored entry above)
  for (int pass = 0; pass < 2; ++pass)
    for (std::size_t ip = 0; ip < s; ++ip)
      for (std::size_t j = 0; j < s; ++j) {
        const std::size_t i = k + ip;
        if (detail::a_is_free(cid, i, j)) continue;
        const bool anti = ip + j == s - 1;
        if (anti != (pass == 0)) continue;
        const Sym& mirror = a(k + (s - 1 - j), s - 1 - ip);
        Sym v = z;
        switch (cid.family) {
          case Family::OddM: v = rhs(ip, j) + mirror; break;
          case Family::OddZero: v = anti ? half * rhs(ip, j) : rhs(ip, j) - mirror; break;
          case Family::EvenM: v = mirror - rhs(ip, j); break;
        }
        a(i, j) = v;
        sub.set({'a', i, j}, v);
      }

  // c
  SymMat c = SymMat::zeros(s, s, z);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j)
      if (auto v = free_or('c', i, j)) c(i, j) = *v;
  SymMat Bc = SymMat::zeros(s, s, z);
  if (cid.family == Family::OddM) {
    SymMat row = a.row(m - s);
    Bc = h_mat(s, z) * row.transpose() * row;
  }
  for (int pass = 0; pass < 2; ++pass)
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j) {
        if (detail::c_is_free(cid, i, j)) continue;
        const bool anti = i + j == s - 1;
        if (anti != (pass == 0)) continue;
        const Sym& mirror = c(s - 1 - j, s - 1 - i);
        Sym v = z;
        switch (cid.family) {
          case Family::OddM: v = anti ? half * Bc(i, j) : Bc(i, j) - mirror; break;
          case Family::OddZero: v = mirror; break;
          case Family::EvenM: v = anti ? z : -mirror; break;
        }
        c(i, j) = v;
        sub.set({'c', i, j}, v);
      }

  // d
  SymMat d = SymMat::zeros(s, r, z);
  switch (cid.family) {
    case Family::OddM: {
      SymMat row = a.row(m - s);
      SymMat prow = hstack(pi * row, SymMat::zeros(1, m - s, z));
      d.set_block(0, 0, iota(a.bottom(m)) + h_mat(s, z) * row.transpose() * prow);
      d.set_block(0, m, -(pi * iota(row)));
      if (m > s) d.set_block(0, m + 1, -iota(a.top(m - s)));
      break;
    }
    case Family::OddZero: d = -iota(a); break;
    case Family::EvenM: d = -(h_mat(s, z) * a.transpose() * j_mat(m, m - s, z)); break;
  }
  sub.set_block('d', d);
  sub.set_block('b', b_from_acd(a, c, d, pi, pi0));

  ch.refresh();
  return ch;
}

}  // namespace locmod
