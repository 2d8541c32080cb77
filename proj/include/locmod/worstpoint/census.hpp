#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "locmod/latticechain/case_matrices.hpp"
#include "locmod/latticechain/lattice.hpp"
#include "locmod/worstpoint/npoint.hpp"

namespace locmod {

struct CensusOptions {
  std::uint64_t budget = 100'000'000;  // candidate rows / tuples examined
  unsigned workers = 1;
};

// ---------------------------------------------------------------------------
// dimension from point counts

struct DimEstimate {
  long d = 0;
  bool stable = true;             // every adjacent q pair rounds to d
  std::vector<double> pair_slopes;  // log(count ratio) / log(q ratio), adjacent pairs in q order
};

// Leading exponent of count ~ c q^d from the two largest q.
inline DimEstimate estimate_dimension(std::vector<std::pair<std::uint64_t, std::uint64_t>> counts) {
  std::map<std::uint64_t, std::uint64_t> by_q;
  for (auto [q, c] : counts) {
    if (c == 0) fail(Errc::InsufficientData, "count 0 at q=" + std::to_string(q));
    if (q < 2) fail(Errc::InvalidArgument, "q must be at least 2");
    auto [it, fresh] = by_q.emplace(q, c);
    if (!fresh && it->second != c) fail(Errc::Inconsistent, "two different counts at q=" + std::to_string(q));
  }
  if (by_q.size() < 2) fail(Errc::InsufficientData, "need counts at two distinct q");
  DimEstimate e;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> v(by_q.begin(), by_q.end());
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    e.pair_slopes.push_back(std::log(double(v[i + 1].second) / double(v[i].second)) /
                            std::log(double(v[i + 1].first) / double(v[i].first)));
  e.d = std::lround(e.pair_slopes.back());
  for (double sl : e.pair_slopes)
    if (std::lround(sl) != e.d) e.stable = false;
  return e;
}

inline std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t v = 1;
  while (e--) {
    if (b && v > ~0ull / b) fail(Errc::Overflow, "integer power overflows 64 bits");
    v *= b;
  }
  return v;
}

// ---------------------------------------------------------------------------
// enumeration of square-zero sigma-anti-fixed matrices

namespace detail {

// X is sigma-anti-fixed iff A = J X is antisymmetric, and then X^2 = 0 iff
// A J A = 0, i.e. the rows of A are pairwise isotropic for J. The search
// fills A row by row (row i is fixed left of the diagonal by antisymmetry)
// and prunes on isotropy and on rank <= max_rank, so it only walks the
// square-zero locus instead of all q^{m(2m-1)} anti-fixed matrices.
class SquareZeroSearch {
 public:
  using Leaf = std::function<void(unsigned worker, const std::vector<std::uint32_t>& X, std::size_t rank)>;

  SquareZeroSearch(std::size_t N, std::size_t max_rank, const FiniteField& K, const CensusOptions& opt)
      : N_(N), max_rank_(std::min(max_rank, N)), K_(K), opt_(opt) {}

  // Rough size of the search: points of rank <= max_rank antisymmetric
  // matrices, q^{k(2N-k-1)/2} for each even k.
  double estimated_leaves() const {
    double t = 0;
    for (std::size_t k = 0; k <= max_rank_; k += 2) t += std::pow(double(K_.order()), double(k * (2 * N_ - k - 1)) / 2);
    return t;
  }

  std::uint64_t work() const { return work_.load(); }

  void run(const Leaf& leaf) {
    if (estimated_leaves() > double(opt_.budget))
      fail(Errc::TooLarge, "square-zero search in size " + std::to_string(N_) + " over F_" +
                               std::to_string(K_.order()) + " expects ~" + std::to_string(std::llround(estimated_leaves())) +
                               " points, budget is " + std::to_string(opt_.budget));
    const unsigned W = std::max(1u, std::min(opt_.workers, 64u));
    if (N_ == 0) {
      leaf(0, {}, 0);
      return;
    }
    auto body = [&](unsigned w) {
      State st(N_);
      dfs(st, 0, w, W, leaf);
    };
    if (W == 1) {
      body(0);
    } else {
      std::vector<std::thread> pool;
      std::vector<std::exception_ptr> errs(W);
      for (unsigned w = 0; w < W; ++w)
        pool.emplace_back([&, w] {
          try {
            body(w);
          } catch (...) {
            errs[w] = std::current_exception();
          }
        });
      for (auto& t : pool) t.join();
      for (auto& e : errs)
        if (e) std::rethrow_exception(e);
    }
    if (over_.load())
      fail(Errc::TooLarge, "square-zero search exceeded the budget of " + std::to_string(opt_.budget) + " candidates");
  }

 private:
  struct State {
    explicit State(std::size_t N) : A(N * N, 0) {}
    std::vector<std::uint32_t> A;
    std::vector<std::vector<std::uint32_t>> basis;  // echelon rows, pivot entry 1
    std::vector<std::size_t> pivots;
  };

  // <u, v> = u J v^t
  std::uint32_t pair(const std::uint32_t* u, const std::uint32_t* v) const {
    std::uint32_t acc = 0;
    for (std::size_t t = 0; t < N_; ++t) {
      std::uint32_t p = K_.mul(u[t], v[N_ - 1 - t]);
      acc = t < N_ / 2 ? K_.add(acc, p) : K_.sub(acc, p);
    }
    return acc;
  }

  void dfs(State& st, std::size_t i, unsigned w, unsigned W, const Leaf& leaf) {
    if (over_.load(std::memory_order_relaxed)) return;
    if (i == N_) {
      std::vector<std::uint32_t> X(N_ * N_);
      for (std::size_t a = 0; a < N_; ++a)
        for (std::size_t b = 0; b < N_; ++b) {
          std::uint32_t v = st.A[(N_ - 1 - a) * N_ + b];
          X[a * N_ + b] = a < N_ / 2 ? K_.neg(v) : v;
        }
      leaf(w, X, st.basis.size());
      return;
    }
    std::uint32_t* row = &st.A[i * N_];
    for (std::size_t j = 0; j < i; ++j) row[j] = K_.neg(st.A[j * N_ + i]);
    row[i] = 0;
    const std::size_t f = N_ - 1 - i, q = K_.order();
    // with the rank already at its cap the row must be a combination of the
    // basis, which is far fewer candidates than the free entries
    const bool spanned = st.basis.size() == max_rank_ && max_rank_ < f;
    const std::uint64_t total = ipow(q, spanned ? max_rank_ : f);
    std::uint64_t local = 0;
    std::vector<std::uint32_t> red(N_);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      if (i == 0 && idx % W != w) continue;
      std::uint64_t t = idx;
      if (spanned) {
        red.assign(N_, 0);
        for (std::size_t b = 0; b < st.basis.size(); ++b) {
          std::uint32_t lam = static_cast<std::uint32_t>(t % q);
          t /= q;
          for (std::size_t j = 0; j < N_; ++j) red[j] = K_.add(red[j], K_.mul(lam, st.basis[b][j]));
        }
        if (!std::equal(red.begin(), red.begin() + i + 1, row)) continue;
        std::copy(red.begin() + i + 1, red.end(), row + i + 1);
      } else {
        for (std::size_t j = i + 1; j < N_; ++j) {
          row[j] = static_cast<std::uint32_t>(t % q);
          t /= q;
        }
      }
      if (++local == 4096) {
        if (work_.fetch_add(local) + local > opt_.budget) over_.store(true);
        local = 0;
        if (over_.load(std::memory_order_relaxed)) return;
      }
      bool iso = true;
      for (std::size_t k = 0; k < i && iso; ++k) iso = pair(row, &st.A[k * N_]) == 0;
      if (!iso) continue;
      red.assign(row, row + N_);
      for (std::size_t b = 0; b < st.basis.size(); ++b) {
        std::uint32_t c = red[st.pivots[b]];
        if (!c) continue;
        for (std::size_t j = 0; j < N_; ++j) red[j] = K_.sub(red[j], K_.mul(c, st.basis[b][j]));
      }
      std::size_t p = 0;
      while (p < N_ && red[p] == 0) ++p;
      if (p < N_) {
        if (st.basis.size() == max_rank_) continue;
        std::uint32_t inv = K_.inv(red[p]);
        for (auto& x : red) x = K_.mul(x, inv);
        st.basis.push_back(red);
        st.pivots.push_back(p);
        dfs(st, i + 1, w, W, leaf);
        st.basis.pop_back();
        st.pivots.pop_back();
      } else {
        dfs(st, i + 1, w, W, leaf);
      }
      // dfs overwrote later rows only; this row is restored by the next iteration
    }
    work_.fetch_add(local);
  }

  std::size_t N_, max_rank_;
  const FiniteField& K_;
  CensusOptions opt_;
  std::atomic<std::uint64_t> work_{0};
  std::atomic<bool> over_{false};
};

inline Mat<Fq> to_mat(const std::vector<std::uint32_t>& flat, std::size_t rows, std::size_t cols,
                      const FiniteField& K) {
  Mat<Fq> M = Mat<Fq>::zeros(rows, cols, K.zero());
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) M(i, j) = K.at(flat[i * cols + j]);
  return M;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// fiber over X3 = 0

inline std::size_t zero_fiber_dimension_formula(std::size_t m, std::size_t s) {
  return s % 2 == 0 ? (2 * m - s) * s : (2 * m - s + 1) * (s - 1);
}

struct ZeroFiberCensus {
  std::size_t m = 0, s = 0;
  std::uint64_t q = 0;
  std::uint64_t point_count = 0;
  std::map<std::size_t, std::uint64_t> by_rank;
  std::size_t max_rank_seen = 0;
  bool only_even_ranks = true;
  std::uint64_t work = 0;
};

// X1 with X1^2 = 0, X1 + sigma(X1) = 0, rank X1 <= s, size 2m.
inline ZeroFiberCensus zero_fiber_census(std::size_t m, std::size_t s, std::uint64_t q, const CensusOptions& opt = {}) {
  if (m < 1) fail(Errc::InvalidArgument, "m must be at least 1");
  const FiniteField& K = odd_field(q);
  ZeroFiberCensus c;
  c.m = m;
  c.s = s;
  c.q = q;
  detail::SquareZeroSearch search(2 * m, s, K, opt);
  const unsigned W = std::max(1u, std::min(opt.workers, 64u));
  std::vector<std::map<std::size_t, std::uint64_t>> part(W);
  search.run([&](unsigned w, const std::vector<std::uint32_t>&, std::size_t rk) { ++part[w][rk]; });
  for (auto& p : part)
    for (auto [rk, n] : p) c.by_rank[rk] += n;
  for (auto [rk, n] : c.by_rank) {
    c.point_count += n;
    c.max_rank_seen = std::max(c.max_rank_seen, rk);
    if (rk % 2) c.only_even_ranks = false;
  }
  c.work = search.work();
  return c;
}

struct ZeroFiberSweep {
  std::vector<ZeroFiberCensus> censuses;
  DimEstimate estimate;
  std::size_t formula = 0;
};

inline ZeroFiberSweep zero_fiber_sweep(std::size_t m, std::size_t s, const std::vector<std::uint64_t>& qs,
                                       const CensusOptions& opt = {}) {
  ZeroFiberSweep sw;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pts;
  for (auto q : qs) {
    sw.censuses.push_back(zero_fiber_census(m, s, q, opt));
    pts.emplace_back(q, sw.censuses.back().point_count);
  }
  sw.estimate = estimate_dimension(pts);
  sw.formula = zero_fiber_dimension_formula(m, s);
  return sw;
}

// ---------------------------------------------------------------------------
// the fiber over c0 and the whole of N

// Y1 fixed; brute-forces every Y2 in the fiber and compares with the
// predicted linear space: the row space of Y1 when rank Y1 = s - 1,
// otherwise the left kernel of Y1.
struct FibrationVerdict {
  std::size_t y1_rank = 0;
  std::uint64_t valid_count = 0;
  std::string predicted;  // "row-space" or "left-kernel"
  std::size_t predicted_dim = 0;
  Mat<Fq> predicted_basis;  // rows
  bool match = false;
};

inline FibrationVerdict nprime_fiber_analyze(const Mat<Fq>& Y1, std::size_t s, std::uint64_t budget = 100'000'000) {
  if (!Y1.square() || Y1.rows() % 2) fail(Errc::ShapeMismatch, "Y1 must be square of even size");
  if (s < 1) fail(Errc::PreconditionViolated, "s must be at least 1");
  if (!(Y1 * Y1).is_zero()) fail(Errc::PreconditionViolated, "Y1^2 != 0");
  if (!is_anti_fixed(Y1)) fail(Errc::PreconditionViolated, "Y1 + sigma(Y1) != 0");
  const std::size_t k = Y1.rows();
  const FiniteField& K = Y1.zero().field();
  FibrationVerdict v;
  v.y1_rank = k ? rank(Y1) : 0;
  if (v.y1_rank + 1 > s) fail(Errc::PreconditionViolated, "rank Y1 exceeds s - 1");
  if (v.y1_rank + 1 == s) {
    v.predicted = "row-space";
    v.predicted_basis = k ? row_space_basis(Y1) : Mat<Fq>::zeros(0, 0, K.zero());
  } else {
    v.predicted = "left-kernel";
    v.predicted_basis = k ? left_kernel(Y1) : Mat<Fq>::zeros(0, 0, K.zero());
  }
  v.predicted_dim = v.predicted_basis.rows();
  const std::uint64_t total = ipow(K.order(), k);
  if (total > budget) fail(Errc::TooLarge, "fiber needs q^" + std::to_string(k) + " candidates");
  bool inside = true;
  Mat<Fq> Y2 = Mat<Fq>::zeros(1, k, K.zero());
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t t = idx;
    for (std::size_t j = 0; j < k; ++j) {
      Y2(0, j) = K.at(static_cast<std::uint32_t>(t % K.order()));
      t /= K.order();
    }
    if (!is_nprime_point({Y1, Y2}, s)) continue;
    ++v.valid_count;
    if (k && rank(vstack(v.predicted_basis, Y2)) != v.predicted_dim) inside = false;
  }
  v.match = inside && v.valid_count == ipow(K.order(), v.predicted_dim);
  return v;
}

namespace detail {

using FiberVisitor = std::function<void(unsigned worker, const std::vector<std::uint32_t>& Y1,
                                        const std::vector<std::uint32_t>& Y2, std::size_t rank_y1)>;

// Every (Y1, Y2) in N' for size 2m - 2; returns the search work.
inline std::uint64_t walk_c0_fiber(std::size_t m, std::size_t s, const FiniteField& K, const CensusOptions& opt,
                                   const FiberVisitor& visit) {
  const std::uint64_t q = K.order();
  const std::size_t k = 2 * m - 2;
  const std::uint64_t y2_total = ipow(q, k);
  SquareZeroSearch search(k, s - 1, K, opt);
  if (search.estimated_leaves() * double(y2_total) > double(opt.budget))
    fail(Errc::TooLarge, "fiber over c0 needs ~" + std::to_string(std::llround(search.estimated_leaves() * y2_total)) +
                             " (Y1, Y2) pairs, budget is " + std::to_string(opt.budget));
  search.run([&](unsigned w, const std::vector<std::uint32_t>& Y1, std::size_t rk) {
    // Y2 Y1 = 0 and rank [Y1; Y2] <= s - 1
    std::vector<std::uint32_t> y2(k), stacked(Y1);
    for (std::uint64_t idx = 0; idx < y2_total; ++idx) {
      std::uint64_t t = idx;
      for (std::size_t j = 0; j < k; ++j) {
        y2[j] = static_cast<std::uint32_t>(t % q);
        t /= q;
      }
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        std::uint32_t acc = 0;
        for (std::size_t i = 0; i < k; ++i) acc = K.add(acc, K.mul(y2[i], Y1[i * k + j]));
        ok = acc == 0;
      }
      if (!ok) continue;
      if (rk + 1 == s) {
        // rank already s - 1: Y2 must lie in the row space of Y1
        stacked.resize(k * k);
        stacked.insert(stacked.end(), y2.begin(), y2.end());
        if (rank(to_mat(stacked, k + 1, k, K)) > rk) continue;
      }
      visit(w, Y1, y2, rk);
    }
  });
  return search.work();
}

}  // namespace detail

// All of N' in size 2m - 2 (small cases only).
inline std::vector<NPrimePoint> nprime_points(std::size_t m, std::size_t s, std::uint64_t q,
                                              const CensusOptions& opt = {}) {
  if (m < 1 || s < 1) fail(Errc::InvalidArgument, "need m >= 1 and s >= 1");
  const FiniteField& K = odd_field(q);
  const std::size_t k = 2 * m - 2;
  CensusOptions one = opt;
  one.workers = 1;
  std::vector<NPrimePoint> out;
  detail::walk_c0_fiber(m, s, K, one,
                        [&](unsigned, const std::vector<std::uint32_t>& Y1, const std::vector<std::uint32_t>& Y2,
                            std::size_t) { out.push_back({detail::to_mat(Y1, k, k, K), detail::to_mat(Y2, 1, k, K)}); });
  return out;
}

// Runs nprime_fiber_analyze on every square-zero anti-fixed Y1 of size
// 2m - 2 with rank <= s - 1.
struct FibrationCensus {
  std::size_t m = 0, s = 0;
  std::uint64_t q = 0;
  std::uint64_t y1_count = 0, matches = 0;
  std::uint64_t row_space_cases = 0, left_kernel_cases = 0;
  std::string first_mismatch;
};

inline FibrationCensus fibration_census(std::size_t m, std::size_t s, std::uint64_t q, const CensusOptions& opt = {}) {
  if (m < 1 || s < 1) fail(Errc::InvalidArgument, "need m >= 1 and s >= 1");
  const FiniteField& K = odd_field(q);
  const std::size_t k = 2 * m - 2;
  FibrationCensus fc;
  fc.m = m;
  fc.s = s;
  fc.q = q;
  CensusOptions one = opt;
  one.workers = 1;
  detail::SquareZeroSearch search(k, s - 1, K, one);
  if (search.estimated_leaves() * double(ipow(q, k)) > double(opt.budget))
    fail(Errc::TooLarge, "fibration census needs ~" + std::to_string(std::llround(search.estimated_leaves() * ipow(q, k))) +
                             " (Y1, Y2) pairs, budget is " + std::to_string(opt.budget));
  search.run([&](unsigned, const std::vector<std::uint32_t>& flat, std::size_t) {
    Mat<Fq> Y1 = detail::to_mat(flat, k, k, K);
    auto v = nprime_fiber_analyze(Y1, s, opt.budget);
    ++fc.y1_count;
    (v.predicted == "row-space" ? fc.row_space_cases : fc.left_kernel_cases)++;
    if (v.match) ++fc.matches;
    else if (fc.first_mismatch.empty())
      fc.first_mismatch = "Y1=" + Y1.str() + " valid=" + std::to_string(v.valid_count) + " predicted " + v.predicted +
                          " of dim " + std::to_string(v.predicted_dim);
  });
  return fc;
}

struct NCensus {
  std::size_t m = 0, s = 0;
  std::uint64_t q = 0;
  std::uint64_t zero_stratum = 0;                        // X3 = 0
  std::map<std::size_t, std::uint64_t> c0_fiber_by_rank;  // by rank Y1
  std::uint64_t c0_fiber = 0;
  std::uint64_t nonzero_stratum = 0;  // (q^{2m} - 1) |c0 fiber|
  std::uint64_t total = 0;
  std::uint64_t work = 0;
};

// Counts N over F_q using the X3-projection: the X3 = 0 fiber directly, the
// rest as (number of nonzero X3) x (fiber over c0), the fiber over c0 being
// enumerated in the (Y1, Y2) coordinates.
inline NCensus n_census(std::size_t m, std::size_t s, std::uint64_t q, const CensusOptions& opt = {}) {
  if (m < 1 || s < 1 || s > m) fail(Errc::InvalidArgument, "need 1 <= s <= m");
  const FiniteField& K = odd_field(q);
  NCensus c;
  c.m = m;
  c.s = s;
  c.q = q;
  auto zf = zero_fiber_census(m, s, q, opt);
  c.zero_stratum = zf.point_count;
  c.work = zf.work;

  const unsigned W = std::max(1u, std::min(opt.workers, 64u));
  std::vector<std::map<std::size_t, std::uint64_t>> part(W);
  c.work += detail::walk_c0_fiber(m, s, K, opt,
                                  [&](unsigned w, const std::vector<std::uint32_t>&, const std::vector<std::uint32_t>&,
                                      std::size_t rk) { ++part[w][rk]; });
  for (auto& p : part)
    for (auto [rk, n] : p) c.c0_fiber_by_rank[rk] += n;
  for (auto [rk, n] : c.c0_fiber_by_rank) c.c0_fiber += n;
  c.nonzero_stratum = (ipow(q, 2 * m) - 1) * c.c0_fiber;
  c.total = c.zero_stratum + c.nonzero_stratum;
  return c;
}

// Independent check for tiny m: walks X3 over all rows and X1 over the
// affine space X1 + sigma(X1) = -J X3^t X3 and tests the N conditions.
struct NCensusDirect {
  std::uint64_t zero_stratum = 0, nonzero_stratum = 0, total = 0;
};

inline NCensusDirect n_census_direct(std::size_t m, std::size_t s, std::uint64_t q, std::uint64_t budget = 10'000'000) {
  const FiniteField& K = odd_field(q);
  const std::size_t N = 2 * m;
  auto basis = anti_fixed_basis(N, K);
  const std::uint64_t total = ipow(q, N) * ipow(q, basis.size());
  if (total > budget) fail(Errc::TooLarge, "direct census needs " + std::to_string(total) + " candidates");
  const Fq half = K.elem(2).inverse();
  const Mat<Fq> J = j2_mat(N, K.zero());
  NCensusDirect d;
  for (std::uint64_t a = 0; a < ipow(q, N); ++a) {
    Mat<Fq> X3 = Mat<Fq>::zeros(1, N, K.zero());
    std::uint64_t t = a;
    for (std::size_t j = 0; j < N; ++j) {
      X3(0, j) = K.at(static_cast<std::uint32_t>(t % q));
      t /= q;
    }
    // -J X3^t X3 / 2 is sigma-fixed, so it is a particular solution
    Mat<Fq> P = (J * X3.transpose() * X3).map([&](const Fq& x) { return -(x * half); });
    for (std::uint64_t b = 0; b < ipow(q, basis.size()); ++b) {
      Mat<Fq> X1 = P;
      std::uint64_t u = b;
      for (const auto& B : basis) {
        Fq coef = K.at(static_cast<std::uint32_t>(u % q));
        u /= q;
        if (!coef.is_zero()) X1 = X1 + B.map([&](const Fq& x) { return x * coef; });
      }
      if (!is_npoint({X1, X3}, s)) continue;
      (a == 0 ? d.zero_stratum : d.nonzero_stratum)++;
    }
  }
  d.total = d.zero_stratum + d.nonzero_stratum;
  return d;
}

struct NSchemeSweep {
  std::vector<NCensus> censuses;
  DimEstimate zero_estimate, nonzero_estimate;
  std::string largest;  // stratum with the larger estimate
  long largest_dim = 0;
  std::size_t rs = 0;
};

inline NSchemeSweep n_scheme_sweep(std::size_t m, std::size_t s, const std::vector<std::uint64_t>& qs,
                                   const CensusOptions& opt = {}) {
  NSchemeSweep sw;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> z, nz;
  for (auto q : qs) {
    sw.censuses.push_back(n_census(m, s, q, opt));
    z.emplace_back(q, sw.censuses.back().zero_stratum);
    nz.emplace_back(q, sw.censuses.back().nonzero_stratum);
  }
  sw.zero_estimate = estimate_dimension(z);
  sw.nonzero_estimate = estimate_dimension(nz);
  const bool nz_larger = sw.nonzero_estimate.d >= sw.zero_estimate.d;
  sw.largest = nz_larger ? "X3!=0" : "X3=0";
  sw.largest_dim = nz_larger ? sw.nonzero_estimate.d : sw.zero_estimate.d;
  sw.rs = (2 * m + 1 - s) * s;
  return sw;
}

// ---------------------------------------------------------------------------
// raw worst-point chart

// Every n x n matrix X with F = [X; I] satisfying the worst-point conditions
// (isotropy through A-bar and M', Pi-bar-stability, rank Pi-bar F <= s),
// before any block is solved for. Used to confirm that X2 and X4 vanish.
struct RawWorstPointCensus {
  std::uint64_t raw_space = 0;
  std::uint64_t solutions = 0;
  bool last_column_zero = true;  // X2 = 0 and X4 = 0 on every solution
};

inline RawWorstPointCensus worst_point_raw_census(std::size_t m, std::size_t s, std::uint64_t q,
                                                  std::uint64_t budget = 10'000'000) {
  const FiniteField& K = odd_field(q);
  const std::size_t n = 2 * m + 1;
  const CaseId cid = CaseId::make(Family::OddM, static_cast<int>(n), static_cast<int>(s));
  const auto cm = case_matrices(cid, K.zero(), Basis::WorstPoint);
  const Mat<Fq> AtM = cm.inclusion_in->transpose() * cm.pairing;
  RawWorstPointCensus rc;
  rc.raw_space = ipow(q, n * n);
  if (rc.raw_space > budget) fail(Errc::TooLarge, "raw worst-point census needs q^" + std::to_string(n * n));
  const Mat<Fq> I = Mat<Fq>::identity(n, K.zero());
  Mat<Fq> X = Mat<Fq>::zeros(n, n, K.zero());
  for (std::uint64_t idx = 0; idx < rc.raw_space; ++idx) {
    std::uint64_t t = idx;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        X(i, j) = K.at(static_cast<std::uint32_t>(t % q));
        t /= q;
      }
    Mat<Fq> F = vstack(X, I);
    if (!(F.transpose() * AtM * F).is_zero()) continue;
    Mat<Fq> PF = cm.pi_action * F;
    if (!(PF - F * PF.bottom(n)).is_zero()) continue;
    if (rank(PF) > s) continue;
    ++rc.solutions;
    if (!X.col(n - 1).is_zero()) rc.last_column_zero = false;
  }
  return rc;
}

}  // namespace locmod
