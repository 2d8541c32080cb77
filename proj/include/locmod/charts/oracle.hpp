#pragma once

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "locmod/charts/verify.hpp"

namespace locmod {

enum class Fiber { Special, NilpotentGeneric };

inline const char* fiber_name(Fiber f) { return f == Fiber::Special ? "special" : "nilpotent-generic"; }

struct OracleOptions {
  std::uint64_t budget = 100'000'000;  // raw tuples examined
  unsigned workers = 1;
};

struct OracleResult {
  CaseId id;
  std::uint64_t q = 0;
  Fiber fiber = Fiber::Special;
  std::uint64_t raw_space = 0;    // tuples enumerated
  std::uint64_t raw_count = 0;    // tuples satisfying every condition
  std::uint64_t param_count = 0;  // distinct points in the image of the rs-parameterization
  bool param_defined = true;      // false when the parameterization needs 1/2 and 2 = 0
  bool equal = false;
  std::string note;
};

namespace detail {

inline std::uint32_t element_code(const Fq& x, std::uint32_t) { return x.index(); }
inline std::uint32_t element_code(const QuotientPi<Fq>& x, std::uint32_t q) {
  return x.x().index() * q + x.y().index();
}

inline std::uint64_t checked_power(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (v > cap / base) return cap + 1;
    v *= base;
  }
  return v;
}

template <RingElement E>
std::vector<std::uint32_t> chart_key(const Mat<E>& F, std::size_t s, std::uint32_t q) {
  auto [a, b, c, d] = chart_blocks(F, s);
  std::vector<std::uint32_t> key;
  for (const Mat<E>* X : {&a, &b, &c, &d})
    for (std::size_t i = 0; i < X->rows(); ++i)
      for (std::size_t j = 0; j < X->cols(); ++j) key.push_back(element_code((*X)(i, j), q));
  return key;
}

template <RingElement E>
void run_oracle(const CaseId& cid, const std::vector<E>& elems, const E& pi, std::uint32_t q,
                const OracleOptions& opt, OracleResult& res) {
  const std::size_t n = cid.n, s = cid.s, r = cid.r, N = n * n, base = elems.size();
  const std::uint64_t total = checked_power(base, N, opt.budget);
  if (total > opt.budget)
    fail(Errc::TooLarge, "oracle needs " + std::to_string(base) + "^" + std::to_string(N) +
                             " raw tuples, budget is " + std::to_string(opt.budget));
  res.raw_space = total;
  const E zero = pi.zero_like();
  const auto cm = case_matrices(cid, pi * pi);

  std::vector<std::vector<std::uint32_t>> raw;
  std::mutex mu;
  const unsigned W = std::max(1u, std::min<unsigned>(opt.workers, 64));
  auto work = [&](std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::vector<std::uint32_t>> local;
    Mat<E> a = Mat<E>::zeros(r, s, zero), b = Mat<E>::zeros(r, r, zero), c = Mat<E>::zeros(s, s, zero),
           d = Mat<E>::zeros(s, r, zero);
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      std::uint64_t t = idx;
      auto next = [&]() -> const E& {
        const E& e = elems[t % base];
        t /= base;
        return e;
      };
      for (Mat<E>* X : {&a, &b, &c, &d})
        for (std::size_t i = 0; i < X->rows(); ++i)
          for (std::size_t j = 0; j < X->cols(); ++j) (*X)(i, j) = next();
      Mat<E> F = assemble_chart(a, b, c, d);
      if (all_hold(evaluate_conditions(cid, cm, F, std::optional<Mat<E>>{}, pi, true)))
        local.push_back(chart_key(F, s, q));
    }
    std::lock_guard<std::mutex> lk(mu);
    for (auto& k : local) raw.push_back(std::move(k));
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < W; ++w) {
    std::uint64_t lo = total * w / W, hi = total * (w + 1) / W;
    if (W == 1) work(lo, hi);
    else pool.emplace_back(work, lo, hi);
  }
  for (auto& th : pool) th.join();
  std::sort(raw.begin(), raw.end());
  res.raw_count = raw.size();

  // image of the parameterization
  Chart ch = build_chart(cid);
  const std::size_t k = ch.free_vars.size();
  const std::uint64_t ptotal = checked_power(base, k, ~0ull >> 1);
  std::vector<std::vector<std::uint32_t>> image;
  try {
    std::vector<E> vals(k, zero);
    for (std::uint64_t idx = 0; idx < ptotal; ++idx) {
      std::uint64_t t = idx;
      for (std::size_t i = 0; i < k; ++i) {
        vals[i] = elems[t % base];
        t /= base;
      }
      image.push_back(chart_key(specialize(ch.F, vals, pi), s, q));
    }
  } catch (const Error& e) {
    if (e.code() != Errc::NotInvertible) throw;
    res.param_defined = false;
    res.note = "parameterization not defined over this ring: " + std::string(e.what());
  }
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  res.param_count = res.param_defined ? image.size() : 0;
  res.equal = res.param_defined && image == raw;
}

}  // namespace detail

// Enumerates every raw (a, b, c, d) over the special fiber F_q (pi = 0) or
// over F_q[pi]/(pi^2), keeps the tuples satisfying the unsubstituted
// conditions, and compares with the image of the rs free variables.
// Characteristic 2 is admitted here on purpose: the raw side is still
// meaningful, and the comparison then fails because the parameterization
// divides by 2.
inline OracleResult brute_force_chart_oracle(const CaseId& cid, std::uint64_t q, Fiber fiber,
                                             const OracleOptions& opt = {}) {
  OracleResult res;
  res.id = cid;
  res.q = q;
  res.fiber = fiber;
  const FiniteField& K = FiniteField::of_order(q, FieldOptions{true});
  const auto qq = static_cast<std::uint32_t>(K.order());
  if (fiber == Fiber::Special) {
    std::vector<Fq> elems;
    for (std::uint32_t i = 0; i < qq; ++i) elems.push_back(K.at(i));
    detail::run_oracle(cid, elems, K.zero(), qq, opt, res);
  } else {
    auto ring = QuotientPiRing<Fq>::make(K.zero());
    std::vector<QuotientPi<Fq>> elems;
    for (std::uint32_t i = 0; i < qq; ++i)
      for (std::uint32_t j = 0; j < qq; ++j) elems.push_back(ring->make_elem(K.at(i), K.at(j)));
    detail::run_oracle(cid, elems, ring->pi(), qq, opt, res);
  }
  return res;
}

}  // namespace locmod
