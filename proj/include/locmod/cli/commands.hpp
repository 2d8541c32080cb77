#pragma once

#include <chrono>
#include <cstdlib>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "locmod/charts.hpp"
#include "locmod/cli/report.hpp"
#include "locmod/latticechain.hpp"
#include "locmod/worstpoint.hpp"

namespace locmod::cli {

enum class Command { VerifyChart, Oracle, Census, Symplectic };
enum class CensusKind { ZeroFiber, NScheme, Fibration };

inline const char* command_name(Command c) {
  switch (c) {
    case Command::VerifyChart: return "verify-chart";
    case Command::Oracle: return "oracle";
    case Command::Census: return "census";
    case Command::Symplectic: return "symplectic";
  }
  return "?";
}

inline const char* census_name(CensusKind k) {
  switch (k) {
    case CensusKind::ZeroFiber: return "zero-fiber";
    case CensusKind::NScheme: return "n-scheme";
    case CensusKind::Fibration: return "fibration";
  }
  return "?";
}

// Bad flags or parameters; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  Command command = Command::VerifyChart;
  std::optional<Family> family;
  std::optional<int> n, s, m;
  bool sweep = false;
  int max_n = 9;
  Fiber fiber = Fiber::Special;
  CensusKind census = CensusKind::ZeroFiber;
  std::vector<std::uint64_t> q_list;
  std::uint64_t budget = 100'000'000;
  std::uint64_t seed = 1;
  unsigned trials = 1000;
  unsigned workers = 1;
  std::string format = "json";
  std::string output;

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command_name(command);
    switch (command) {
      case Command::VerifyChart:
        j["sweep"] = sweep;
        if (sweep) j["max_n"] = max_n;
        break;
      case Command::Oracle: j["fiber"] = fiber_name(fiber); break;
      case Command::Census: j["census"] = census_name(census); break;
      case Command::Symplectic: j["trials"] = trials; break;
    }
    if (family) {
      j["case"] = family_name(*family);
      j["index_set"] = *family == Family::OddZero ? "{0}" : "{m}";
      j["parity"] = *family == Family::EvenM ? "even" : "odd";
    }
    if (n) j["n"] = *n;
    if (m) j["m"] = *m;
    if (s) j["s"] = *s;
    if (!q_list.empty()) j["q"] = q_list;
    j["budget"] = budget;
    j["seed"] = seed;
    j["format"] = format;
    return j;
  }
};

// LOCMOD_WORKERS, else 1.
inline unsigned default_workers() {
  if (const char* e = std::getenv("LOCMOD_WORKERS")) {
    char* end = nullptr;
    long v = std::strtol(e, &end, 10);
    if (end != e && *end == '\0' && v > 0 && v <= 256) return static_cast<unsigned>(v);
  }
  return 1;
}

namespace detail {

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Runs fn(i) for i < count on up to `workers` threads; results keep index order.
template <class T>
std::vector<T> fan_out(std::size_t count, unsigned workers, const std::function<T(std::size_t)>& fn) {
  std::vector<T> out(count);
  std::vector<std::exception_ptr> errs(count);
  const unsigned W = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  auto body = [&](unsigned w) {
    for (std::size_t i = w; i < count; i += W) try {
        out[i] = fn(i);
      } catch (...) {
        errs[i] = std::current_exception();
      }
  };
  if (W == 1) {
    body(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < W; ++w) pool.emplace_back(body, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
  return out;
}

inline CaseId make_case(Family f, int n, int s) {
  try {
    return CaseId::make(f, n, s);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

inline void require_fields(const RunConfig& c, bool allow_two) {
  if (c.q_list.empty()) throw UsageError("--q is required");
  for (auto q : c.q_list) {
    try {
      FiniteField::of_order(q, FieldOptions{allow_two});
    } catch (const Error& e) {
      throw UsageError("q=" + std::to_string(q) + ": " + e.what());
    }
  }
}

struct ChartRun {
  ConditionReport rep;
  double seconds = 0;
};

inline void run_verify_chart(const RunConfig& c, Report& r) {
  std::vector<CaseId> cases;
  if (c.sweep) {
    if (c.max_n < 3) throw UsageError("--max-n must be at least 3");
    cases = CaseId::all_up_to(c.max_n);
  } else {
    if (!c.family || !c.n) throw UsageError("verify-chart needs --case and --n, or --sweep");
    if (c.s) {
      cases.push_back(make_case(*c.family, *c.n, *c.s));
    } else {
      make_case(*c.family, *c.n, 1);
      for (int s = 1; 2 * s <= *c.n; ++s) cases.push_back(make_case(*c.family, *c.n, s));
    }
  }
  VerifyOptions vo;
  vo.seed = c.seed;
  auto runs = fan_out<ChartRun>(cases.size(), c.workers, [&](std::size_t i) {
    auto t0 = std::chrono::steady_clock::now();
    ChartRun cr{verify_chart(build_chart(cases[i]), vo), 0};
    cr.seconds = seconds_since(t0);
    return cr;
  });
  std::uint64_t failed = 0;
  for (const auto& run : runs) {
    const std::string subj = run.rep.id.name();
    for (const auto& ch : run.rep.checks) r.checks.push_back({subj, ch.name, state_name(ch.state), ch.witness});
    r.count(subj, "free_vars", 0, run.rep.free_vars);
    r.count(subj, "rs", 0, static_cast<std::uint64_t>(run.rep.id.r * run.rep.id.s));
    r.timings.push_back({subj, run.seconds});
    if (!run.rep.accepted()) ++failed;
  }
  r.count("all", "configurations", 0, runs.size());
  r.count("all", "failed_configurations", 0, failed);
}

inline void run_oracle(const RunConfig& c, Report& r) {
  if (!c.family || !c.n || !c.s) throw UsageError("oracle needs --case, --n and --s");
  const CaseId cid = make_case(*c.family, *c.n, *c.s);
  require_fields(c, true);
  OracleOptions oo;
  oo.budget = c.budget;
  oo.workers = c.workers;
  for (auto q : c.q_list) {
    auto t0 = std::chrono::steady_clock::now();
    auto res = brute_force_chart_oracle(cid, q, c.fiber, oo);
    const std::string subj = cid.name() + " q=" + std::to_string(q) + " " + fiber_name(c.fiber);
    r.count(subj, "raw_space", q, res.raw_space);
    r.count(subj, "raw_count", q, res.raw_count);
    r.count(subj, "param_count", q, res.param_count);
    r.check(subj, "param_defined", res.param_defined, res.note);
    r.check(subj, "raw_equals_param", res.equal,
            "raw " + std::to_string(res.raw_count) + " vs param " +
                (res.param_defined ? std::to_string(res.param_count) : std::string("undefined")));
    r.timings.push_back({subj, seconds_since(t0)});
  }
}

inline void run_census(const RunConfig& c, Report& r) {
  if (!c.m || !c.s) throw UsageError("census needs --m and --s");
  if (*c.m < 1 || *c.s < 1 || *c.s > *c.m) throw UsageError("census needs 1 <= s <= m");
  require_fields(c, false);
  for (auto q : c.q_list)
    if (q % 2 == 0) throw UsageError("census needs odd q");
  const std::size_t m = *c.m, s = *c.s;
  CensusOptions co;
  co.budget = c.budget;
  co.workers = c.workers;
  const std::string base = "m=" + std::to_string(m) + " s=" + std::to_string(s);
  switch (c.census) {
    case CensusKind::ZeroFiber: {
      std::vector<std::pair<std::uint64_t, std::uint64_t>> pts;
      bool even = true;
      for (auto q : c.q_list) {
        auto t0 = std::chrono::steady_clock::now();
        auto zc = zero_fiber_census(m, s, q, co);
        r.count(base, "points", q, zc.point_count);
        for (auto [rk, n] : zc.by_rank) r.count(base, "rank_" + std::to_string(rk), q, n);
        r.count(base, "max_rank_seen", q, zc.max_rank_seen);
        even = even && zc.only_even_ranks;
        pts.emplace_back(q, zc.point_count);
        r.timings.push_back({base + " q=" + std::to_string(q), seconds_since(t0)});
      }
      r.check(base, "only_even_ranks", even, "an odd rank occurred");
      if (pts.size() >= 2) {
        auto e = estimate_dimension(pts);
        const long want = static_cast<long>(zero_fiber_dimension_formula(m, s));
        r.dims.push_back({base, "zero_fiber", e.d, want, e.stable});
        r.check(base, "dimension_matches_formula", e.d == want,
                "estimate " + std::to_string(e.d) + ", formula " + std::to_string(want));
      }
      break;
    }
    case CensusKind::NScheme: {
      std::vector<std::pair<std::uint64_t, std::uint64_t>> z, nz;
      for (auto q : c.q_list) {
        auto t0 = std::chrono::steady_clock::now();
        auto nc = n_census(m, s, q, co);
        r.count(base, "X3=0", q, nc.zero_stratum);
        r.count(base, "X3!=0", q, nc.nonzero_stratum);
        for (auto [rk, n] : nc.c0_fiber_by_rank) r.count(base, "c0_fiber_rankY1_" + std::to_string(rk), q, n);
        r.count(base, "total", q, nc.total);
        z.emplace_back(q, nc.zero_stratum);
        nz.emplace_back(q, nc.nonzero_stratum);
        r.timings.push_back({base + " q=" + std::to_string(q), seconds_since(t0)});
      }
      if (c.q_list.size() >= 2) {
        const long rs = static_cast<long>((2 * m + 1 - s) * s);
        auto ez = estimate_dimension(z), enz = estimate_dimension(nz);
        const bool nz_largest = enz.d >= ez.d;
        const long largest = nz_largest ? enz.d : ez.d;
        r.dims.push_back({base, "X3=0", ez.d, static_cast<long>(zero_fiber_dimension_formula(m, s)), ez.stable});
        r.dims.push_back({base, "X3!=0", enz.d, rs, enz.stable});
        r.dims.push_back({base, "largest_stratum", largest, rs, nz_largest ? enz.stable : ez.stable});
        r.check(base, "largest_stratum_is_rs", largest == rs,
                "estimate " + std::to_string(largest) + ", rs " + std::to_string(rs));
        r.check(base, "zero_stratum_smaller", ez.d < rs,
                "X3=0 estimate " + std::to_string(ez.d) + " not below rs " + std::to_string(rs));
      }
      break;
    }
    case CensusKind::Fibration: {
      for (auto q : c.q_list) {
        auto t0 = std::chrono::steady_clock::now();
        auto fc = fibration_census(m, s, q, co);
        const std::string subj = base + " q=" + std::to_string(q);
        r.count(subj, "Y1", q, fc.y1_count);
        r.count(subj, "row_space_cases", q, fc.row_space_cases);
        r.count(subj, "left_kernel_cases", q, fc.left_kernel_cases);
        r.count(subj, "matches", q, fc.matches);
        r.check(subj, "fibration_prediction", fc.matches == fc.y1_count, fc.first_mismatch);
        r.timings.push_back({subj, seconds_since(t0)});
      }
      break;
    }
  }
}

inline void run_symplectic(const RunConfig& c, Report& r) {
  std::vector<std::uint64_t> qs = c.q_list.empty() ? std::vector<std::uint64_t>{5} : c.q_list;
  for (auto q : qs)
    if (q % 2 == 0) throw UsageError("symplectic runs need odd q");
  RunConfig probe = c;
  probe.q_list = qs;
  require_fields(probe, false);
  std::vector<int> ms = c.m ? std::vector<int>{*c.m} : std::vector<int>{2, 3};
  for (int m : ms)
    if (m < 1) throw UsageError("--m must be at least 1");
  if (c.trials == 0) throw UsageError("--trials must be positive");
  for (auto q : qs)
    for (int m : ms) {
      auto t0 = std::chrono::steady_clock::now();
      const FiniteField& K = odd_field(q);
      const std::size_t two_m = 2 * static_cast<std::size_t>(m);
      const std::size_t s = c.s ? static_cast<std::size_t>(*c.s) : static_cast<std::size_t>(m);
      std::mt19937_64 rng(c.seed);
      CensusOptions co;
      co.budget = c.budget;
      auto pts = nprime_points(static_cast<std::size_t>(m), s, q, co);
      std::uint64_t bad_complete = 0, bad_trip = 0, bad_inverse = 0, bad_action = 0;
      std::string w_complete, w_trip, w_inverse, w_action;
      const Mat<Fq> I = Mat<Fq>::identity(two_m, K.zero());
      for (unsigned t = 0; t < c.trials; ++t) {
        Mat<Fq> v = random_row(two_m, K, rng);
        if (v.is_zero()) v(0, 0) = K.one();
        Mat<Fq> g = symplectic_complete(v);
        if (!is_symplectic(g) || !(g.row(0) - v).is_zero()) {
          if (!bad_complete++) w_complete = "c=" + v.str();
        }
        auto tr = random_stabilizer_triple(two_m, K, rng);
        Mat<Fq> G = assemble_stabilizer(tr);
        bool trip = false;
        try {
          auto back = stabilizer_decompose(G);
          trip = (back.g1 - tr.g1).is_zero() && (back.g2 - tr.g2).is_zero() && back.g3 == tr.g3;
        } catch (const Error&) {
        }
        if (!trip && !bad_trip++) w_trip = "g=" + G.str();
        if (!(assemble_stabilizer(stabilizer_inverse(tr)) * G - I).is_zero())
          if (!bad_inverse++) w_inverse = "g=" + G.str();
        const NPrimePoint& p = pts[rng() % pts.size()];
        if (!is_nprime_point(act_on_nprime(p, tr), s))
          if (!bad_action++) w_action = "Y1=" + p.Y1.str() + " Y2=" + p.Y2.str() + " g=" + G.str();
      }
      const std::string subj = "2m=" + std::to_string(two_m) + " q=" + std::to_string(q);
      r.count(subj, "trials", q, c.trials);
      r.count(subj, "nprime_points", q, pts.size());
      r.count(subj, "completion_failures", q, bad_complete);
      r.count(subj, "round_trip_failures", q, bad_trip);
      r.count(subj, "inverse_failures", q, bad_inverse);
      r.count(subj, "action_failures", q, bad_action);
      r.check(subj, "completion_first_row_and_symplectic", bad_complete == 0, w_complete);
      r.check(subj, "stabilizer_round_trip", bad_trip == 0, w_trip);
      r.check(subj, "stabilizer_inverse_triple", bad_inverse == 0, w_inverse);
      r.check(subj, "nprime_action_preserved", bad_action == 0, w_action);
      r.timings.push_back({subj, seconds_since(t0)});
    }
}

}  // namespace detail

// Runs one command. UsageError for bad parameters; library errors such as
// TooLarge are caught and recorded in the report.
inline Report run(const RunConfig& c) {
  if (c.format != "json" && c.format != "csv") throw UsageError("--format must be json or csv");
  if (c.budget == 0) throw UsageError("--budget must be positive");
  Report r;
  r.command = command_name(c.command);
  r.config = c.to_json();
  try {
    switch (c.command) {
      case Command::VerifyChart: detail::run_verify_chart(c, r); break;
      case Command::Oracle: detail::run_oracle(c, r); break;
      case Command::Census: detail::run_census(c, r); break;
      case Command::Symplectic: detail::run_symplectic(c, r); break;
    }
  } catch (const UsageError&) {
    throw;
  } catch (const Error& e) {
    r.error = e.what();
  }
  return r;
}

inline std::string render(const Report& r, const std::string& format, bool with_timings = true) {
  return format == "csv" ? r.to_csv(with_timings) : r.to_json(with_timings).dump(2) + "\n";
}

}  // namespace locmod::cli
