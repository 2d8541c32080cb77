// locmod: batch front-end for chart verification, oracles, censuses and the
// symplectic property runs. Exit codes: 0 pass, 1 check failure or library
// error, 2 usage error.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "locmod/cli/commands.hpp"

namespace {

using locmod::cli::RunConfig;

std::vector<std::uint64_t> parse_q_list(const std::string& s) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (item.empty() || pos != item.size()) throw locmod::cli::UsageError("bad --q entry '" + item + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for local-model charts and the worst-point scheme"};
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.workers = locmod::cli::default_workers();
  std::string case_name, q_text, fiber = "special";
  bool zero_fiber = false, n_scheme = false, fibration = false;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--output", cfg.output, "write the report here instead of stdout");
    sub->add_option("--workers", cfg.workers, "worker threads (default: LOCMOD_WORKERS or 1)")
        ->check(CLI::Range(1, 256));
    sub->add_option("--seed", cfg.seed, "seed for every randomized step");
    sub->add_option("--budget", cfg.budget, "enumeration budget");
  };

  auto* verify = app.add_subcommand("verify-chart", "build and verify the rs-dimensional chart(s)");
  verify->add_option("--case", case_name, "odd-m, odd-0 or even-m");
  verify->add_option("--n", cfg.n, "rank n");
  verify->add_option("--s", cfg.s, "signature s (all s when omitted)");
  verify->add_flag("--sweep", cfg.sweep, "every supported (case, n, s) with n <= --max-n");
  verify->add_option("--max-n", cfg.max_n, "sweep bound");
  common(verify);

  auto* oracle = app.add_subcommand("oracle", "brute-force the raw conditions over a finite field");
  oracle->add_option("--case", case_name, "odd-m, odd-0 or even-m")->required();
  oracle->add_option("--n", cfg.n, "rank n")->required();
  oracle->add_option("--s", cfg.s, "signature s")->required();
  oracle->add_option("--q", q_text, "field size(s), comma separated")->required();
  oracle->add_option("--fiber", fiber, "special or nilpotent")->check(CLI::IsMember({"special", "nilpotent"}));
  common(oracle);

  auto* census = app.add_subcommand("census", "point counts on the worst-point scheme");
  auto* g = census->add_option_group("kind");
  g->add_flag("--zero-fiber", zero_fiber, "fiber over X3 = 0");
  g->add_flag("--n-scheme", n_scheme, "whole scheme, stratified by X3");
  g->add_flag("--fibration", fibration, "check the Y2-fibration over every Y1");
  g->require_option(1);
  census->add_option("--m", cfg.m, "half the size of X1")->required();
  census->add_option("--s", cfg.s, "signature s")->required();
  census->add_option("--q", q_text, "odd field sizes, comma separated")->required();
  common(census);

  auto* symp = app.add_subcommand("symplectic", "symplectic completion and stabilizer property runs");
  symp->add_option("--m", cfg.m, "half the matrix size (default: 2 and 3)");
  symp->add_option("--s", cfg.s, "s for the N' points (default: m)");
  symp->add_option("--q", q_text, "odd field size(s), default 5");
  symp->add_option("--trials", cfg.trials, "trials per size");
  common(symp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) cfg.command = locmod::cli::Command::VerifyChart;
    if (oracle->parsed()) cfg.command = locmod::cli::Command::Oracle;
    if (census->parsed()) cfg.command = locmod::cli::Command::Census;
    if (symp->parsed()) cfg.command = locmod::cli::Command::Symplectic;
    if (!case_name.empty()) {
      try {
        cfg.family = locmod::parse_family(case_name);
      } catch (const locmod::Error& e) {
        throw locmod::cli::UsageError(e.what());
      }
    }
    if (!q_text.empty()) cfg.q_list = parse_q_list(q_text);
    cfg.fiber = fiber == "special" ? locmod::Fiber::Special : locmod::Fiber::NilpotentGeneric;
    cfg.census = zero_fiber ? locmod::cli::CensusKind::ZeroFiber
                 : n_scheme ? locmod::cli::CensusKind::NScheme
                            : locmod::cli::CensusKind::Fibration;

    locmod::cli::Report rep = locmod::cli::run(cfg);
    const std::string text = locmod::cli::render(rep, cfg.format);
    if (cfg.output.empty()) {
      std::cout << text;
    } else {
      std::ofstream os(cfg.output);
      if (!os) {
        std::cerr << "cannot write " << cfg.output << "\n";
        return 2;
      }
      os << text;
    }
    if (rep.error) std::cerr << "error: " << *rep.error << "\n";
    return rep.passed() ? 0 : 1;
  } catch (const locmod::cli::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
}
