#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "locmod/charts/chart.hpp"

namespace locmod {

enum class MutationKind { AddOne, AddPi, AddVariable, ScaleTwo };

struct Mutation {
  EntryRef entry;
  MutationKind kind = MutationKind::AddOne;
  std::string description;
};

// Corrupts one substitution and rebuilds F, R, G. Used to probe that
// verify_chart notices every single-entry change.
inline Mutation mutate_chart(Chart& ch, std::uint64_t seed) {
  if (ch.substitutions.empty()) fail(Errc::PreconditionViolated, "chart has no substitutions to corrupt");
  std::mt19937_64 rng(seed);
  auto it = ch.substitutions.begin();
  std::advance(it, static_cast<long>(rng() % ch.substitutions.size()));
  Mutation mu{it->first, static_cast<MutationKind>(rng() % 4), {}};
  const auto& ctx = *ch.ctx;
  Sym before = it->second, after = before;
  switch (mu.kind) {
    case MutationKind::AddOne: after = before + ctx.one(); break;
    case MutationKind::AddPi: after = before + ctx.pi(); break;
    case MutationKind::AddVariable:
      after = ctx.nfree() ? before + ctx.var(rng() % ctx.nfree()) : before + ctx.one();
      break;
    case MutationKind::ScaleTwo: after = before + before; break;
  }
  if (after == before) {
    mu.kind = MutationKind::AddOne;
    after = before + ctx.one();
  }
  static const char* names[] = {"+1", "+pi", "+variable", "*2"};
  mu.description = mu.entry.str() + " " + names[static_cast<int>(mu.kind)];
  it->second = after;
  ch.refresh();
  return mu;
}

}  // namespace locmod
