#include <benchmark/benchmark.h>

#include "clar/bounds.hpp"
#include "clar/cl12.hpp"
#include "clar/strategies.hpp"

using namespace clar;

namespace {

const char* kProofText =
    "line 1: y1 = 0', y2 = y1' |o- y2 = 0'' ;; Wait()\n"
    "line 2: y1 = 0', y2 = y1' |o- cex z . z = 0'' ;; JoinChoose(1; path=; inst=y2)\n"
    "line 3: y1 = 0', cex y . y = y1' |o- cex z . z = 0'' ;; Wait(2)\n"
    "line 4: y1 = 0', call x . cex y . y = x' |o- cex z . z = 0'' ;; MeetChoose(3; ant=1; path=; inst=y1)\n"
    "line 5: cex y . y = 0', call x . cex y . y = x' |o- cex z . z = 0'' ;; Wait(4)\n"
    "line 6: call x . cex y . y = x', call x . cex y . y = x' |o- cex z . z = 0'' ;; MeetChoose(5; ant=0; path=; inst=0)\n"
    "line 7: call x . cex y . y = x' |o- cex z . z = 0'' ;; Replicate(6; ant=0)\n";

void BM_ParseFormula(benchmark::State& state) {
  const std::string text = "call u . call v . (u < v cor u = v) cor u > v";
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_formula(text));
  }
}
BENCHMARK(BM_ParseFormula);

void BM_RenderRoundTrip(benchmark::State& state) {
  Formula f = parse_formula("call u . call v . cex |z| <= |u| + |v| . Bit(z, u + v)");
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_formula(f.to_string()));
  }
}
BENCHMARK(BM_RenderRoundTrip);

void BM_CheckSequentProof(benchmark::State& state) {
  auto proof = cl12::Proof::parse_text(kProofText);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cl12::check_proof(proof));
  }
}
BENCHMARK(BM_CheckSequentProof);

void BM_AdditionMatch(benchmark::State& state) {
  std::string u = "#1" + std::string(static_cast<size_t>(state.range(0)), '0');
  std::string v = "#1" + std::string(static_cast<size_t>(state.range(0)) / 2, '1');
  for (auto _ : state) {
    auto agent = strat::add_agent();
    auto env = strat::env_script({u, v});
    Formula game = *agent->declared_game();
    benchmark::DoNotOptimize(run_match(*agent, *env, game, {}));
  }
}
BENCHMARK(BM_AdditionMatch)->Arg(32)->Arg(256);

void BM_MultiplicationMatch(benchmark::State& state) {
  std::string u = "#1" + std::string(static_cast<size_t>(state.range(0)), '1');
  for (auto _ : state) {
    auto agent = strat::mult_agent();
    auto env = strat::env_script({u, u});
    Formula game = *agent->declared_game();
    benchmark::DoNotOptimize(run_match(*agent, *env, game, {}));
  }
}
BENCHMARK(BM_MultiplicationMatch)->Arg(16)->Arg(64);

void BM_ClosureMembership(benchmark::State& state) {
  auto cls = bounds::parse_boundclass("poly{x}");
  PTerm target = parse_pterm("x * x * x + x + 0''");
  for (auto _ : state) {
    benchmark::DoNotOptimize(bounds::closure_contains(cls, target));
  }
}
BENCHMARK(BM_ClosureMembership);

void BM_RegularityAudit(benchmark::State& state) {
  bounds::Triple t{*bounds::standard_class("B3"), *bounds::standard_class("B1^1"),
                   *bounds::standard_class("B5")};
  for (auto _ : state) {
    benchmark::DoNotOptimize(bounds::check_regularity(t, {}));
  }
}
BENCHMARK(BM_RegularityAudit);

}  // namespace

BENCHMARK_MAIN();
