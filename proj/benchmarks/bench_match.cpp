#include <benchmark/benchmark.h>

#include <fstream>
#include <iterator>
#include <string>

#include "cybug/bots.hpp"
#include "cybug/match.hpp"
#include "cybug/tournament.hpp"
#include "cybug/world.hpp"

using namespace cybug::sim;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

std::string asset(const std::string& rel) { return std::string(CYBUG_ASSETS_DIR "/") + rel; }

BotSpec builtin(const char* name) { return {name, std::string(*builtin_source(name)), name}; }

void BM_DuelMatch(benchmark::State& state) {
    const std::string map = slurp(asset("maps/duel.map"));
    for (auto _ : state) {
        MatchConfig mc;
        mc.map_text = map;
        mc.bots = {builtin("ghazu_spec"), builtin("idle")};
        mc.rules.seed = 42;
        auto run = run_match(mc);
        benchmark::DoNotOptimize(run);
    }
}
BENCHMARK(BM_DuelMatch);

void BM_MinefieldMatch(benchmark::State& state) {
    const std::string map = slurp(asset("maps/minefield.map"));
    for (auto _ : state) {
        MatchConfig mc;
        mc.map_text = map;
        mc.bots = {builtin("ghazu_spec"), builtin("wanderer")};
        mc.rules.seed = 42;
        mc.rules.max_ticks = 500;
        auto run = run_match(mc);
        benchmark::DoNotOptimize(run);
    }
}
BENCHMARK(BM_MinefieldMatch);

void BM_WorldTicks(benchmark::State& state) {
    const std::string map = slurp(asset("maps/arena32.map"));
    auto wanderer = *builtin_bot("wanderer");
    for (auto _ : state) {
        state.PauseTiming();
        auto loaded = load_map(map);
        World world(std::move(*loaded.map), RuleConfig{});
        for (int i = 0; i < 8; ++i) world.spawn(wanderer, "team" + std::to_string(i));
        state.ResumeTiming();
        for (int t = 0; t < int(state.range(0)); ++t) world.tick();
        benchmark::DoNotOptimize(world);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0) * 8);
}
BENCHMARK(BM_WorldTicks)->Arg(100)->Arg(1000);

void BM_Tournament(benchmark::State& state) {
    const std::string map = slurp(asset("maps/duel.map"));
    for (auto _ : state) {
        TournamentConfig tc;
        tc.map_text = map;
        tc.bots = {{"ghazu_spec", std::string(*builtin_source("ghazu_spec"))},
                   {"idle", std::string(*builtin_source("idle"))},
                   {"wanderer", std::string(*builtin_source("wanderer"))}};
        tc.rounds = 2;
        tc.rules.max_ticks = 300;
        tc.jobs = int(state.range(0));
        auto run = run_tournament(tc);
        benchmark::DoNotOptimize(run);
    }
}
BENCHMARK(BM_Tournament)->Arg(1)->Arg(4);

}  // namespace

int main(int argc, char** argv) {
    ::benchmark::Initialize(&argc, argv);
    if (::benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    ::benchmark::RunSpecifiedBenchmarks();
    ::benchmark::Shutdown();
    return 0;
}
