#include <benchmark/benchmark.h>

#include <string>

#include "cybug/bots.hpp"
#include "cybug/cfg.hpp"
#include "cybug/lint.hpp"
#include "cybug/parse.hpp"
#include "cybug/token.hpp"

using namespace cybug;

namespace {

std::string corpus_source() { return std::string(*sim::builtin_source("ghazu_corpus")); }

void BM_Tokenize(benchmark::State& state) {
    const std::string src = corpus_source();
    for (auto _ : state) {
        auto tokens = caicl::tokenize(src);
        benchmark::DoNotOptimize(tokens);
    }
    state.SetBytesProcessed(int64_t(state.iterations()) * int64_t(src.size()));
}
BENCHMARK(BM_Tokenize);

void BM_ParseLenient(benchmark::State& state) {
    const std::string src = corpus_source();
    for (auto _ : state) {
        auto result = caicl::parse(src, caicl::ParseMode::lenient);
        benchmark::DoNotOptimize(result);
    }
    state.SetBytesProcessed(int64_t(state.iterations()) * int64_t(src.size()));
}
BENCHMARK(BM_ParseLenient);

void BM_ParseStrict(benchmark::State& state) {
    const std::string src = std::string(*sim::builtin_source("ghazu_spec"));
    for (auto _ : state) {
        auto result = caicl::parse(src, caicl::ParseMode::strict);
        benchmark::DoNotOptimize(result);
    }
    state.SetBytesProcessed(int64_t(state.iterations()) * int64_t(src.size()));
}
BENCHMARK(BM_ParseStrict);

void BM_BuildCfg(benchmark::State& state) {
    auto program = *sim::builtin_bot("ghazu_corpus");
    for (auto _ : state) {
        auto cfg = caicl::build_cfg(program);
        benchmark::DoNotOptimize(cfg);
    }
}
BENCHMARK(BM_BuildCfg);

void BM_Lint(benchmark::State& state) {
    auto program = *sim::builtin_bot("ghazu_corpus");
    for (auto _ : state) {
        auto findings = caicl::lint(program);
        benchmark::DoNotOptimize(findings);
    }
}
BENCHMARK(BM_Lint);

}  // namespace
