#include <benchmark/benchmark.h>

#include <memory>
#include <random>

#include "hooklab/config.hpp"
#include "hooklab/dcomplete_maps.hpp"
#include "hooklab/diagram_bijection.hpp"
#include "hooklab/tableaux.hpp"
#include "hooklab/weighted.hpp"

using namespace hooklab;

static void BM_CountHlf(benchmark::State& state) {
    const Partition l({8, 7, 5, 3, 2});
    for (auto _ : state) benchmark::DoNotOptimize(count_hlf(l, true));
}
BENCHMARK(BM_CountHlf);

static void BM_CountBrute(benchmark::State& state) {
    const Partition l({6, 5, 3, 2});
    for (auto _ : state) benchmark::DoNotOptimize(count_brute(l, true));
}
BENCHMARK(BM_CountBrute);

static void BM_EnumerateG(benchmark::State& state) {
    auto d = std::make_shared<const Diagram>(Partition({4, 3, 1}), true);
    for (auto _ : state) {
        std::uint64_t n = 0;
        for (Cell c : d->corners()) {
            auto s = enumerate_G(d, c);
            while (s.next()) ++n;
        }
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(BM_EnumerateG);

static void BM_PhiShifted(benchmark::State& state) {
    const Diagram d(Partition({8, 7, 5, 3, 2}), true);
    const DiagramBijection db(d);
    std::mt19937_64 rng(kDefaultSeed);
    const Cell c = d.corners().front();
    const LabelDomains dom = g_domains(d, c);
    for (auto _ : state) {
        state.PauseTiming();
        const GArrangement g{c, sample_labels(dom, rng)};
        state.ResumeTiming();
        benchmark::DoNotOptimize(db.phi(g));
    }
}
BENCHMARK(BM_PhiShifted);

static void BM_RoundTripSampled(benchmark::State& state) {
    const DiagramBijection db(Diagram(Partition({5, 3, 2}), true));
    for (auto _ : state) {
        std::mt19937_64 rng(kDefaultSeed);
        benchmark::DoNotOptimize(roundtrip_sampled(db.bijection(), 1000, rng));
    }
}
BENCHMARK(BM_RoundTripSampled)->Unit(benchmark::kMillisecond);

static void BM_VerifyWeighted(benchmark::State& state) {
    const Partition l({5, 3, 1});
    for (auto _ : state) benchmark::DoNotOptimize(verify_weighted(l));
}
BENCHMARK(BM_VerifyWeighted)->Unit(benchmark::kMillisecond);

static void BM_DCompleteHooks(benchmark::State& state) {
    const DPoset p = parse_poset("slant(shifted:3,2,1@(2,2),diamond:5)");
    for (auto _ : state) benchmark::DoNotOptimize(hook_lengths_dcomplete(p));
}
BENCHMARK(BM_DCompleteHooks);

static void BM_ConjectureDiamond(benchmark::State& state) {
    const DPoset p = build_diamond(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(verify_conjecture_all(p));
}
BENCHMARK(BM_ConjectureDiamond)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);
