#include <benchmark/benchmark.h>

#include <map>
#include <random>
#include <vector>

#include "hoboss/assembly/omnitigs.hpp"
#include "hoboss/sim/simulate.hpp"
#include "hoboss/succinct/bit_seq.hpp"
#include "hoboss/vo/ho_boss.hpp"

using namespace hoboss;

namespace {

succinct::BitSeq random_bits(std::uint64_t n, double density, succinct::BitMode mode) {
    std::mt19937_64 rng(n);
    std::bernoulli_distribution coin(density);
    succinct::BitBuilder b;
    for (std::uint64_t i = 0; i < n; ++i)
        b.push_back(coin(rng));
    return std::move(b).build(mode);
}

std::vector<std::uint64_t> random_positions(std::uint64_t count, std::uint64_t hi) {
    std::mt19937_64 rng(count + hi);
    std::uniform_int_distribution<std::uint64_t> pick(1, hi);
    std::vector<std::uint64_t> out(count);
    for (auto &p : out)
        p = pick(rng);
    return out;
}

// Index of 10x circular reads from a random genome; K = ceil(log4 G) + 3, m = K - 1.
const vo::HoBossIndex &genome_index(std::uint64_t genome_len) {
    static std::map<std::uint64_t, vo::HoBossIndex> cache;
    auto it = cache.find(genome_len);
    if (it == cache.end()) {
        sim::SampleOptions options;
        options.coverage = 10.0;
        options.circular = true;
        const auto reads = sim::sample_reads(sim::random_genome(genome_len, 1), options);
        unsigned lg = 0;
        while ((std::uint64_t{1} << (2 * lg)) < genome_len)
            ++lg;
        it = cache.emplace(genome_len, vo::HoBossIndex::build(ingest::ReadSet{reads, {}}, lg + 3, lg + 2)).first;
    }
    return it->second;
}

void BM_Rank1(benchmark::State &state) {
    const auto mode = state.range(1) ? succinct::BitMode::kSparse : succinct::BitMode::kPlain;
    const auto bits = random_bits(state.range(0), state.range(1) ? 0.05 : 0.5, mode);
    const auto pos = random_positions(4096, bits.size());
    std::size_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(bits.rank1(pos[i++ & 4095]));
}
BENCHMARK(BM_Rank1)->ArgsProduct({{1 << 16, 1 << 22}, {0, 1}});

void BM_Select1(benchmark::State &state) {
    const auto mode = state.range(1) ? succinct::BitMode::kSparse : succinct::BitMode::kPlain;
    const auto bits = random_bits(state.range(0), state.range(1) ? 0.05 : 0.5, mode);
    const auto pos = random_positions(4096, bits.count_ones());
    std::size_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(bits.select1(pos[i++ & 4095]));
}
BENCHMARK(BM_Select1)->ArgsProduct({{1 << 16, 1 << 22}, {0, 1}});

// vo_forward from every leaf along its first out-symbol
void BM_VoForward(benchmark::State &state) {
    const auto &index = genome_index(state.range(0));
    std::vector<std::pair<vo::NodeRange, Base>> steps;
    for (std::uint64_t v = 1; v <= index.num_nodes(); ++v) {
        const auto range = index.leaf_range(v);
        const auto out = index.out_symbols(range);
        if (!out.symbols.empty())
            steps.emplace_back(range, out.symbols.front());
    }
    std::size_t i = 0;
    for (auto _ : state) {
        const auto &[range, symbol] = steps[i++ % steps.size()];
        benchmark::DoNotOptimize(index.vo_forward(range, symbol));
    }
}
BENCHMARK(BM_VoForward)->Arg(20000)->Arg(200000);

void BM_Shorter(benchmark::State &state) {
    const auto &index = genome_index(state.range(0));
    const auto leaves = random_positions(4096, index.num_nodes());
    std::size_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(index.shorter(index.leaf_range(leaves[i++ & 4095])));
}
BENCHMARK(BM_Shorter)->Arg(20000)->Arg(200000);

void BM_Build(benchmark::State &state) {
    sim::SampleOptions options;
    options.coverage = 10.0;
    const auto reads = sim::sample_reads(sim::random_genome(state.range(0), 2), options);
    for (auto _ : state)
        benchmark::DoNotOptimize(vo::HoBossIndex::build(ingest::ReadSet{reads, {}}, 11, 10));
}
BENCHMARK(BM_Build)->Arg(20000)->Unit(benchmark::kMillisecond);

void BM_AssembleLink(benchmark::State &state) {
    const auto &index = genome_index(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(assembly::assemble_all(index));
    state.counters["nodes"] = static_cast<double>(index.num_nodes());
}
BENCHMARK(BM_AssembleLink)->Arg(20000)->Arg(200000)->Unit(benchmark::kMillisecond);

void BM_AssembleCycleOnly(benchmark::State &state) {
    const auto &index = genome_index(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(assembly::assemble_cycle_only(index, static_cast<unsigned>(state.range(1))));
}
BENCHMARK(BM_AssembleCycleOnly)->Args({200000, 1})->Args({200000, 4})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
