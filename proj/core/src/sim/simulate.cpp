#include "hoboss/sim/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>

#include "hoboss/error.hpp"

namespace hoboss::sim {

std::string random_genome(std::uint64_t length, std::uint64_t seed) {
    static constexpr char kBases[] = "ACGT";
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, 3);
    std::string genome(length, 'A');
    for (auto &c : genome)
        c = kBases[pick(rng)];
    return genome;
}

std::vector<std::string> sample_reads(const std::string &genome, const SampleOptions &options) {
    const std::uint64_t g = genome.size();
    if (options.read_len == 0)
        throw ConfigError("read length must be positive");
    if (!(options.coverage > 0))
        throw ConfigError("coverage must be positive");
    if (options.read_len > g)
        throw ConfigError("read length " + std::to_string(options.read_len) + " exceeds genome length " +
                          std::to_string(g));
    const auto n_reads =
          static_cast<std::uint64_t>(std::llround(options.coverage * static_cast<double>(g) / options.read_len));
    const std::uint64_t last_start = options.circular ? g - 1 : g - options.read_len;

    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::uint64_t> start(0, last_start);
    const std::string doubled = options.circular ? genome + genome : std::string();
    const std::string &source = options.circular ? doubled : genome;

    std::vector<std::string> reads;
    reads.reserve(n_reads);
    for (std::uint64_t i = 0; i < n_reads; ++i)
        reads.push_back(source.substr(start(rng), options.read_len));
    return reads;
}

SmallInstance random_small_instance(std::uint64_t seed, const SmallInstanceLimits &limits) {
    std::mt19937_64 rng(seed);
    auto uniform = [&](std::uint64_t lo, std::uint64_t hi) {
        return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
    };
    SmallInstance inst;
    inst.order = static_cast<unsigned>(uniform(limits.min_k, limits.max_k));
    inst.min_order = static_cast<unsigned>(uniform(1, std::min(limits.max_m, inst.order)));
    const std::size_t n_reads = uniform(1, limits.max_reads);
    const bool from_genome = seed % 2 == 0;
    const std::string genome = from_genome ? random_genome(uniform(limits.max_len, 3 * limits.max_len), rng()) : "";
    for (std::size_t i = 0; i < n_reads; ++i) {
        const std::size_t len = uniform(1, limits.max_len);
        if (from_genome)
            inst.reads.push_back(genome.substr(uniform(0, genome.size() - len), len));
        else
            inst.reads.push_back(random_genome(len, rng()));
    }
    return inst;
}

void write_fasta(std::ostream &out, const std::vector<std::string> &sequences, const std::string &prefix) {
    for (std::size_t i = 0; i < sequences.size(); ++i)
        out << '>' << prefix << i << '\n' << sequences[i] << '\n';
}

}  // namespace hoboss::sim
