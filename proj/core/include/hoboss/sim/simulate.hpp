#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hoboss::sim {

struct SampleOptions {
    double coverage = 10.0;
    std::uint32_t read_len = 150;
    std::uint64_t seed = 1;
    bool circular = false;  // reads may wrap around the genome end
};

// Uniform random sequence over {A,C,G,T}.
std::string random_genome(std::uint64_t length, std::uint64_t seed);

// Error-free reads at uniform start positions; round(coverage * G / L) reads.
std::vector<std::string> sample_reads(const std::string &genome, const SampleOptions &options);

struct SmallInstance {
    std::vector<std::string> reads;
    unsigned order = 3;
    unsigned min_order = 1;
};

struct SmallInstanceLimits {
    std::size_t max_reads = 20;
    std::size_t max_len = 50;
    unsigned min_k = 3, max_k = 8;
    unsigned max_m = 3;
};

// Seeded small read set for oracle cross-checks. Odd seeds draw independent
// random reads; even seeds draw substrings of one short genome, so that K-mers
// repeat and the graph branches and merges.
SmallInstance random_small_instance(std::uint64_t seed, const SmallInstanceLimits &limits = {});

void write_fasta(std::ostream &out, const std::vector<std::string> &sequences, const std::string &prefix);

}  // namespace hoboss::sim
