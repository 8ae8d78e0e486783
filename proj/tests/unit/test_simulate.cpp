#include "doctest.h"
#include "hoboss/error.hpp"
#include "hoboss/sim/simulate.hpp"

using namespace hoboss::sim;

TEST_CASE("reads are exact substrings and the count follows coverage") {
    const auto genome = random_genome(10000, 3);
    CHECK(genome.find_first_not_of("ACGT") == std::string::npos);
    SampleOptions opt;
    opt.coverage = 10;
    opt.read_len = 150;
    const auto reads = sample_reads(genome, opt);
    CHECK(reads.size() == 667);
    for (const auto &r : reads) {
        CHECK(r.size() == 150);
        CHECK(genome.find(r) != std::string::npos);
    }
    CHECK(sample_reads(genome, opt) == reads);
}

TEST_CASE("circular sampling wraps around") {
    const std::string genome = "ACGTTGCA";
    SampleOptions opt;
    opt.coverage = 50;
    opt.read_len = 5;
    opt.circular = true;
    const std::string doubled = genome + genome;
    bool wrapped = false;
    for (const auto &r : sample_reads(genome, opt)) {
        CHECK(doubled.find(r) != std::string::npos);
        wrapped = wrapped || genome.find(r) == std::string::npos;
    }
    CHECK(wrapped);
}

TEST_CASE("sampling rejects bad parameters") {
    SampleOptions opt;
    opt.read_len = 200;
    CHECK_THROWS_AS(sample_reads("ACGT", opt), hoboss::ConfigError);
    opt.read_len = 2;
    opt.coverage = 0;
    CHECK_THROWS_AS(sample_reads("ACGT", opt), hoboss::ConfigError);
}

TEST_CASE("small instances respect their limits") {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const auto inst = random_small_instance(seed);
        CHECK(inst.order >= 3);
        CHECK(inst.order <= 8);
        CHECK(inst.min_order >= 1);
        CHECK(inst.min_order <= 3);
        CHECK(!inst.reads.empty());
        CHECK(inst.reads.size() <= 20);
        for (const auto &r : inst.reads)
            CHECK(r.size() <= 50);
    }
}
