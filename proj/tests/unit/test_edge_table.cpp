#include <algorithm>

#include "doctest.h"
#include "hoboss/error.hpp"
#include "hoboss/ingest/edge_table.hpp"
#include "hoboss/oracle/naive_graph.hpp"
#include "hoboss/sim/simulate.hpp"

using namespace hoboss;
using namespace hoboss::ingest;

namespace {
ReadSet reads_of(std::vector<std::string> r) { return ReadSet{std::move(r), {"test"}}; }

std::string column_string(const std::vector<EdgeSymbol> &column) {
    std::string s;
    for (const auto &e : column)
        s += e.to_string();
    return s;
}
}  // namespace

TEST_CASE("tiny fixture rows in colex order") {
    const auto table = extract_kmers(reads_of({"TACGT"}), 3);
    std::vector<std::string> kmers;
    for (std::size_t i = 0; i < table.rows.size(); ++i)
        kmers.emplace_back(table.kmer(i));
    CHECK(kmers == std::vector<std::string>{"$$$", "$TA", "TAC", "ACG", "$$T", "CGT"});
    CHECK(column_string(edge_column(table)) == "TCGTA$");
}

TEST_CASE("tiny fixture BOSS arrays") {
    const auto arrays = build_boss_arrays(extract_kmers(reads_of({"TACGT"}), 3));
    CHECK(arrays.last.size() == 6);
    CHECK(arrays.last.count_ones() == 6);
    CHECK(arrays.non_dollar == succinct::BitSeq::from_string("111110"));
    CHECK(arrays.reduced.size() == 5);
    CHECK(arrays.counts == std::array<std::uint64_t, 5>{0, 1, 2, 3, 4});
}

TEST_CASE("flags mark repeated labels within a same-suffix run") {
    const auto table = extract_kmers(reads_of({"ACGT", "CCGT"}), 3);
    const auto column = edge_column(table);
    // ACG and CCG both end in CG and both have out-edge T: the second is flagged
    int flagged_t = 0;
    for (std::size_t i = 0; i < column.size(); ++i)
        if (column[i].base == Base::kT && column[i].flagged)
            ++flagged_t;
    CHECK(flagged_t == 1);
}

TEST_CASE("LCS array of the tiny fixture") {
    const auto lcs = build_lcs(extract_kmers(reads_of({"TACGT"}), 3));
    CHECK(lcs.values == std::vector<std::uint32_t>{0, 0, 0, 0, 0, 0, 1});
    CHECK(lcs.node_count() == 6);
}

TEST_CASE("extract_kmers validates arguments") {
    CHECK_THROWS_AS(extract_kmers(reads_of({"ACGT"}), 1), ConfigError);
    CHECK_THROWS_AS(extract_kmers(reads_of({"ACGT"}), 65), ConfigError);
    CHECK_THROWS_AS(extract_kmers(reads_of({}), 3), ArgumentError);
    CHECK_THROWS_AS(extract_kmers(reads_of({"ACNT"}), 3), ArgumentError);
}

TEST_CASE("edge_column rejects unsorted tables") {
    auto table = extract_kmers(reads_of({"TACGT"}), 3);
    std::swap(table.rows[1], table.rows[2]);
    CHECK_THROWS_AS(edge_column(table), InvariantViolation);
}

TEST_CASE("rows and LCS match the oracle on random instances") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const auto inst = sim::random_small_instance(seed);
        const auto table = extract_kmers(reads_of(inst.reads), inst.order);
        const oracle::NaiveGraph g(inst.reads, inst.order, inst.min_order);
        const auto rows = g.rows();
        REQUIRE(rows.size() == table.rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            CHECK(table.kmer(i) == rows[i].first);
            CHECK(table.edge(i) == rows[i].second);
        }
        const auto lcs = build_lcs(table);
        const auto &nodes = g.nodes();
        for (std::size_t v = 2; v <= nodes.size(); ++v) {
            const auto &a = nodes[v - 2], &b = nodes[v - 1];
            std::uint32_t common = 0;
            while (common < a.size() && a[a.size() - 1 - common] == b[b.size() - 1 - common])
                ++common;
            CHECK(lcs.values[v] == common);
        }
    }
}
