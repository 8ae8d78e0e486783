#include "doctest.h"
#include "hoboss/boss/boss_index.hpp"
#include "hoboss/error.hpp"
#include "hoboss/oracle/naive_graph.hpp"
#include "hoboss/sim/simulate.hpp"

using namespace hoboss;
using boss::BossIndex;

namespace {
ingest::ReadSet reads_of(std::vector<std::string> r) { return ingest::ReadSet{std::move(r), {"test"}}; }
}  // namespace

TEST_CASE("tiny BOSS navigation") {
    const auto ix = BossIndex::build(reads_of({"TACGT"}), 3);
    REQUIRE(ix.num_nodes() == 6);
    CHECK(ix.num_edges() == 6);
    CHECK(ix.e_access(1) == EdgeSymbol{Base::kT, false});
    CHECK(ix.e_access(6) == EdgeSymbol{Base::kDollar, false});
    CHECK(ix.forward(3, Base::kG) == 4);  // TAC -> ACG
    CHECK(ix.forward(1, Base::kT) == 5);  // $$$ -> $$T
    CHECK_THROWS_AS(ix.forward(3, Base::kA), NotFound);
    CHECK_THROWS_AS(ix.forward(0, Base::kA), RangeError);
    CHECK(ix.backward(4) == std::vector<std::uint64_t>{3});
    CHECK(ix.indegree(1) == 0);
    CHECK(ix.outdegree(6) == 1);
    CHECK(ix.outdegree_non_dollar(6) == 0);
    CHECK(ix.label(4) == "ACG");
    CHECK(ix.label(2) == "$TA");
    CHECK(ix.last_char(6) == Base::kT);
    const auto dummy = ix.dummy_nodes();
    CHECK(dummy == std::vector<bool>{false, true, true, false, false, true, false});
}

TEST_CASE("flagged edges count toward indegree") {
    // ACG and CCG share the out-edge label T into CGT
    const auto ix = BossIndex::build(reads_of({"ACGT", "CCGT"}), 3);
    const oracle::NaiveGraph g({"ACGT", "CCGT"}, 3, 1);
    const auto v = g.node_rank("CGT");
    CHECK(ix.indegree(v) == 2);
    CHECK(ix.backward(v).size() == 2);
    CHECK(ix.forward(g.node_rank("ACG"), Base::kT) == v);
    CHECK(ix.forward(g.node_rank("CCG"), Base::kT) == v);
}

TEST_CASE("e_rank and e_select are inverse") {
    const auto ix = BossIndex::build(reads_of({"ACGTTGCA", "CCGTAGG", "TTTT"}), 4);
    for (std::uint64_t row = 1; row <= ix.num_edges(); ++row) {
        const auto e = ix.e_access(row);
        CHECK(ix.e_select(e, ix.e_rank(e, row)) == row);
    }
}

TEST_CASE("BOSS degrees, backward and labels match the oracle") {
    for (std::uint64_t seed = 1; seed <= 80; ++seed) {
        const auto inst = sim::random_small_instance(seed);
        const auto ix = BossIndex::build(reads_of(inst.reads), inst.order);
        const oracle::NaiveGraph g(inst.reads, inst.order, inst.min_order);
        const auto &nodes = g.nodes();
        REQUIRE(ix.num_nodes() == nodes.size());
        const auto dummy = ix.dummy_nodes();
        for (std::uint64_t v = 1; v <= nodes.size(); ++v) {
            const auto &kmer = nodes[v - 1];
            CHECK(ix.label(v) == kmer);
            CHECK(ix.outdegree(v) == g.outdegree(kmer));
            CHECK(ix.indegree(v) == g.indegree(kmer));
            CHECK(dummy[v] == (kmer.find('$') != std::string::npos));
            std::vector<std::uint64_t> want;
            for (const auto &p : g.backward(kmer))
                want.push_back(g.node_rank(p));
            auto got = ix.backward(v);
            std::sort(got.begin(), got.end());
            CHECK(got == want);
        }
    }
}
