#include <algorithm>
#include <set>
#include <sstream>

#include "doctest.h"
#include "hoboss/assembly/fasta.hpp"
#include "hoboss/assembly/omnitigs.hpp"
#include "hoboss/assembly/unitigs.hpp"
#include "hoboss/oracle/naive_graph.hpp"
#include "hoboss/sim/simulate.hpp"

using namespace hoboss;
using namespace hoboss::assembly;

namespace {
ingest::ReadSet reads_of(std::vector<std::string> r) { return ingest::ReadSet{std::move(r), {"test"}}; }

std::vector<std::string> labels(const boss::BossIndex &ix, const StarterSet &set) {
    std::vector<std::string> out;
    for (auto v : set.starters)
        out.push_back(ix.label(v));
    return out;
}

std::vector<std::string> all_strings(const OmnitigStore &store) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < store.size(); ++i)
        out.push_back(store.materialize(i));
    return out;
}
}  // namespace

TEST_CASE("starters of the branching fixture") {
    const auto ix = boss::BossIndex::build(reads_of({"TACGT", "TACGA"}), 3);
    CHECK(labels(ix, find_starters(ix)) == std::vector<std::string>{"CGA", "TAC", "CGT"});
}

TEST_CASE("a chain starts only at its first K-mer") {
    const auto ix = vo::HoBossIndex::build(reads_of({"TACGT"}), 3, 3);
    CHECK(labels(ix.boss(), find_starters(ix.boss())) == std::vector<std::string>{"TAC"});
    const auto store = assemble_all(ix);
    REQUIRE(store.size() == 1);
    CHECK(store.materialize(0) == "TACGT");
}

TEST_CASE("starters match the oracle and never branch") {
    for (std::uint64_t seed = 1; seed <= 80; ++seed) {
        const auto inst = sim::random_small_instance(seed);
        const auto ix = boss::BossIndex::build(reads_of(inst.reads), inst.order);
        const oracle::NaiveGraph g(inst.reads, inst.order, inst.min_order);
        const auto set = find_starters(ix);
        CHECK(labels(ix, set) == g.starters());
        for (auto v : set.starters)
            CHECK(ix.outdegree_non_dollar(v) <= 1);
    }
}

TEST_CASE("path-merging marks") {
    const auto ix = vo::HoBossIndex::build(reads_of({"TACG", "AACG"}), 3, 1);
    const oracle::NaiveGraph g({"TACG", "AACG"}, 3, 1);
    const auto pm = mark_pm_nodes(ix);
    const auto v = g.node_rank("ACG");
    CHECK(pm.access(ix.topology().preorder_rank(ix.topology().select_leaf(v))));

    const auto chain = vo::HoBossIndex::build(reads_of({"TACGTTCA"}), 3, 1);
    const auto chain_pm = mark_pm_nodes(chain);
    const auto dummy = chain.boss().dummy_nodes();
    for (std::uint64_t u = 1; u <= chain.num_nodes(); ++u)
        if (!dummy[u])
            CHECK_FALSE(chain_pm.access(chain.topology().preorder_rank(chain.topology().select_leaf(u))));
}

TEST_CASE("PM marks match the oracle on random instances") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const auto inst = sim::random_small_instance(seed);
        const auto ix = vo::HoBossIndex::build(reads_of(inst.reads), inst.order, inst.min_order);
        const oracle::NaiveGraph g(inst.reads, inst.order, inst.min_order);
        const auto pm = mark_pm_nodes(ix);
        std::uint64_t want = 0;
        for (const auto &context : g.trie_nodes())
            want += g.is_pm(context);
        CHECK(pm.count_ones() == want);
        CHECK(pm.size() == ix.topology().node_count());
    }
}

TEST_CASE("dollar-only starter extends after shortening") {
    const auto ix = vo::HoBossIndex::build(reads_of({"TACGT", "TACGA"}), 3, 1);
    const oracle::NaiveGraph g({"TACGT", "TACGA"}, 3, 1);
    OmnitigStore store(mark_pm_nodes(ix));
    VisitedSet visited(ix.topology().node_count());
    const auto id = extend_omnitig(ix, store, visited, g.node_rank("CGA"));
    CHECK(store.materialize(id) == g.naive_rm_walk("CGA").text);
    CHECK(store.materialize(id) == "CGACG");
    CHECK(store.omnitigs()[id].stop == StopReason::kBranching);
}

TEST_CASE("second traversal links into the shared suffix") {
    const std::vector<std::string> reads{"ACGTAGGCTTA", "ACGAAGGCTTA"};
    const auto ix = vo::HoBossIndex::build(reads_of(reads), 3, 3);
    const auto store = assemble_all(ix);
    REQUIRE(store.size() == 2);
    CHECK(store.materialize(0) == "CGAAGGCTTA");
    CHECK(store.materialize(1) == "CGTAGGCTTA");
    CHECK_FALSE(store.omnitigs()[0].linked());
    CHECK(store.omnitigs()[1].linked());
    CHECK(store.omnitigs()[1].appended == 3);
    const auto counts = count_assembly(store);
    CHECK(counts.traversed_nodes < counts.omnitig_nodes);
    CHECK(counts.pct_reduction > 0);
}

TEST_CASE("materialize follows links and guards cycles") {
    OmnitigStore store;
    const auto a = store.open(1, "TAC");
    store.append(a, Base::kG);
    store.append(a, Base::kT);
    CHECK(store.materialize(a) == "TACGT");

    const auto b = store.open(2, "$$A");
    store.append(b, Base::kC);
    store.append(b, Base::kA);
    // link the tail of b back to its first appended node
    store.link(b, store.omnitigs()[b].head + 1);
    const auto text = store.materialize(b);
    CHECK(text.substr(0, 3) == "ACA");
    CHECK(text.size() <= 5);
}

TEST_CASE("walks equal the naive policy walker") {
    for (std::uint64_t seed = 1; seed <= 120; ++seed) {
        const auto inst = sim::random_small_instance(seed);
        CAPTURE(seed);
        const auto ix = vo::HoBossIndex::build(reads_of(inst.reads), inst.order, inst.min_order);
        const oracle::NaiveGraph g(inst.reads, inst.order, inst.min_order);
        const auto link = assemble_all(ix);
        const auto cycle = assemble_cycle_only(ix);
        REQUIRE(link.size() == cycle.size());
        for (std::size_t i = 0; i < link.size(); ++i) {
            const auto walk = g.naive_rm_walk(ix.boss().label(link.omnitigs()[i].starter));
            if (walk.capped)
                continue;
            CHECK(link.materialize(i) == walk.text);
            CHECK(cycle.materialize(i) == walk.text);
        }
        const auto counts = count_assembly(link);
        CHECK(counts.traversed_nodes <= counts.omnitig_nodes);
        CHECK(count_assembly(cycle).pct_reduction == 0.0);
    }
}

TEST_CASE("omnitigs end at a branch, the minimum order, a link or a revisit") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const auto inst = sim::random_small_instance(seed);
        const auto ix = vo::HoBossIndex::build(reads_of(inst.reads), inst.order, inst.min_order);
        const auto store = assemble_all(ix);
        for (const auto &o : store.omnitigs()) {
            if (o.stop != StopReason::kBranching)
                continue;
            // replay to the final context and confirm it branches
            vo::NodeRange r = ix.leaf_range(o.starter);
            std::vector<Base> symbols;
            for (auto at = store.nodes()[o.head].next; at != kNullHandle; at = store.nodes()[at].next)
                symbols.push_back(store.nodes()[at].symbol);
            for (Base a : symbols) {
                while (ix.out_symbols(r).kind == vo::OutKind::kDollarOnly)
                    r = *ix.shorter(r);
                r = ix.vo_forward(r, a);
            }
            while (ix.out_symbols(r).kind == vo::OutKind::kDollarOnly)
                r = *ix.shorter(r);
            CHECK(ix.out_symbols(r).kind == vo::OutKind::kBranching);
        }
    }
}

TEST_CASE("assembly is deterministic and threads do not change cycle-only output") {
    const auto genome = sim::random_genome(3000, 5);
    sim::SampleOptions opt;
    opt.coverage = 10;
    opt.read_len = 120;
    const auto reads = sim::sample_reads(genome, opt);
    const auto ix = vo::HoBossIndex::build(reads_of(reads), 8, 6);
    std::ostringstream a, b;
    write_omnitigs_fasta(a, assemble_all(ix));
    write_omnitigs_fasta(b, assemble_all(ix));
    CHECK(a.str() == b.str());
    CHECK(all_strings(assemble_cycle_only(ix, 1)) == all_strings(assemble_cycle_only(ix, 4)));
}

TEST_CASE("circular genome terminates in both modes") {
    const auto genome = sim::random_genome(1000, 99);
    sim::SampleOptions opt;
    opt.coverage = 12;
    opt.read_len = 100;
    opt.circular = true;
    const auto reads = sim::sample_reads(genome, opt);
    const auto ix = vo::HoBossIndex::build(reads_of(reads), 7, 5);
    const auto link = assemble_all(ix);
    const auto cycle = assemble_cycle_only(ix);
    for (const auto &o : link.omnitigs())
        CHECK(o.appended <= 10 * ix.num_nodes());
    for (const auto &o : cycle.omnitigs())
        CHECK(o.appended <= 10 * ix.num_nodes());
}

TEST_CASE("unitigs") {
    const auto chain = boss::BossIndex::build(reads_of({"TACGTTCA"}), 3);
    CHECK(extract_unitigs(chain) == std::vector<std::string>{"TACGTTCA"});

    const auto branch = boss::BossIndex::build(reads_of({"TACGT", "TACGA"}), 3);
    auto u = extract_unitigs(branch);
    std::sort(u.begin(), u.end());
    CHECK(u == std::vector<std::string>{"CGA", "CGT", "TACG"});

    const auto cycle = boss::BossIndex::build(reads_of({"ACGTAACGT"}), 4);
    CHECK_FALSE(extract_unitigs(cycle).empty());
}

TEST_CASE("unitigs match the oracle") {
    for (std::uint64_t seed = 1; seed <= 80; ++seed) {
        const auto inst = sim::random_small_instance(seed);
        const auto ix = boss::BossIndex::build(reads_of(inst.reads), inst.order);
        const oracle::NaiveGraph g(inst.reads, inst.order, inst.min_order);
        auto got = extract_unitigs(ix), want = g.unitigs();
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        CHECK(got == want);
    }
}

TEST_CASE("FASTA headers") {
    const auto ix = vo::HoBossIndex::build(reads_of({"ACGTAGGCTTA", "ACGAAGGCTTA"}), 3, 3);
    std::ostringstream out;
    write_omnitigs_fasta(out, assemble_all(ix));
    CHECK(out.str() ==
          ">omni_0 start=CGA len=10 linked=0\nCGAAGGCTTA\n>omni_1 start=CGT len=10 linked=1\nCGTAGGCTTA\n");
    std::ostringstream uni;
    write_unitigs_fasta(uni, {"ACGT"});
    CHECK(uni.str() == ">uni_0 len=4\nACGT\n");
}
