#include <algorithm>
#include <set>

#include "doctest.h"
#include "hoboss/error.hpp"
#include "hoboss/oracle/equivalence.hpp"
#include "hoboss/sim/simulate.hpp"
#include "hoboss/succinct/counters.hpp"
#include "hoboss/vo/ho_boss.hpp"

using namespace hoboss;
using vo::HoBossIndex;
using vo::NodeRange;

namespace {
ingest::ReadSet reads_of(std::vector<std::string> r) { return ingest::ReadSet{std::move(r), {"test"}}; }

// Interval-tree reference for F: split [lo, hi] at every position holding the
// minimum LCS of the interval and recurse.
void reference_bp(const std::vector<std::uint32_t> &lcs, std::size_t lo, std::size_t hi, std::string &out) {
    if (lo == hi) {
        out += "()";
        return;
    }
    std::uint32_t depth = UINT32_MAX;
    for (std::size_t i = lo + 1; i <= hi; ++i)
        depth = std::min(depth, lcs[i]);
    out += '(';
    std::size_t start = lo;
    for (std::size_t i = lo + 1; i <= hi + 1; ++i)
        if (i == hi + 1 || lcs[i] == depth) {
            reference_bp(lcs, start, i - 1, out);
            start = i;
        }
    out += ')';
}

std::string reference_topology(const std::vector<std::uint32_t> &lcs, std::size_t n, unsigned m) {
    // the root is always emitted; its children are the top intervals
    std::string inner;
    std::size_t start = 1;
    for (std::size_t i = 2; i <= n + 1; ++i)
        if (i == n + 1 || lcs[i] < m) {
            reference_bp(lcs, start, i - 1, inner);
            start = i;
        }
    return "(" + inner + ")";
}
}  // namespace

TEST_CASE("topology of the tiny fixture") {
    const auto table = ingest::extract_kmers(reads_of({"TACGT"}), 3);
    const auto lcs = ingest::build_lcs(table);
    CHECK(vo::build_topology(lcs, 3, 1).to_string() == "(()()()()(()()))");
    CHECK(vo::build_topology(lcs, 3, 2).to_string() == "(()()()()()())");
    CHECK_THROWS_AS(vo::build_topology(lcs, 3, 4), ConfigError);
    CHECK_THROWS_AS(vo::build_topology(lcs, 3, 0), ConfigError);
}

TEST_CASE("all-zero LCS gives a star") {
    ingest::LcsArray lcs{{0, 0, 0, 0, 0}};
    CHECK(vo::build_topology(lcs, 3, 1).to_string() == "(()()()())");
}

TEST_CASE("topology matches a recursive interval split") {
    for (std::uint64_t seed = 1; seed <= 120; ++seed) {
        const auto inst = sim::random_small_instance(seed);
        const auto table = ingest::extract_kmers(reads_of(inst.reads), inst.order);
        const auto lcs = ingest::build_lcs(table);
        for (unsigned m = 1; m <= inst.order; ++m)
            CHECK(vo::build_topology(lcs, inst.order, m).to_string() ==
                  reference_topology(lcs.values, lcs.node_count(), m));
    }
}

TEST_CASE("tiny HO-BOSS navigation") {
    const auto ix = HoBossIndex::build(reads_of({"TACGT"}), 3, 1);
    const auto &f = ix.topology();
    CHECK(ix.id2range(f.root()) == NodeRange{1, 6});
    CHECK(ix.id2range(10) == NodeRange{5, 6});
    for (std::uint64_t j = 1; j <= 6; ++j) {
        CHECK(ix.id2range(f.select_leaf(j)) == NodeRange{j, j});
        CHECK(ix.range2id({j, j}) == f.select_leaf(j));
    }
    CHECK(ix.range2id({1, 6}) == f.root());
    CHECK(ix.shorter({5, 5}) == std::optional<NodeRange>(NodeRange{5, 6}));
    CHECK_FALSE(ix.shorter({5, 6}).has_value());
    CHECK_FALSE(ix.shorter({1, 6}).has_value());
    CHECK(ix.vo_forward({5, 6}, Base::kA) == NodeRange{2, 2});
    CHECK(ix.vo_forward({3, 3}, Base::kG) == NodeRange{4, 4});
    CHECK_THROWS_AS(ix.vo_forward({3, 3}, Base::kT), NotFound);
    CHECK_THROWS_AS(ix.vo_forward({0, 3}, Base::kT), RangeError);
    CHECK_THROWS_AS(ix.id2range(17), RangeError);
    CHECK_THROWS_AS(ix.id2range(3), ArgumentError);

    const auto out = ix.out_symbols({3, 3});
    CHECK(out.kind == vo::OutKind::kUnique);
    CHECK(out.unique() == Base::kG);
    CHECK(ix.out_symbols({6, 6}).kind == vo::OutKind::kDollarOnly);

    const std::vector<NodeRange> root_children{{1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 6}};
    CHECK(ix.children_ranges({1, 6}) == root_children);
    CHECK(ix.children_ranges({4, 4}).empty());
}

TEST_CASE("out_symbols reports branching") {
    const oracle::NaiveGraph g({"TACGT", "TACGA"}, 3, 1);
    const auto ix = HoBossIndex::build(reads_of({"TACGT", "TACGA"}), 3, 1);
    const auto v = g.node_rank("ACG");
    const auto out = ix.out_symbols({v, v});
    CHECK(out.kind == vo::OutKind::kBranching);
    CHECK(out.symbols == std::vector<Base>{Base::kA, Base::kT});
}

TEST_CASE("vo_forward from the root collects every node ending with the symbol") {
    const auto ix = HoBossIndex::build(reads_of({"TACGTTGCAAC", "GATTACA"}), 4, 1);
    const oracle::NaiveGraph g({"TACGTTGCAAC", "GATTACA"}, 4, 1);
    for (Base a : kNucleotides) {
        const auto want = g.naive_vo_forward("", base_char(a));
        const auto [lo, hi] = g.span(want);
        CHECK(ix.vo_forward(ix.root_range(), a) == NodeRange{lo, hi});
    }
}

TEST_CASE("structural invariants of F") {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const auto inst = sim::random_small_instance(seed);
        const auto ix = HoBossIndex::build(reads_of(inst.reads), inst.order, inst.min_order);
        const auto &f = ix.topology();
        const std::uint64_t n = ix.num_nodes();
        CHECK(f.leaf_count() == n);
        CHECK(f.size() <= 4 * n);
        for (std::uint64_t rank = 2; rank <= f.node_count(); ++rank) {
            const auto v = f.preorder_select(rank);
            const auto r = ix.id2range(v);
            CHECK(ix.range2id(r) == v);
            if (!f.is_leaf(v)) {
                CHECK(f.children(v) >= 2);
                const auto kids = ix.children_ranges(r);
                CHECK(kids.front().lo == r.lo);
                CHECK(kids.back().hi == r.hi);
                for (std::size_t i = 1; i < kids.size(); ++i)
                    CHECK(kids[i].lo == kids[i - 1].hi + 1);
            }
            // out-edges of a child are a subset of its parent's
            if (const auto parent = ix.shorter(r)) {
                const auto mine = ix.out_symbols(r).symbols, theirs = ix.out_symbols(*parent).symbols;
                CHECK(std::includes(theirs.begin(), theirs.end(), mine.begin(), mine.end()));
                CHECK(parent->size() > r.size());
            }
        }
    }
}

TEST_CASE("navigation uses a bounded number of primitive calls") {
    const auto genome = sim::random_genome(4000, 17);
    sim::SampleOptions opt;
    opt.coverage = 8;
    opt.read_len = 100;
    const auto reads = sim::sample_reads(genome, opt);
    const auto ix = HoBossIndex::build(reads_of(reads), 12, 6);
    std::uint64_t worst_forward = 0, worst_shorter = 0;
    for (std::uint64_t v = 1; v <= ix.num_nodes(); v += 7) {
        NodeRange r{v, v};
        const auto out = ix.out_symbols(r);
        if (out.kind == vo::OutKind::kDollarOnly)
            continue;
        {
            succinct::ScopedPrimitiveCount count;
            (void)ix.vo_forward(r, out.symbols.front());
            worst_forward = std::max(worst_forward, count.elapsed());
        }
        {
            succinct::ScopedPrimitiveCount count;
            (void)ix.shorter(r);
            worst_shorter = std::max(worst_shorter, count.elapsed());
        }
    }
    // fixed compositions of rank/select/excess searches, independent of n
    CHECK(worst_forward > 0);
    CHECK(worst_forward <= 60);
    CHECK(worst_shorter <= 30);
}

TEST_CASE("HO-BOSS answers match the oracle on random instances") {
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
        const auto inst = sim::random_small_instance(seed);
        CAPTURE(seed);
        const auto ix = HoBossIndex::build(reads_of(inst.reads), inst.order, inst.min_order);
        const oracle::NaiveGraph g(inst.reads, inst.order, inst.min_order);
        const auto report = oracle::check_equivalence(ix, g);
        for (const auto &m : report.messages)
            MESSAGE(m);
        CHECK(report.ok());
    }
}

TEST_CASE("shorter_until_new_edges skips ancestors with the same out-symbols") {
    const auto ix = HoBossIndex::build(reads_of({"AACGTACGG", "TTACGC"}), 5, 1);
    for (std::uint64_t v = 1; v <= ix.num_nodes(); ++v) {
        const NodeRange leaf{v, v};
        const auto start = ix.out_symbols(leaf);
        const auto found = ix.shorter_until_new_edges(leaf);
        auto r = ix.shorter(leaf);
        while (r && ix.out_symbols(*r).symbols == start.symbols && ix.out_symbols(*r).kind == start.kind)
            r = ix.shorter(*r);
        CHECK(found == r);
    }
}

TEST_CASE("build rejects m above K") {
    CHECK_THROWS_AS(HoBossIndex::build(reads_of({"ACGT"}), 3, 4), ConfigError);
}
