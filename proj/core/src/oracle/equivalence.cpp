#include "hoboss/oracle/equivalence.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace hoboss::oracle {

namespace {

constexpr std::size_t kMaxMessages = 8;

struct Checker {
    EquivalenceReport report;

    void expect(bool ok, const std::string &what) {
        ++report.checks;
        if (ok)
            return;
        ++report.failures;
        if (report.messages.size() < kMaxMessages)
            report.messages.push_back(what);
    }
};

std::string show(vo::NodeRange r) { return "[" + std::to_string(r.lo) + "," + std::to_string(r.hi) + "]"; }

NaiveOut summarize(const vo::OutSymbols &out) {
    NaiveOut n;
    n.kind = out.kind == vo::OutKind::kDollarOnly ? 'D' : out.kind == vo::OutKind::kUnique ? 'U' : 'B';
    for (Base b : out.symbols)
        n.symbols.push_back(base_char(b));
    return n;
}

}  // namespace

void EquivalenceReport::merge(const EquivalenceReport &other) {
    checks += other.checks;
    failures += other.failures;
    for (const auto &m : other.messages)
        if (messages.size() < kMaxMessages)
            messages.push_back(m);
}

EquivalenceReport check_equivalence(const vo::HoBossIndex &index, const NaiveGraph &graph) {
    Checker c;
    const auto &boss = index.boss();
    const auto &nodes = graph.nodes();
    c.expect(boss.num_nodes() == nodes.size(), "node count " + std::to_string(boss.num_nodes()) + " vs oracle " +
                                                   std::to_string(nodes.size()));
    if (boss.num_nodes() != nodes.size())
        return c.report;

    for (std::uint64_t v = 1; v <= nodes.size(); ++v) {
        const std::string &kmer = nodes[v - 1];
        c.expect(boss.label(v) == kmer, "label of node " + std::to_string(v) + " is " + boss.label(v) + ", oracle " + kmer);
        c.expect(boss.outdegree(v) == graph.outdegree(kmer), "outdegree of " + kmer);
        c.expect(boss.outdegree_non_dollar(v) == graph.outdegree_non_dollar(kmer), "non-$ outdegree of " + kmer);
        c.expect(boss.indegree(v) == graph.indegree(kmer), "indegree of " + kmer + ": " +
                                                               std::to_string(boss.indegree(v)) + " vs oracle " +
                                                               std::to_string(graph.indegree(kmer)));
        std::multiset<std::uint64_t> got, want;
        for (std::uint64_t u : boss.backward(v))
            got.insert(u);
        for (const auto &p : graph.backward(kmer))
            want.insert(graph.node_rank(p));
        c.expect(got == want, "backward of " + kmer);
    }

    // node of F for every trie context, matched through its span
    std::map<std::string, vo::NodeRange> range_of;
    for (const auto &context : graph.trie_nodes()) {
        const auto [lo, hi] = context.empty() ? std::pair<std::uint64_t, std::uint64_t>{1, nodes.size()}
                                              : graph.span(context);
        const vo::NodeRange r{lo, hi};
        range_of[context] = r;
        const auto back = index.id2range(index.range2id(r));
        c.expect(back == r, "context '" + context + "' span " + show(r) + " is not a node of F (lca gives " +
                                show(back) + ")");
    }
    c.expect(range_of.size() == index.topology().node_count(),
             "F has " + std::to_string(index.topology().node_count()) + " nodes, oracle trie " +
                   std::to_string(range_of.size()));

    for (const auto &[context, r] : range_of) {
        const NaiveOut want = graph.out_symbols(context);
        c.expect(summarize(index.out_symbols(r)) == want, "out_symbols of '" + context + "'");

        const auto naive_parent = graph.naive_shorter(context);
        const auto parent = index.shorter(r);
        if (naive_parent)
            c.expect(parent && *parent == range_of.at(*naive_parent),
                     "shorter of '" + context + "' should be '" + *naive_parent + "'");
        else
            c.expect(!parent, "shorter of '" + context + "' should reach the minimum order");

        for (Base a : kNucleotides) {
            const char ch = base_char(a);
            std::string naive_next;
            bool naive_found = true;
            try {
                naive_next = graph.naive_vo_forward(context, ch);
            } catch (const std::out_of_range &) {
                naive_found = false;
            }
            if (!naive_found) {
                bool threw = false;
                try {
                    (void)index.vo_forward(r, a);
                } catch (const std::exception &) {
                    threw = true;
                }
                c.expect(threw, "vo_forward('" + context + "', " + ch + ") should report a missing edge");
                continue;
            }
            const auto want_range = naive_next.empty() ? index.root_range() : range_of.at(naive_next);
            vo::NodeRange got{};
            try {
                got = index.vo_forward(r, a);
            } catch (const std::exception &e) {
                c.expect(false, "vo_forward('" + context + "', " + ch + ") threw: " + e.what());
                continue;
            }
            c.expect(got == want_range, "vo_forward('" + context + "', " + ch + ") = " + show(got) + ", oracle '" +
                                            naive_next + "' " + show(want_range));
        }
    }
    return c.report;
}

}  // namespace hoboss::oracle
