#include "hoboss/boss/boss_index.hpp"

#include <algorithm>

#include "hoboss/error.hpp"

namespace hoboss::boss {

BossIndex::BossIndex(unsigned order, succinct::BitSeq last, succinct::BitSeq non_dollar,
                     succinct::WaveletSeq reduced, Counts counts)
      : order_(order),
        last_(std::move(last)),
        non_dollar_(std::move(non_dollar)),
        reduced_(std::move(reduced)),
        counts_(counts) {
    if (order_ < 2)
        throw InvariantViolation("BOSS: order must be at least 2");
    if (non_dollar_.size() != last_.size())
        throw InvariantViolation("BOSS: B and BE lengths differ");
    if (reduced_.size() != non_dollar_.count_ones())
        throw InvariantViolation("BOSS: E' length differs from the number of non-$ edges");
    if (counts_[0] != 0 || !std::is_sorted(counts_.begin(), counts_.end()) || counts_.back() > num_nodes())
        throw InvariantViolation("BOSS: C array is not a valid cumulative count");
    if (last_.size() > 0 && !last_.access(last_.size()))
        throw InvariantViolation("BOSS: last row does not terminate a node");
}

BossIndex BossIndex::build(const ingest::EdgeTable &table) {
    auto arrays = ingest::build_boss_arrays(table);
    return BossIndex(table.order, std::move(arrays.last), std::move(arrays.non_dollar), std::move(arrays.reduced),
                     arrays.counts);
}

BossIndex BossIndex::build(const ingest::ReadSet &reads, unsigned order) {
    return build(ingest::extract_kmers(reads, order));
}

void BossIndex::check_node(std::uint64_t v, const char *op) const {
    if (v == 0 || v > num_nodes())
        throw RangeError(std::string("BOSS::") + op + ": node " + std::to_string(v) + " outside [1, " +
                         std::to_string(num_nodes()) + "]");
}

void BossIndex::check_row(std::uint64_t row, const char *op) const {
    if (row == 0 || row > num_edges())
        throw RangeError(std::string("BOSS::") + op + ": row " + std::to_string(row) + " outside [1, " +
                         std::to_string(num_edges()) + "]");
}

EdgeSymbol BossIndex::e_access(std::uint64_t row) const {
    check_row(row, "e_access");
    if (!non_dollar_.access(row))
        return EdgeSymbol{Base::kDollar, false};
    return EdgeSymbol::from_code(reduced_.access(non_dollar_.rank1(row)));
}

std::uint64_t BossIndex::e_rank(EdgeSymbol symbol, std::uint64_t row) const {
    if (symbol.base == Base::kDollar)
        return non_dollar_.rank0(row);
    return reduced_.rank(symbol.code(), non_dollar_.rank1(row));
}

std::uint64_t BossIndex::e_select(EdgeSymbol symbol, std::uint64_t j) const {
    if (symbol.base == Base::kDollar)
        return non_dollar_.select0(j);
    return non_dollar_.select1(reduced_.select(symbol.code(), j));
}

std::pair<std::uint64_t, std::uint64_t> BossIndex::node_rows(std::uint64_t v) const {
    check_node(v, "node_rows");
    const std::uint64_t first = v == 1 ? 1 : last_.select1(v - 1) + 1;
    return {first, last_.select1(v)};
}

std::uint64_t BossIndex::row_node(std::uint64_t row) const {
    check_row(row, "row_node");
    return last_.rank1(row - 1) + 1;
}

std::uint64_t BossIndex::outdegree(std::uint64_t v) const {
    const auto [first, last] = node_rows(v);
    return last - first + 1;
}

std::uint64_t BossIndex::outdegree_non_dollar(std::uint64_t v) const {
    const auto [first, last] = node_rows(v);
    return non_dollar_.rank1(last) - non_dollar_.rank1(first - 1);
}

std::uint64_t BossIndex::forward(std::uint64_t v, Base symbol) const {
    if (symbol == Base::kDollar)
        throw ArgumentError("BOSS::forward: $-edges have no target node");
    const auto [first, last] = node_rows(v);
    const EdgeSymbol plain{symbol, false}, flagged{symbol, true};
    const bool has_plain = e_rank(plain, last) > e_rank(plain, first - 1);
    const bool has_flagged = e_rank(flagged, last) > e_rank(flagged, first - 1);
    if (!has_plain && !has_flagged)
        throw NotFound("BOSS::forward: node " + std::to_string(v) + " has no edge labelled " +
                       std::string(1, base_char(symbol)));
    // a flagged edge shares its target with the preceding unflagged one
    return counts_[base_index(symbol)] + e_rank(plain, last);
}

Base BossIndex::last_char(std::uint64_t v) const {
    check_node(v, "last_char");
    std::size_t a = kBaseCount - 1;
    while (counts_[a] >= v)
        --a;
    return static_cast<Base>(a);
}

std::pair<std::uint64_t, std::uint64_t> BossIndex::in_edge_rows(std::uint64_t v, Base c) const {
    const EdgeSymbol plain{c, false};
    const std::uint64_t j = v - counts_[base_index(c)];
    const std::uint64_t row = e_select(plain, j);
    const std::uint64_t total = e_rank(plain, num_edges());
    const std::uint64_t end = j < total ? e_select(plain, j + 1) : num_edges() + 1;
    return {row, end};
}

std::uint64_t BossIndex::indegree(std::uint64_t v) const {
    const Base c = last_char(v);
    if (c == Base::kDollar)
        return 0;
    const auto [row, end] = in_edge_rows(v, c);
    const EdgeSymbol flagged{c, true};
    return 1 + e_rank(flagged, end - 1) - e_rank(flagged, row);
}

std::vector<std::uint64_t> BossIndex::backward(std::uint64_t v) const {
    const Base c = last_char(v);
    std::vector<std::uint64_t> sources;
    if (c == Base::kDollar)
        return sources;
    const auto [row, end] = in_edge_rows(v, c);
    sources.push_back(row_node(row));
    const EdgeSymbol flagged{c, true};
    const std::uint64_t before = e_rank(flagged, row);
    const std::uint64_t n_flagged = e_rank(flagged, end - 1) - before;
    for (std::uint64_t k = 1; k <= n_flagged; ++k)
        sources.push_back(row_node(e_select(flagged, before + k)));
    return sources;
}

std::string BossIndex::label(std::uint64_t v) const {
    check_node(v, "label");
    std::string reversed;
    std::uint64_t current = v;
    while (reversed.size() < order_) {
        const Base c = last_char(current);
        if (c == Base::kDollar)
            break;
        reversed.push_back(base_char(c));
        if (reversed.size() == order_)
            break;
        current = row_node(in_edge_rows(current, c).first);
    }
    reversed.resize(order_, '$');
    return std::string(reversed.rbegin(), reversed.rend());
}

std::vector<bool> BossIndex::dummy_nodes() const {
    std::vector<bool> dummy(num_nodes() + 1, false);
    if (num_nodes() == 0)
        return dummy;
    // node 1 is $^K; after j < K forward steps the label still starts with $
    std::vector<std::uint64_t> frontier{1}, next;
    dummy[1] = true;
    for (unsigned depth = 1; depth < order_; ++depth) {
        next.clear();
        for (std::uint64_t v : frontier) {
            const auto [first, last] = node_rows(v);
            for (std::uint64_t row = first; row <= last; ++row) {
                const EdgeSymbol e = e_access(row);
                if (e.base == Base::kDollar)
                    continue;
                const std::uint64_t w = forward(v, e.base);
                if (!dummy[w]) {
                    dummy[w] = true;
                    next.push_back(w);
                }
            }
        }
        frontier.swap(next);
    }
    return dummy;
}

bool operator==(const BossIndex &a, const BossIndex &b) {
    return a.order_ == b.order_ && a.counts_ == b.counts_ && a.last_ == b.last_ && a.non_dollar_ == b.non_dollar_ &&
           a.reduced_ == b.reduced_;
}

}  // namespace hoboss::boss
