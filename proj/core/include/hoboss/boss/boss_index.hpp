#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hoboss/alphabet.hpp"
#include "hoboss/ingest/edge_table.hpp"
#include "hoboss/succinct/bit_seq.hpp"
#include "hoboss/succinct/wavelet_seq.hpp"

namespace hoboss::boss {

/**
 * Static order-K BOSS de Bruijn graph.
 *
 * Nodes are the distinct K-mers, numbered 1..num_nodes() in colex order;
 * rows (edges) are numbered 1..num_edges(). The edge column E is kept as the
 * bitvector BE (E[i] != $) plus the reduced sequence E' of non-$ symbols.
 */
class BossIndex {
  public:
    using Counts = std::array<std::uint64_t, kBaseCount>;

    BossIndex() = default;
    BossIndex(unsigned order, succinct::BitSeq last, succinct::BitSeq non_dollar,
              succinct::WaveletSeq reduced, Counts counts);

    static BossIndex build(const ingest::EdgeTable &table);
    static BossIndex build(const ingest::ReadSet &reads, unsigned order);

    unsigned order() const noexcept { return order_; }
    std::uint64_t num_nodes() const noexcept { return last_.count_ones(); }
    std::uint64_t num_edges() const noexcept { return last_.size(); }

    const succinct::BitSeq &last() const noexcept { return last_; }
    const succinct::BitSeq &non_dollar() const noexcept { return non_dollar_; }
    const succinct::WaveletSeq &reduced() const noexcept { return reduced_; }
    const Counts &counts() const noexcept { return counts_; }

    // virtual E column
    EdgeSymbol e_access(std::uint64_t row) const;
    std::uint64_t e_rank(EdgeSymbol symbol, std::uint64_t row) const;
    std::uint64_t e_select(EdgeSymbol symbol, std::uint64_t j) const;

    // [first, last] rows of node v
    std::pair<std::uint64_t, std::uint64_t> node_rows(std::uint64_t v) const;
    std::uint64_t row_node(std::uint64_t row) const;

    std::uint64_t outdegree(std::uint64_t v) const;
    std::uint64_t outdegree_non_dollar(std::uint64_t v) const;
    std::uint64_t forward(std::uint64_t v, Base symbol) const;
    std::uint64_t indegree(std::uint64_t v) const;
    std::vector<std::uint64_t> backward(std::uint64_t v) const;

    Base last_char(std::uint64_t v) const;
    std::string label(std::uint64_t v) const;

    // true for nodes whose K-mer contains '$'; computed by a breadth-first walk
    // of depth K-1 from the all-$ node.
    std::vector<bool> dummy_nodes() const;

    friend bool operator==(const BossIndex &a, const BossIndex &b);

  private:
    void check_node(std::uint64_t v, const char *op) const;
    void check_row(std::uint64_t row, const char *op) const;
    // row of the unflagged in-edge of v and the row one past its flagged copies
    std::pair<std::uint64_t, std::uint64_t> in_edge_rows(std::uint64_t v, Base c) const;

    unsigned order_ = 0;
    succinct::BitSeq last_;
    succinct::BitSeq non_dollar_;
    succinct::WaveletSeq reduced_;
    Counts counts_{};
};

}  // namespace hoboss::boss
