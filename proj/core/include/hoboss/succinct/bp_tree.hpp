#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hoboss/succinct/bit_seq.hpp"

namespace hoboss::succinct {

/**
 * Ordinal tree as a balanced-parentheses bitvector (1 = '(', 0 = ')').
 *
 * A node is identified by the 1-indexed position of its open parenthesis; the
 * root is position 1. Navigation reduces to forward/backward excess searches
 * answered with a range-min tree over per-word minimum excess values.
 */
class BpTree {
  public:
    BpTree() = default;
    explicit BpTree(BitSeq parens);

    static BpTree from_string(std::string_view parens);

    const BitSeq &parens() const noexcept { return parens_; }
    std::uint64_t size() const noexcept { return parens_.size(); }
    std::uint64_t node_count() const noexcept { return parens_.size() / 2; }
    std::uint64_t root() const noexcept { return 1; }

    bool is_open(std::uint64_t i) const;
    bool is_leaf(std::uint64_t v) const;
    // excess at position i: (#'(' - #')') over [1..i]; equals depth for an open position
    std::int64_t excess(std::uint64_t i) const;

    std::uint64_t close(std::uint64_t v) const;
    std::uint64_t open(std::uint64_t c) const;
    // nullopt when v is the root
    std::optional<std::uint64_t> enclose(std::uint64_t v) const;
    std::uint64_t lca(std::uint64_t u, std::uint64_t v) const;
    std::uint64_t children(std::uint64_t v) const;
    std::optional<std::uint64_t> first_child(std::uint64_t v) const;
    std::optional<std::uint64_t> next_sibling(std::uint64_t v) const;

    // number of "()" pairs whose ')' lies in [1..i]
    std::uint64_t rank_leaf(std::uint64_t i) const;
    // open position of the j-th leaf in left-to-right order
    std::uint64_t select_leaf(std::uint64_t j) const;
    std::uint64_t leaf_count() const noexcept { return leaf_closes_.count_ones(); }

    std::uint64_t preorder_rank(std::uint64_t v) const;
    std::uint64_t preorder_select(std::uint64_t r) const;

    std::uint64_t size_in_bits() const noexcept;
    std::string to_string() const;

    void serialize(std::ostream &out, std::string_view tag) const;
    static BpTree deserialize(std::istream &in, std::string_view tag);

    friend bool operator==(const BpTree &a, const BpTree &b) { return a.parens_ == b.parens_; }

  private:
    bool bit(std::uint64_t i) const;
    void require_open(std::uint64_t v, const char *op) const;

    // smallest j in (i, n] with excess(j) <= target
    std::optional<std::uint64_t> forward_le(std::uint64_t i, std::int64_t target) const;
    // largest j in [0, i) with excess(j) <= target (excess(0) = 0)
    std::optional<std::uint64_t> backward_le(std::uint64_t i, std::int64_t target) const;
    // leftmost position of the minimum excess in [lo, hi]
    std::uint64_t min_excess_pos(std::uint64_t lo, std::uint64_t hi) const;

    std::int64_t tree_range_min(std::uint64_t lo_word, std::uint64_t hi_word) const;
    std::optional<std::uint64_t> tree_first_le(std::uint64_t from_word, std::int64_t target) const;
    std::optional<std::uint64_t> tree_last_le(std::uint64_t to_word, std::int64_t target) const;

    BitSeq parens_;
    BitSeq leaf_closes_;
    std::vector<std::uint64_t> words_;
    std::vector<std::int64_t> word_end_excess_;
    std::uint64_t tree_width_ = 0;  // leaves of the min tree (power of two)
    std::vector<std::int64_t> min_tree_;
};

}  // namespace hoboss::succinct
