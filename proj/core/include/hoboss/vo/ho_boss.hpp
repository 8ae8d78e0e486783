#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "hoboss/alphabet.hpp"
#include "hoboss/boss/boss_index.hpp"
#include "hoboss/ingest/edge_table.hpp"
#include "hoboss/succinct/bp_tree.hpp"

namespace hoboss::vo {

/// A node of the suffix trie of K-mers, named by the colex span [lo, hi] of
/// the K-mers (leaves) below it.
struct NodeRange {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;

    std::uint64_t size() const noexcept { return hi - lo + 1; }
    friend bool operator==(const NodeRange &, const NodeRange &) = default;
};

enum class OutKind : std::uint8_t { kDollarOnly, kUnique, kBranching };

struct OutSymbols {
    OutKind kind = OutKind::kDollarOnly;
    std::vector<Base> symbols;  // distinct non-$ labels, ascending; one for kUnique

    Base unique() const { return symbols.front(); }
};

/**
 * Balanced parentheses of the compact trie of reversed K-mers, from the LCS
 * array. Internal nodes of string depth < m are dropped and their subtrees
 * hang from a dummy root, which is always present.
 */
succinct::BpTree build_topology(const ingest::LcsArray &lcs, unsigned order, unsigned min_order);

/**
 * BOSS plus the trie topology F: a variable-order de Bruijn graph whose node
 * orders stay hidden. Contexts are NodeRanges; shorter() drops to the parent
 * trie node and vo_forward() appends one symbol.
 */
class HoBossIndex {
  public:
    HoBossIndex() = default;
    HoBossIndex(boss::BossIndex boss, succinct::BpTree topology, unsigned min_order);

    static HoBossIndex build(const ingest::ReadSet &reads, unsigned order, unsigned min_order);

    const boss::BossIndex &boss() const noexcept { return boss_; }
    const succinct::BpTree &topology() const noexcept { return topology_; }
    unsigned order() const noexcept { return boss_.order(); }
    unsigned min_order() const noexcept { return min_order_; }
    std::uint64_t num_nodes() const noexcept { return boss_.num_nodes(); }

    NodeRange root_range() const noexcept { return {1, num_nodes()}; }
    NodeRange leaf_range(std::uint64_t node) const;

    NodeRange id2range(std::uint64_t v) const;
    std::uint64_t range2id(NodeRange range) const;

    // parent trie node; nullopt once the context would drop below m (the
    // parent is the dummy root, or range is the root itself)
    std::optional<NodeRange> shorter(NodeRange range) const;
    // repeats shorter() until the out-symbol set grows
    std::optional<NodeRange> shorter_until_new_edges(NodeRange range) const;

    NodeRange vo_forward(NodeRange range, Base symbol) const;
    OutSymbols out_symbols(NodeRange range) const;
    std::vector<NodeRange> children_ranges(NodeRange range) const;

    void save(std::ostream &out) const;
    static HoBossIndex load(std::istream &in);
    void save(const std::filesystem::path &path) const;
    static HoBossIndex load(const std::filesystem::path &path);

    friend bool operator==(const HoBossIndex &a, const HoBossIndex &b);

  private:
    void check_range(NodeRange range, const char *op) const;
    std::pair<std::uint64_t, std::uint64_t> edge_rows(NodeRange range) const;

    boss::BossIndex boss_;
    succinct::BpTree topology_;
    unsigned min_order_ = 1;
};

}  // namespace hoboss::vo
