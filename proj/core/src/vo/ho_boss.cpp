#include "hoboss/vo/ho_boss.hpp"

#include <fstream>

#include "hoboss/boss/container.hpp"
#include "hoboss/error.hpp"

namespace hoboss::vo {

succinct::BpTree build_topology(const ingest::LcsArray &lcs, unsigned order, unsigned min_order) {
    if (min_order < 1 || min_order > order)
        throw ConfigError("minimum order m = " + std::to_string(min_order) + " must lie in [1, K = " +
                          std::to_string(order) + "]");
    const std::size_t n = lcs.node_count();
    if (n == 0)
        throw ArgumentError("build_topology: empty LCS array");

    // Each lcp-interval [lb, rb] of the pruned values is one internal node:
    // it opens just before leaf lb and closes just after leaf rb.
    std::vector<std::uint32_t> opens(n + 2, 0), closes(n + 2, 0);
    struct Frame {
        std::uint32_t depth;
        std::size_t lb;
    };
    std::vector<Frame> stack{{0, 1}};
    for (std::size_t i = 2; i <= n + 1; ++i) {
        std::uint32_t value = i <= n ? lcs.values[i] : 0;
        if (value >= order)
            throw InvariantViolation("build_topology: LCS value " + std::to_string(value) + " at node " +
                                     std::to_string(i) + " is not below K");
        if (value < min_order)
            value = 0;
        std::size_t lb = i - 1;
        while (value < stack.back().depth) {
            lb = stack.back().lb;
            ++opens[lb];
            ++closes[i - 1];
            stack.pop_back();
        }
        if (value > stack.back().depth)
            stack.push_back({value, lb});
    }

    succinct::BitBuilder bits;
    bits.push_back(true);
    for (std::size_t i = 1; i <= n; ++i) {
        bits.append(true, opens[i]);
        bits.push_back(true);
        bits.push_back(false);
        bits.append(false, closes[i]);
    }
    bits.push_back(false);
    return succinct::BpTree(std::move(bits).build());
}

HoBossIndex::HoBossIndex(boss::BossIndex boss, succinct::BpTree topology, unsigned min_order)
      : boss_(std::move(boss)), topology_(std::move(topology)), min_order_(min_order) {
    if (min_order_ < 1 || min_order_ > boss_.order())
        throw ConfigError("minimum order m = " + std::to_string(min_order_) + " must lie in [1, K = " +
                          std::to_string(boss_.order()) + "]");
    if (topology_.leaf_count() != boss_.num_nodes())
        throw InvariantViolation("HO-BOSS: F has " + std::to_string(topology_.leaf_count()) + " leaves but BOSS has " +
                                 std::to_string(boss_.num_nodes()) + " nodes");
    if (topology_.size() > 4 * boss_.num_nodes())
        throw InvariantViolation("HO-BOSS: F uses " + std::to_string(topology_.size()) + " bits, above 4n = " +
                                 std::to_string(4 * boss_.num_nodes()));
}

HoBossIndex HoBossIndex::build(const ingest::ReadSet &reads, unsigned order, unsigned min_order) {
    if (min_order < 1 || min_order > order)
        throw ConfigError("minimum order m = " + std::to_string(min_order) + " must lie in [1, K = " +
                          std::to_string(order) + "]");
    const auto table = ingest::extract_kmers(reads, order);
    auto topology = build_topology(ingest::build_lcs(table), order, min_order);
    return HoBossIndex(boss::BossIndex::build(table), std::move(topology), min_order);
}

void HoBossIndex::check_range(NodeRange range, const char *op) const {
    if (range.lo == 0 || range.lo > range.hi || range.hi > num_nodes())
        throw RangeError(std::string("HO-BOSS::") + op + ": range [" + std::to_string(range.lo) + ", " +
                         std::to_string(range.hi) + "] outside [1, " + std::to_string(num_nodes()) + "]");
}

NodeRange HoBossIndex::leaf_range(std::uint64_t node) const {
    check_range({node, node}, "leaf_range");
    return {node, node};
}

NodeRange HoBossIndex::id2range(std::uint64_t v) const {
    if (!topology_.is_open(v))
        throw ArgumentError("HO-BOSS::id2range: position " + std::to_string(v) + " is not a node of F");
    return {topology_.rank_leaf(v) + 1, topology_.rank_leaf(topology_.close(v))};
}

std::uint64_t HoBossIndex::range2id(NodeRange range) const {
    check_range(range, "range2id");
    return topology_.lca(topology_.select_leaf(range.lo), topology_.select_leaf(range.hi));
}

std::optional<NodeRange> HoBossIndex::shorter(NodeRange range) const {
    const std::uint64_t v = range2id(range);
    const auto parent = topology_.enclose(v);
    if (!parent || *parent == topology_.root())
        return std::nullopt;
    return id2range(*parent);
}

std::optional<NodeRange> HoBossIndex::shorter_until_new_edges(NodeRange range) const {
    const auto start = out_symbols(range);
    auto current = shorter(range);
    while (current) {
        const auto next = out_symbols(*current);
        if (next.kind != start.kind || next.symbols != start.symbols)
            return current;
        current = shorter(*current);
    }
    return std::nullopt;
}

std::pair<std::uint64_t, std::uint64_t> HoBossIndex::edge_rows(NodeRange range) const {
    const auto &last = boss_.last();
    const std::uint64_t p = range.lo == 1 ? 1 : last.select1(range.lo - 1) + 1;
    return {p, last.select1(range.hi)};
}

NodeRange HoBossIndex::vo_forward(NodeRange range, Base symbol) const {
    check_range(range, "vo_forward");
    if (symbol == Base::kDollar)
        throw ArgumentError("HO-BOSS::vo_forward: $-edges have no target");
    const auto [p, q] = edge_rows(range);
    const EdgeSymbol plain{symbol, false}, flagged{symbol, true};
    const std::uint64_t plain_before = boss_.e_rank(plain, p - 1);
    const std::uint64_t plain_upto = boss_.e_rank(plain, q);
    const std::uint64_t flagged_before = boss_.e_rank(flagged, p - 1);
    const std::uint64_t flagged_upto = boss_.e_rank(flagged, q);
    if (plain_upto == plain_before && flagged_upto == flagged_before)
        throw NotFound("HO-BOSS::vo_forward: range [" + std::to_string(range.lo) + ", " + std::to_string(range.hi) +
                       "] has no edge labelled " + std::string(1, base_char(symbol)));

    std::uint64_t sp = plain_before + 1;
    const std::uint64_t ep = plain_upto;
    if (flagged_upto > flagged_before) {
        // a leading flagged edge shares its target with the unflagged edge before p
        const std::uint64_t first_flagged = boss_.e_select(flagged, flagged_before + 1);
        if (plain_upto == plain_before || first_flagged < boss_.e_select(plain, plain_before + 1))
            sp = plain_before;
    }
    const std::uint64_t i = boss_.counts()[base_index(symbol)] + sp;
    const std::uint64_t j = i + (ep - sp);
    return id2range(topology_.lca(topology_.select_leaf(i), topology_.select_leaf(j)));
}

OutSymbols HoBossIndex::out_symbols(NodeRange range) const {
    check_range(range, "out_symbols");
    const auto [p, q] = edge_rows(range);
    const auto &be = boss_.non_dollar();
    const std::uint64_t lo = be.rank1(p - 1), hi = be.rank1(q);
    OutSymbols out;
    if (lo == hi)
        return out;
    const auto &reduced = boss_.reduced();
    for (Base a : kNucleotides) {
        const auto plain = EdgeSymbol{a, false}.code(), flagged = EdgeSymbol{a, true}.code();
        const std::uint64_t count =
              reduced.rank(plain, hi) - reduced.rank(plain, lo) + reduced.rank(flagged, hi) - reduced.rank(flagged, lo);
        if (count > 0)
            out.symbols.push_back(a);
        if (count == hi - lo) {
            out.kind = OutKind::kUnique;
            return out;
        }
    }
    out.kind = OutKind::kBranching;
    return out;
}

std::vector<NodeRange> HoBossIndex::children_ranges(NodeRange range) const {
    std::vector<NodeRange> out;
    const std::uint64_t v = range2id(range);
    for (auto c = topology_.first_child(v); c; c = topology_.next_sibling(*c))
        out.push_back(id2range(*c));
    return out;
}

void HoBossIndex::save(std::ostream &out) const {
    boss::write_container(out, boss_, static_cast<std::uint16_t>(min_order_), &topology_);
}

HoBossIndex HoBossIndex::load(std::istream &in) {
    auto container = boss::read_container(in);
    if (container.topology.size() == 0)
        throw FormatError("index container holds no topology section");
    try {
        return HoBossIndex(std::move(container.boss), std::move(container.topology), container.min_order);
    } catch (const InvariantViolation &e) {
        throw FormatError(std::string("index container: ") + e.what());
    } catch (const ConfigError &e) {
        throw FormatError(std::string("index container: ") + e.what());
    }
}

void HoBossIndex::save(const std::filesystem::path &path) const {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open '" + path.string() + "' for writing");
    save(out);
    if (!out)
        throw IoError("failed writing '" + path.string() + "'");
}

HoBossIndex HoBossIndex::load(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open '" + path.string() + "'");
    return load(in);
}

bool operator==(const HoBossIndex &a, const HoBossIndex &b) {
    return a.min_order_ == b.min_order_ && a.boss_ == b.boss_ && a.topology_ == b.topology_;
}

}  // namespace hoboss::vo
