#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hoboss/alphabet.hpp"
#include "hoboss/ingest/reads.hpp"
#include "hoboss/succinct/bit_seq.hpp"
#include "hoboss/succinct/wavelet_seq.hpp"

namespace hoboss::ingest {

inline constexpr unsigned kDefaultMaxOrder = 64;

/**
 * Distinct (K+1)-mers of the $-padded reads, sorted by their first K
 * characters read right to left, ties broken by the last character.
 * Row i spells the node K-mer rows[i][0..K) and the edge label rows[i][K].
 */
struct EdgeTable {
    unsigned order = 0;
    std::vector<std::string> rows;

    std::string_view kmer(std::size_t row) const { return std::string_view(rows[row]).substr(0, order); }
    char edge(std::size_t row) const { return rows[row][order]; }
};

/// values[i] = longest common suffix of node i and node i-1 (nodes 1-based in
/// colex order); values[0] and values[1] are unused and held at 0.
struct LcsArray {
    std::vector<std::uint32_t> values;
    std::size_t node_count() const { return values.empty() ? 0 : values.size() - 1; }
};

struct BossArrays {
    succinct::BitSeq last;         // B: 1 at the last out-edge row of each node
    succinct::BitSeq non_dollar;   // BE: 1 where E[i] != $
    succinct::WaveletSeq reduced;  // E': non-$ symbols of E with their flags
    std::array<std::uint64_t, kBaseCount> counts{};  // C[a] = #nodes whose last char < a
};

EdgeTable extract_kmers(const ReadSet &reads, unsigned order, unsigned max_order = kDefaultMaxOrder);

// Column E with minus flags, in row order (reconstruction helper for tests and verification).
std::vector<EdgeSymbol> edge_column(const EdgeTable &table);

BossArrays build_boss_arrays(const EdgeTable &table);

LcsArray build_lcs(const EdgeTable &table);

}  // namespace hoboss::ingest
