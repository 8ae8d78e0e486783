#include "hoboss/ingest/edge_table.hpp"

#include <algorithm>

#include "hoboss/error.hpp"

namespace hoboss::ingest {

namespace {

// Sort key: the K-mer reversed, then the edge label. Plain lexicographic order
// on keys is the colex order on rows because '$' < 'A' < 'C' < 'G' < 'T' in ASCII.
std::string to_key(std::string_view row, unsigned order) {
    std::string key(row.size(), '\0');
    for (unsigned j = 0; j < order; ++j)
        key[j] = row[order - 1 - j];
    key[order] = row[order];
    return key;
}

std::string from_key(std::string_view key, unsigned order) { return to_key(key, order); }

bool same_kmer(std::string_view a, std::string_view b, unsigned order) {
    return a.substr(0, order) == b.substr(0, order);
}

// rows whose K-mers share characters 2..K
bool same_suffix_run(std::string_view a, std::string_view b, unsigned order) {
    return a.substr(1, order - 1) == b.substr(1, order - 1);
}

}  // namespace

EdgeTable extract_kmers(const ReadSet &reads, unsigned order, unsigned max_order) {
    if (order < 2)
        throw ConfigError("order K must be at least 2, got " + std::to_string(order));
    if (order > max_order)
        throw ConfigError("order K = " + std::to_string(order) + " exceeds the maximum " + std::to_string(max_order));
    if (reads.reads.empty())
        throw ArgumentError("extract_kmers: read set is empty");

    std::vector<std::string> keys;
    std::string padded;
    for (const auto &read : reads.reads) {
        if (read.empty())
            throw ArgumentError("extract_kmers: empty read");
        for (char c : read)
            if (c != 'A' && c != 'C' && c != 'G' && c != 'T')
                throw ArgumentError("extract_kmers: read contains a character outside {A,C,G,T}");
        padded.assign(order, '$');
        padded += read;
        for (std::size_t i = 0; i < read.size(); ++i)
            keys.push_back(to_key(std::string_view(padded).substr(i, order + 1), order));
        keys.push_back(to_key(padded.substr(read.size(), order) + '$', order));
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

    EdgeTable table;
    table.order = order;
    table.rows.reserve(keys.size());
    for (const auto &key : keys)
        table.rows.push_back(from_key(key, order));
    return table;
}

std::vector<EdgeSymbol> edge_column(const EdgeTable &table) {
    const unsigned k = table.order;
    std::vector<EdgeSymbol> column;
    column.reserve(table.rows.size());
    std::array<bool, kBaseCount> seen{};
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        if (i > 0) {
            if (to_key(table.rows[i - 1], k) >= to_key(table.rows[i], k))
                throw InvariantViolation("edge table rows are not sorted and distinct at row " + std::to_string(i + 1));
            if (!same_suffix_run(table.rows[i - 1], table.rows[i], k))
                seen.fill(false);
        }
        const auto base = base_from_char(table.edge(i));
        if (!base)
            throw InvariantViolation("edge table row has an invalid edge label");
        EdgeSymbol symbol{*base, false};
        if (*base != Base::kDollar) {
            symbol.flagged = seen[base_index(*base)];
            seen[base_index(*base)] = true;
        }
        column.push_back(symbol);
    }
    return column;
}

BossArrays build_boss_arrays(const EdgeTable &table) {
    const unsigned k = table.order;
    const auto column = edge_column(table);
    const std::size_t n_rows = table.rows.size();

    succinct::BitBuilder last, non_dollar;
    std::vector<std::uint8_t> reduced;
    std::array<std::uint64_t, kBaseCount> per_last_char{};
    for (std::size_t i = 0; i < n_rows; ++i) {
        const bool is_last = i + 1 == n_rows || !same_kmer(table.rows[i], table.rows[i + 1], k);
        last.push_back(is_last);
        if (is_last) {
            const auto c = base_from_char(table.rows[i][k - 1]);
            if (!c)
                throw InvariantViolation("edge table row has an invalid K-mer character");
            ++per_last_char[base_index(*c)];
        }
        const bool real = column[i].base != Base::kDollar;
        non_dollar.push_back(real);
        if (real)
            reduced.push_back(column[i].code());
    }

    BossArrays arrays;
    arrays.last = std::move(last).build();
    arrays.non_dollar = std::move(non_dollar).build();
    arrays.reduced = succinct::WaveletSeq(reduced);
    std::uint64_t running = 0;
    for (std::size_t a = 0; a < kBaseCount; ++a) {
        arrays.counts[a] = running;
        running += per_last_char[a];
    }
    return arrays;
}

LcsArray build_lcs(const EdgeTable &table) {
    const unsigned k = table.order;
    LcsArray lcs;
    lcs.values.push_back(0);
    std::string_view previous;
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const std::string_view kmer = table.kmer(i);
        if (!previous.empty() && kmer == previous)
            continue;
        std::uint32_t common = 0;
        if (!previous.empty())
            while (common < k && kmer[k - 1 - common] == previous[k - 1 - common])
                ++common;
        lcs.values.push_back(common);
        previous = kmer;
    }
    return lcs;
}

}  // namespace hoboss::ingest
