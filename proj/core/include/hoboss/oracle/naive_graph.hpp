#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace hoboss::oracle {

// Out-symbol summary of a context: kind is 'D' (only $), 'U' (one base) or 'B'.
struct NaiveOut {
    char kind = 'D';
    std::string symbols;  // distinct non-$ bases, ascending

    friend bool operator==(const NaiveOut &, const NaiveOut &) = default;
};

struct NaiveWalk {
    std::string text;
    bool capped = false;
};

/**
 * Reference de Bruijn graph built by plain string slicing. Contexts are
 * strings: a K-mer for a leaf, a shorter suffix for a variable-order node, and
 * "" for the root. Shares no code with the succinct side.
 */
class NaiveGraph {
  public:
    NaiveGraph(const std::vector<std::string> &reads, unsigned order, unsigned min_order);

    unsigned order() const { return order_; }
    unsigned min_order() const { return min_order_; }
    const std::set<std::string> &edges() const { return edges_; }
    // K-mers in colex order; node i (1-based) is nodes()[i - 1]
    const std::vector<std::string> &nodes() const { return nodes_; }
    std::uint64_t node_rank(const std::string &kmer) const;

    // colex rows: (K-mer, edge label) in index order
    std::vector<std::pair<std::string, char>> rows() const;

    std::uint64_t outdegree(const std::string &kmer) const;
    std::uint64_t outdegree_non_dollar(const std::string &kmer) const;
    std::uint64_t indegree(const std::string &kmer) const;
    std::vector<std::string> backward(const std::string &kmer) const;

    // colex span [lo, hi] of the K-mers ending with `context`
    std::pair<std::uint64_t, std::uint64_t> span(const std::string &context) const;
    // longest common suffix of the K-mers ending with `context`; throws if none
    std::string normalize(const std::string &context) const;
    bool is_trie_node(const std::string &context) const;
    // every node of the pruned trie, "" first
    std::vector<std::string> trie_nodes() const;

    NaiveOut out_symbols(const std::string &context) const;
    std::optional<std::string> naive_shorter(const std::string &context) const;
    std::string naive_vo_forward(const std::string &context, char symbol) const;

    std::vector<std::string> starters() const;
    bool is_pm(const std::string &context) const;
    NaiveWalk naive_rm_walk(const std::string &start) const;
    std::vector<std::string> unitigs() const;

  private:
    bool ends_with(const std::string &kmer, const std::string &suffix) const;

    unsigned order_;
    unsigned min_order_;
    std::set<std::string> edges_;
    std::vector<std::string> nodes_;
    std::map<std::string, std::set<char>> out_;
    std::map<std::string, std::set<std::string>> in_;
};

bool colex_less(const std::string &a, const std::string &b);

}  // namespace hoboss::oracle
