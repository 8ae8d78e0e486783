#include "hoboss/oracle/naive_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace hoboss::oracle {

bool colex_less(const std::string &a, const std::string &b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

NaiveGraph::NaiveGraph(const std::vector<std::string> &reads, unsigned order, unsigned min_order)
      : order_(order), min_order_(min_order) {
    for (const auto &read : reads) {
        const std::string padded = std::string(order, '$') + read + '$';
        for (std::size_t i = 0; i + order + 1 <= padded.size(); ++i)
            edges_.insert(padded.substr(i, order + 1));
    }
    std::set<std::string> kmers;
    for (const auto &e : edges_) {
        const std::string from = e.substr(0, order), to = e.substr(1);
        kmers.insert(from);
        out_[from].insert(e.back());
        if (e.back() != '$')
            in_[to].insert(from);
    }
    nodes_.assign(kmers.begin(), kmers.end());
    std::sort(nodes_.begin(), nodes_.end(), colex_less);
}

std::uint64_t NaiveGraph::node_rank(const std::string &kmer) const {
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        if (nodes_[i] == kmer)
            return i + 1;
    throw std::out_of_range("oracle: unknown K-mer " + kmer);
}

std::vector<std::pair<std::string, char>> NaiveGraph::rows() const {
    std::vector<std::pair<std::string, char>> out;
    for (const auto &kmer : nodes_)
        for (char c : out_.at(kmer))
            out.emplace_back(kmer, c);
    return out;
}

std::uint64_t NaiveGraph::outdegree(const std::string &kmer) const { return out_.at(kmer).size(); }

std::uint64_t NaiveGraph::outdegree_non_dollar(const std::string &kmer) const {
    const auto &s = out_.at(kmer);
    return s.size() - s.count('$');
}

std::uint64_t NaiveGraph::indegree(const std::string &kmer) const {
    const auto it = in_.find(kmer);
    return it == in_.end() ? 0 : it->second.size();
}

std::vector<std::string> NaiveGraph::backward(const std::string &kmer) const {
    const auto it = in_.find(kmer);
    if (it == in_.end())
        return {};
    std::vector<std::string> out(it->second.begin(), it->second.end());
    std::sort(out.begin(), out.end(), colex_less);
    return out;
}

bool NaiveGraph::ends_with(const std::string &kmer, const std::string &suffix) const {
    return kmer.size() >= suffix.size() && kmer.compare(kmer.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::pair<std::uint64_t, std::uint64_t> NaiveGraph::span(const std::string &context) const {
    std::uint64_t lo = 0, hi = 0;
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        if (ends_with(nodes_[i], context)) {
            if (lo == 0)
                lo = i + 1;
            hi = i + 1;
        }
    if (lo == 0)
        throw std::out_of_range("oracle: no K-mer ends with '" + context + "'");
    return {lo, hi};
}

std::string NaiveGraph::normalize(const std::string &context) const {
    std::optional<std::string> common;
    for (const auto &kmer : nodes_) {
        if (!ends_with(kmer, context))
            continue;
        if (!common) {
            common = kmer;
            continue;
        }
        std::size_t k = 0;
        while (k < common->size() && (*common)[common->size() - 1 - k] == kmer[kmer.size() - 1 - k])
            ++k;
        *common = common->substr(common->size() - k);
    }
    if (!common)
        throw std::out_of_range("oracle: no K-mer ends with '" + context + "'");
    return *common;
}

bool NaiveGraph::is_trie_node(const std::string &context) const {
    if (context.empty())
        return true;
    if (context.size() < min_order_)
        return false;
    try {
        return normalize(context) == context;
    } catch (const std::out_of_range &) {
        return false;
    }
}

std::vector<std::string> NaiveGraph::trie_nodes() const {
    std::set<std::string> found;
    for (const auto &kmer : nodes_)
        for (std::size_t len = 1; len <= order_; ++len) {
            const std::string s = kmer.substr(order_ - len);
            if (is_trie_node(s))
                found.insert(s);
        }
    std::vector<std::string> out{""};
    out.insert(out.end(), found.begin(), found.end());
    return out;
}

NaiveOut NaiveGraph::out_symbols(const std::string &context) const {
    std::set<char> symbols;
    for (const auto &kmer : nodes_)
        if (ends_with(kmer, context))
            for (char c : out_.at(kmer))
                if (c != '$')
                    symbols.insert(c);
    NaiveOut out;
    out.symbols.assign(symbols.begin(), symbols.end());
    out.kind = symbols.empty() ? 'D' : symbols.size() == 1 ? 'U' : 'B';
    return out;
}

std::optional<std::string> NaiveGraph::naive_shorter(const std::string &context) const {
    if (context.empty())
        return std::nullopt;
    for (std::size_t len = context.size() - 1; len >= 1; --len) {
        const std::string s = context.substr(context.size() - len);
        if (s.size() >= min_order_ && is_trie_node(s))
            return s;
    }
    return std::nullopt;
}

std::string NaiveGraph::naive_vo_forward(const std::string &context, char symbol) const {
    bool found = false;
    for (const auto &kmer : nodes_)
        if (ends_with(kmer, context) && out_.at(kmer).count(symbol))
            found = true;
    if (!found)
        throw std::out_of_range("oracle: context '" + context + "' has no edge " + std::string(1, symbol));
    std::string extended = context + symbol;
    if (extended.size() > order_)
        extended = extended.substr(extended.size() - order_);
    const std::string n = normalize(extended);
    return n.size() < min_order_ ? std::string() : n;
}

std::vector<std::string> NaiveGraph::starters() const {
    std::vector<std::string> out;
    for (const auto &kmer : nodes_) {
        if (kmer.find('$') != std::string::npos || outdegree_non_dollar(kmer) > 1)
            continue;
        bool ok = true;
        for (const auto &pred : backward(kmer))
            ok = ok && (pred.find('$') != std::string::npos || outdegree_non_dollar(pred) >= 2);
        if (ok)
            out.push_back(kmer);
    }
    return out;
}

bool NaiveGraph::is_pm(const std::string &context) const {
    if (context.empty() || out_symbols(context).kind == 'B')
        return false;
    std::uint64_t in_edges = 0;
    for (const auto &kmer : nodes_)
        if (ends_with(kmer, context))
            in_edges += indegree(kmer);
    return in_edges >= 2;
}

NaiveWalk NaiveGraph::naive_rm_walk(const std::string &start) const {
    NaiveWalk walk;
    walk.text = start;
    walk.text.erase(0, walk.text.find_first_not_of('$'));
    std::string context = start;
    const std::size_t cap = 10 * edges_.size();
    for (std::size_t step = 0;; ++step) {
        if (step >= cap) {
            walk.capped = true;
            break;
        }
        NaiveOut out = out_symbols(context);
        bool stopped = false;
        while (out.kind == 'D') {
            const auto parent = naive_shorter(context);
            if (!parent) {
                stopped = true;
                break;
            }
            context = *parent;
            out = out_symbols(context);
        }
        if (stopped || out.kind != 'U')
            break;
        walk.text.push_back(out.symbols[0]);
        context = naive_vo_forward(context, out.symbols[0]);
    }
    return walk;
}

std::vector<std::string> NaiveGraph::unitigs() const {
    auto real = [](const std::string &kmer) { return kmer.find('$') == std::string::npos; };
    std::map<std::string, std::vector<std::string>> succ, pred;
    for (const auto &e : edges_) {
        const std::string from = e.substr(0, order_), to = e.substr(1);
        if (e.back() == '$' || !real(from))
            continue;
        succ[from].push_back(to);
        pred[to].push_back(from);
    }
    auto merges = [&](const std::string &u) {
        const auto &s = succ[u];
        return s.size() == 1 && pred[s[0]].size() == 1 && s[0] != u;
    };
    std::set<std::string> used;
    std::vector<std::string> out;
    auto emit = [&](const std::string &start) {
        std::string text = start, v = start;
        used.insert(v);
        while (merges(v) && !used.count(succ[v][0])) {
            v = succ[v][0];
            used.insert(v);
            text.push_back(v.back());
        }
        out.push_back(text);
    };
    std::set<std::string> has_merging_pred;
    for (const auto &kmer : nodes_)
        if (real(kmer) && merges(kmer))
            has_merging_pred.insert(succ[kmer][0]);
    for (const auto &kmer : nodes_)
        if (real(kmer) && !has_merging_pred.count(kmer))
            emit(kmer);
    for (const auto &kmer : nodes_)
        if (real(kmer) && !used.count(kmer))
            emit(kmer);
    return out;
}

}  // namespace hoboss::oracle
