#include "hoboss/succinct/bp_tree.hpp"

#include <algorithm>
#include <limits>

#include "hoboss/error.hpp"
#include "hoboss/succinct/counters.hpp"

namespace hoboss::succinct {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();

std::uint64_t word_first(std::uint64_t w) { return 64 * w + 1; }
std::uint64_t word_of(std::uint64_t pos) { return (pos - 1) >> 6; }

}  // namespace

BpTree::BpTree(BitSeq parens) : parens_(std::move(parens)) {
    const std::uint64_t n = parens_.size();
    if (n % 2 != 0)
        throw ArgumentError("BpTree: odd number of parentheses");
    words_ = parens_.words();
    const std::uint64_t n_words = words_.size();
    word_end_excess_.assign(n_words, 0);
    std::vector<std::int64_t> word_min(n_words, kInf);

    BitBuilder leaf_closes;
    std::int64_t e = 0;
    bool prev_open = false;
    for (std::uint64_t i = 1; i <= n; ++i) {
        const bool open = (words_[(i - 1) >> 6] >> ((i - 1) & 63)) & 1;
        e += open ? 1 : -1;
        if (e < 0 || (e == 0 && i != n))
            throw ArgumentError("BpTree: parentheses are not a single balanced tree");
        const std::uint64_t w = word_of(i);
        word_min[w] = std::min(word_min[w], e);
        word_end_excess_[w] = e;
        leaf_closes.push_back(!open && prev_open);
        prev_open = open;
    }
    if (e != 0)
        throw ArgumentError("BpTree: unbalanced parentheses");
    leaf_closes_ = std::move(leaf_closes).build();

    tree_width_ = 1;
    while (tree_width_ < std::max<std::uint64_t>(n_words, 1))
        tree_width_ <<= 1;
    min_tree_.assign(2 * tree_width_, kInf);
    for (std::uint64_t w = 0; w < n_words; ++w)
        min_tree_[tree_width_ + w] = word_min[w];
    for (std::uint64_t node = tree_width_; node-- > 1;)
        min_tree_[node] = std::min(min_tree_[2 * node], min_tree_[2 * node + 1]);
}

BpTree BpTree::from_string(std::string_view parens) {
    BitBuilder bits;
    for (char c : parens) {
        if (c != '(' && c != ')')
            throw ArgumentError("BpTree::from_string: expected only '(' and ')'");
        bits.push_back(c == '(');
    }
    return BpTree(std::move(bits).build());
}

bool BpTree::bit(std::uint64_t i) const { return (words_[(i - 1) >> 6] >> ((i - 1) & 63)) & 1; }

bool BpTree::is_open(std::uint64_t i) const {
    if (i == 0 || i > size())
        throw RangeError("BpTree: position " + std::to_string(i) + " outside [1, " + std::to_string(size()) + "]");
    return bit(i);
}

void BpTree::require_open(std::uint64_t v, const char *op) const {
    if (v == 0 || v > size() || !bit(v))
        throw ArgumentError(std::string("BpTree::") + op + ": position " + std::to_string(v) +
                            " is not an open parenthesis");
}

bool BpTree::is_leaf(std::uint64_t v) const {
    require_open(v, "is_leaf");
    return !bit(v + 1);
}

std::int64_t BpTree::excess(std::uint64_t i) const {
    return 2 * static_cast<std::int64_t>(parens_.rank1(i)) - static_cast<std::int64_t>(i);
}

std::optional<std::uint64_t> BpTree::forward_le(std::uint64_t i, std::int64_t target) const {
    count_primitive();
    const std::uint64_t n = size();
    if (i >= n)
        return std::nullopt;
    std::int64_t e = excess(i);
    std::uint64_t j = i + 1;
    const std::uint64_t w0 = word_of(j);
    for (; j <= n && word_of(j) == w0; ++j) {
        e += bit(j) ? 1 : -1;
        if (e <= target)
            return j;
    }
    if (j > n)
        return std::nullopt;
    const auto w = tree_first_le(w0 + 1, target);
    if (!w)
        return std::nullopt;
    e = word_end_excess_[*w - 1];
    for (j = word_first(*w); j <= n; ++j) {
        e += bit(j) ? 1 : -1;
        if (e <= target)
            return j;
    }
    throw InvariantViolation("BpTree: min tree inconsistent with payload");
}

std::optional<std::uint64_t> BpTree::backward_le(std::uint64_t i, std::int64_t target) const {
    count_primitive();
    if (i == 0)
        return std::nullopt;
    std::uint64_t j = i - 1;
    if (j == 0)
        return target >= 0 ? std::optional<std::uint64_t>(0) : std::nullopt;
    std::int64_t e = excess(j);
    const std::uint64_t w0 = word_of(j);
    for (; j >= 1 && word_of(j) == w0; --j) {
        if (e <= target)
            return j;
        e -= bit(j) ? 1 : -1;
    }
    if (j >= 1 && w0 > 0) {
        if (const auto w = tree_last_le(w0 - 1, target)) {
            e = word_end_excess_[*w];
            for (j = std::min<std::uint64_t>(word_first(*w) + 63, size()); j >= word_first(*w); --j) {
                if (e <= target)
                    return j;
                e -= bit(j) ? 1 : -1;
            }
            throw InvariantViolation("BpTree: min tree inconsistent with payload");
        }
    }
    return target >= 0 ? std::optional<std::uint64_t>(0) : std::nullopt;
}

std::int64_t BpTree::tree_range_min(std::uint64_t lo_word, std::uint64_t hi_word) const {
    std::int64_t best = kInf;
    std::uint64_t l = lo_word + tree_width_, r = hi_word + tree_width_ + 1;
    while (l < r) {
        if (l & 1)
            best = std::min(best, min_tree_[l++]);
        if (r & 1)
            best = std::min(best, min_tree_[--r]);
        l >>= 1;
        r >>= 1;
    }
    return best;
}

std::optional<std::uint64_t> BpTree::tree_first_le(std::uint64_t from_word, std::int64_t target) const {
    if (from_word >= tree_width_)
        return std::nullopt;
    // climb from the leaf until a right sibling subtree qualifies, then descend
    std::uint64_t node = from_word + tree_width_;
    if (min_tree_[node] > target) {
        while (true) {
            while (node & 1) {
                node >>= 1;
                if (node <= 1)
                    return std::nullopt;
            }
            ++node;
            if (min_tree_[node] <= target)
                break;
        }
    }
    while (node < tree_width_)
        node = min_tree_[2 * node] <= target ? 2 * node : 2 * node + 1;
    return node - tree_width_;
}

std::optional<std::uint64_t> BpTree::tree_last_le(std::uint64_t to_word, std::int64_t target) const {
    std::uint64_t node = to_word + tree_width_;
    if (min_tree_[node] > target) {
        while (true) {
            while (!(node & 1))
                node >>= 1;
            if (node == 1)
                return std::nullopt;
            --node;
            if (min_tree_[node] <= target)
                break;
        }
    }
    while (node < tree_width_)
        node = min_tree_[2 * node + 1] <= target ? 2 * node + 1 : 2 * node;
    return node - tree_width_;
}

std::uint64_t BpTree::min_excess_pos(std::uint64_t lo, std::uint64_t hi) const {
    std::int64_t best = kInf;
    std::uint64_t j = lo;
    std::int64_t e = excess(lo - 1);
    const std::uint64_t w_lo = word_of(lo), w_hi = word_of(hi);
    for (; j <= hi && word_of(j) == w_lo; ++j) {
        e += bit(j) ? 1 : -1;
        best = std::min(best, e);
    }
    if (j <= hi) {
        if (w_hi > w_lo + 1)
            best = std::min(best, tree_range_min(w_lo + 1, w_hi - 1));
        e = excess(word_first(w_hi) - 1);
        for (j = word_first(w_hi); j <= hi; ++j) {
            e += bit(j) ? 1 : -1;
            best = std::min(best, e);
        }
    }
    const auto pos = forward_le(lo - 1, best);
    if (!pos || *pos > hi)
        throw InvariantViolation("BpTree: range minimum not found");
    return *pos;
}

std::uint64_t BpTree::close(std::uint64_t v) const {
    require_open(v, "close");
    const auto c = forward_le(v, excess(v) - 1);
    if (!c)
        throw InvariantViolation("BpTree::close: no matching parenthesis");
    return *c;
}

std::uint64_t BpTree::open(std::uint64_t c) const {
    if (c == 0 || c > size() || bit(c))
        throw ArgumentError("BpTree::open: position " + std::to_string(c) + " is not a closing parenthesis");
    const auto j = backward_le(c, excess(c));
    if (!j)
        throw InvariantViolation("BpTree::open: no matching parenthesis");
    return *j + 1;
}

std::optional<std::uint64_t> BpTree::enclose(std::uint64_t v) const {
    require_open(v, "enclose");
    const std::int64_t target = excess(v) - 2;
    if (target < 0)
        return std::nullopt;
    const auto j = backward_le(v, target);
    if (!j)
        throw InvariantViolation("BpTree::enclose: no enclosing parenthesis");
    return *j + 1;
}

std::uint64_t BpTree::lca(std::uint64_t u, std::uint64_t v) const {
    require_open(u, "lca");
    require_open(v, "lca");
    if (u == v)
        return u;
    if (u > v)
        std::swap(u, v);
    if (v < close(u))
        return u;
    const std::uint64_t m = min_excess_pos(u, v);
    const auto parent = enclose(m + 1);
    if (!parent)
        throw InvariantViolation("BpTree::lca: minimum does not close a child");
    return *parent;
}

std::uint64_t BpTree::children(std::uint64_t v) const {
    require_open(v, "children");
    std::uint64_t count = 0;
    for (auto c = first_child(v); c; c = next_sibling(*c))
        ++count;
    return count;
}

std::optional<std::uint64_t> BpTree::first_child(std::uint64_t v) const {
    require_open(v, "first_child");
    if (v + 1 <= size() && bit(v + 1))
        return v + 1;
    return std::nullopt;
}

std::optional<std::uint64_t> BpTree::next_sibling(std::uint64_t v) const {
    const std::uint64_t c = close(v) + 1;
    if (c <= size() && bit(c))
        return c;
    return std::nullopt;
}

std::uint64_t BpTree::rank_leaf(std::uint64_t i) const { return leaf_closes_.rank1(i); }

std::uint64_t BpTree::select_leaf(std::uint64_t j) const {
    if (j == 0 || j > leaf_count())
        throw NotFound("BpTree::select_leaf: no leaf " + std::to_string(j) + " (have " +
                       std::to_string(leaf_count()) + ")");
    return leaf_closes_.select1(j) - 1;
}

std::uint64_t BpTree::preorder_rank(std::uint64_t v) const {
    require_open(v, "preorder_rank");
    return parens_.rank1(v);
}

std::uint64_t BpTree::preorder_select(std::uint64_t r) const { return parens_.select1(r); }

std::uint64_t BpTree::size_in_bits() const noexcept {
    return parens_.size_in_bits() + leaf_closes_.size_in_bits() + 64 * word_end_excess_.size() +
           64 * min_tree_.size();
}

std::string BpTree::to_string() const {
    std::string out;
    out.reserve(size());
    for (std::uint64_t i = 1; i <= size(); ++i)
        out.push_back(bit(i) ? '(' : ')');
    return out;
}

void BpTree::serialize(std::ostream &out, std::string_view tag) const { parens_.serialize(out, tag); }

BpTree BpTree::deserialize(std::istream &in, std::string_view tag) {
    try {
        return BpTree(BitSeq::deserialize(in, tag));
    } catch (const ArgumentError &e) {
        throw FormatError(std::string("topology section: ") + e.what());
    }
}

}  // namespace hoboss::succinct
