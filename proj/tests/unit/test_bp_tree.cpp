#include <optional>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "hoboss/error.hpp"
#include "hoboss/succinct/bp_tree.hpp"

using hoboss::succinct::BpTree;

namespace {

// Pointer-free reference answers by scanning the parenthesis string.
struct NaiveBp {
    std::string s;  // 1-indexed via s[i - 1]

    std::uint64_t close(std::uint64_t v) const {
        int depth = 0;
        for (std::uint64_t i = v; i <= s.size(); ++i) {
            depth += s[i - 1] == '(' ? 1 : -1;
            if (depth == 0)
                return i;
        }
        return 0;
    }
    std::optional<std::uint64_t> parent(std::uint64_t v) const {
        int depth = 0;
        for (std::uint64_t i = v - 1; i >= 1; --i) {
            depth += s[i - 1] == ')' ? 1 : -1;
            if (depth < 0)
                return i;
        }
        return std::nullopt;
    }
    bool is_ancestor(std::uint64_t a, std::uint64_t v) const { return a <= v && v <= close(a); }
    std::uint64_t lca(std::uint64_t u, std::uint64_t v) const {
        std::uint64_t a = u;
        while (!is_ancestor(a, v))
            a = *parent(a);
        return a;
    }
    std::vector<std::uint64_t> leaves() const {
        std::vector<std::uint64_t> out;
        for (std::uint64_t i = 1; i < s.size(); ++i)
            if (s[i - 1] == '(' && s[i] == ')')
                out.push_back(i);
        return out;
    }
};

std::string random_tree(std::mt19937_64 &rng, std::size_t nodes) {
    // random ordinal tree by random parent choice in preorder
    std::vector<std::vector<std::size_t>> children(nodes);
    for (std::size_t v = 1; v < nodes; ++v)
        children[rng() % v].push_back(v);
    std::string out;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{0, 0}};
    out.push_back('(');
    while (!stack.empty()) {
        auto &[v, next] = stack.back();
        if (next < children[v].size()) {
            const std::size_t c = children[v][next++];
            out.push_back('(');
            stack.push_back({c, 0});
        } else {
            out.push_back(')');
            stack.pop_back();
        }
    }
    return out;
}

}  // namespace

TEST_CASE("bp_tree tiny topology") {
    const auto tree = BpTree::from_string("(()()()()(()()))");
    CHECK(tree.node_count() == 8);
    CHECK(tree.leaf_count() == 6);
    CHECK(tree.close(1) == 16);
    CHECK(tree.close(10) == 15);
    CHECK(tree.enclose(11) == std::optional<std::uint64_t>(10));
    CHECK_FALSE(tree.enclose(1).has_value());
    CHECK(tree.select_leaf(5) == 11);
    CHECK(tree.lca(tree.select_leaf(5), tree.select_leaf(6)) == 10);
    CHECK(tree.lca(tree.select_leaf(4), tree.select_leaf(5)) == 1);
    CHECK(tree.children(1) == 5);
    CHECK(tree.rank_leaf(15) == 6);
    CHECK(tree.preorder_rank(10) == 6);
}

TEST_CASE("bp_tree rejects malformed input") {
    CHECK_THROWS_AS(BpTree::from_string("(()"), hoboss::ArgumentError);
    CHECK_THROWS_AS(BpTree::from_string("()()"), hoboss::ArgumentError);
    CHECK_THROWS_AS(BpTree::from_string(")("), hoboss::ArgumentError);
    const auto tree = BpTree::from_string("(())");
    CHECK_THROWS_AS(tree.close(3), hoboss::ArgumentError);
    CHECK_THROWS_AS(tree.select_leaf(2), hoboss::NotFound);
}

TEST_CASE("bp_tree navigation agrees with a scanning reference") {
    std::mt19937_64 rng(5);
    for (std::size_t nodes : {1u, 2u, 10u, 40u, 200u, 900u}) {
        const std::string s = random_tree(rng, nodes);
        const BpTree tree = BpTree::from_string(s);
        const NaiveBp naive{s};
        CAPTURE(nodes);
        CHECK(tree.to_string() == s);
        std::vector<std::uint64_t> opens;
        for (std::uint64_t i = 1; i <= s.size(); ++i)
            if (s[i - 1] == '(')
                opens.push_back(i);
        for (std::uint64_t v : opens) {
            CHECK(tree.close(v) == naive.close(v));
            CHECK(tree.open(naive.close(v)) == v);
            CHECK(tree.enclose(v) == naive.parent(v));
        }
        const auto leaves = naive.leaves();
        REQUIRE(tree.leaf_count() == leaves.size());
        for (std::size_t j = 0; j < leaves.size(); ++j)
            CHECK(tree.select_leaf(j + 1) == leaves[j]);
        for (int trial = 0; trial < 200; ++trial) {
            const auto u = opens[rng() % opens.size()], v = opens[rng() % opens.size()];
            CHECK(tree.lca(u, v) == naive.lca(std::min(u, v), std::max(u, v)));
        }
    }
}

TEST_CASE("bp_tree deep path crosses many words") {
    const std::size_t depth = 5000;
    const std::string s = std::string(depth, '(') + std::string(depth, ')');
    const auto tree = BpTree::from_string(s);
    CHECK(tree.close(1) == 2 * depth);
    CHECK(tree.close(depth) == depth + 1);
    CHECK(tree.enclose(depth) == std::optional<std::uint64_t>(depth - 1));
    CHECK(tree.lca(depth, 2) == 2);
    CHECK(tree.open(2 * depth) == 1);
}
