#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hoboss/oracle/naive_graph.hpp"
#include "hoboss/vo/ho_boss.hpp"

namespace hoboss::oracle {

struct EquivalenceReport {
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    std::vector<std::string> messages;  // first few failures

    bool ok() const noexcept { return failures == 0; }
    void merge(const EquivalenceReport &other);
};

/**
 * Compares the index against the oracle on every K-mer (outdegree, indegree,
 * backward) and every node of the pruned trie (span, out-symbols, shorter, and
 * vo_forward along each outgoing symbol).
 */
EquivalenceReport check_equivalence(const vo::HoBossIndex &index, const NaiveGraph &graph);

}  // namespace hoboss::oracle
