#include "hoboss/assembly/unitigs.hpp"

#include <algorithm>

namespace hoboss::assembly {

namespace {

struct RealDegrees {
    std::vector<std::uint32_t> in, out;
    std::vector<std::uint64_t> next;  // successor when out == 1
};

RealDegrees real_degrees(const boss::BossIndex &boss, const std::vector<bool> &dummy) {
    const std::uint64_t n = boss.num_nodes();
    RealDegrees d{std::vector<std::uint32_t>(n + 1, 0), std::vector<std::uint32_t>(n + 1, 0),
                  std::vector<std::uint64_t>(n + 1, 0)};
    for (std::uint64_t v = 1; v <= n; ++v) {
        if (dummy[v])
            continue;
        const auto [first, last] = boss.node_rows(v);
        for (std::uint64_t row = first; row <= last; ++row) {
            const EdgeSymbol e = boss.e_access(row);
            if (e.base == Base::kDollar)
                continue;
            const std::uint64_t w = boss.forward(v, e.base);
            ++d.out[v];
            ++d.in[w];
            d.next[v] = w;
        }
    }
    return d;
}

}  // namespace

std::vector<std::string> extract_unitigs(const boss::BossIndex &boss) {
    const std::uint64_t n = boss.num_nodes();
    const auto dummy = boss.dummy_nodes();
    const auto d = real_degrees(boss, dummy);
    auto merges = [&](std::uint64_t u) { return d.out[u] == 1 && d.in[d.next[u]] == 1 && d.next[u] != u; };

    std::vector<bool> used(n + 1, false);
    std::vector<std::string> unitigs;
    auto emit_from = [&](std::uint64_t start) {
        std::string text = boss.label(start);
        used[start] = true;
        std::uint64_t v = start;
        while (merges(v) && !used[d.next[v]]) {
            v = d.next[v];
            used[v] = true;
            text.push_back(base_char(boss.last_char(v)));
        }
        unitigs.push_back(std::move(text));
    };

    std::vector<bool> has_merging_pred(n + 1, false);
    for (std::uint64_t u = 1; u <= n; ++u)
        if (!dummy[u] && merges(u))
            has_merging_pred[d.next[u]] = true;
    for (std::uint64_t v = 1; v <= n; ++v)
        if (!dummy[v] && !has_merging_pred[v])
            emit_from(v);
    for (std::uint64_t v = 1; v <= n; ++v)
        if (!dummy[v] && !used[v])
            emit_from(v);
    return unitigs;
}

std::uint64_t max_unitig_length(const ingest::ReadSet &reads, unsigned lo, unsigned hi) {
    std::uint64_t best = 0;
    for (unsigned order = std::max(lo, 2u); order <= hi; ++order) {
        const auto boss = boss::BossIndex::build(reads, order);
        for (const auto &u : extract_unitigs(boss))
            best = std::max<std::uint64_t>(best, u.size());
    }
    return best;
}

}  // namespace hoboss::assembly
