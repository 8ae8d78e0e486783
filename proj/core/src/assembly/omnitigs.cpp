#include "hoboss/assembly/omnitigs.hpp"

#include <algorithm>
#include <thread>
#include <unordered_set>

#include "hoboss/error.hpp"

namespace hoboss::assembly {

const char *stop_reason_name(StopReason reason) {
    switch (reason) {
    case StopReason::kBranching:
        return "branching";
    case StopReason::kMinOrder:
        return "min-order";
    case StopReason::kLinked:
        return "linked";
    case StopReason::kRevisit:
        return "revisit";
    }
    return "unknown";
}

OmnitigStore::OmnitigStore(succinct::BitSeq pm) : pm_(std::move(pm)), owners_(pm_.count_ones(), kNullHandle) {}

std::uint64_t OmnitigStore::owner(std::uint64_t rank) const { return owners_[pm_.rank1(rank) - 1]; }

void OmnitigStore::set_owner(std::uint64_t rank, std::uint64_t handle) {
    if (handle >= nodes_.size())
        throw InvariantViolation("OmnitigStore: V entry would reference a missing list node");
    owners_[pm_.rank1(rank) - 1] = handle;
}

std::size_t OmnitigStore::open(std::uint64_t starter, std::string seed) {
    Omnitig omnitig;
    omnitig.starter = starter;
    seed.erase(0, seed.find_first_not_of('$'));
    omnitig.seed = std::move(seed);
    omnitig.head = omnitig.tail = nodes_.size();
    nodes_.push_back(ListNode{});
    omnitigs_.push_back(std::move(omnitig));
    return omnitigs_.size() - 1;
}

void OmnitigStore::append(std::size_t omnitig, Base symbol) {
    auto &o = omnitigs_.at(omnitig);
    nodes_[o.tail].next = nodes_.size();
    o.tail = nodes_.size();
    nodes_.push_back(ListNode{kNullHandle, symbol, false});
    ++o.appended;
}

void OmnitigStore::link(std::size_t omnitig, std::uint64_t target) {
    auto &o = omnitigs_.at(omnitig);
    if (target >= nodes_.size())
        throw InvariantViolation("OmnitigStore: link target does not exist");
    nodes_[o.tail].next = target;
    nodes_[o.tail].cross = true;
}

void OmnitigStore::finish(std::size_t omnitig, StopReason reason) { omnitigs_.at(omnitig).stop = reason; }

std::string OmnitigStore::materialize(std::size_t omnitig) const {
    const auto &o = omnitigs_.at(omnitig);
    std::string out = o.seed;
    std::unordered_set<std::uint64_t> seen;
    std::uint64_t at = o.head;
    seen.insert(at);
    while (true) {
        const ListNode &node = nodes_[at];
        if (node.next == kNullHandle)
            break;
        if (node.next >= nodes_.size())
            throw InvariantViolation("OmnitigStore: dangling list link");
        at = node.next;
        if (!seen.insert(at).second)
            break;
        // a cross target's symbol was already spelled by this walk
        if (!node.cross)
            out.push_back(base_char(nodes_[at].symbol));
    }
    return out;
}

StarterSet find_starters(const boss::BossIndex &boss) {
    StarterSet set;
    const auto dummy = boss.dummy_nodes();
    for (std::uint64_t v = 1; v <= boss.num_nodes(); ++v) {
        if (dummy[v] || boss.outdegree_non_dollar(v) > 1)
            continue;
        const auto sources = boss.backward(v);
        // a dummy in-neighbor only marks a read start, not a genome path
        const bool all_branching = std::all_of(sources.begin(), sources.end(), [&](std::uint64_t u) {
            return dummy[u] || boss.outdegree_non_dollar(u) >= 2;
        });
        if (all_branching)
            set.starters.push_back(v);
    }
    return set;
}

succinct::BitSeq mark_pm_nodes(const vo::HoBossIndex &index) {
    const auto &boss = index.boss();
    const auto &tree = index.topology();
    std::vector<std::uint64_t> in_prefix(boss.num_nodes() + 1, 0);
    for (std::uint64_t v = 1; v <= boss.num_nodes(); ++v)
        in_prefix[v] = in_prefix[v - 1] + boss.indegree(v);

    succinct::BitBuilder pm;
    pm.push_back(false);  // dummy root
    for (std::uint64_t rank = 2; rank <= tree.node_count(); ++rank) {
        const auto range = index.id2range(tree.preorder_select(rank));
        const std::uint64_t in_edges = in_prefix[range.hi] - in_prefix[range.lo - 1];
        pm.push_back(in_edges >= 2 && index.out_symbols(range).kind != vo::OutKind::kBranching);
    }
    return std::move(pm).build();
}

bool VisitedSet::test_and_set(std::uint64_t rank) {
    if (bits_[rank])
        return true;
    bits_[rank] = true;
    touched_.push_back(rank);
    return false;
}

void VisitedSet::clear() {
    for (std::uint64_t rank : touched_)
        bits_[rank] = false;
    touched_.clear();
}

namespace {

// Walks from `starter`, handing each appended symbol to `emit`. Without a store
// there is no linking and only the visited marks stop a cycle.
template <typename Emit>
StopReason walk(const vo::HoBossIndex &index, OmnitigStore *store, std::size_t omnitig, VisitedSet &visited,
                std::uint64_t starter, Emit &&emit) {
    const auto &tree = index.topology();
    vo::NodeRange range = index.leaf_range(starter);
    while (true) {
        const std::uint64_t rank = tree.preorder_rank(index.range2id(range));
        if (store && store->pm().access(rank)) {
            const std::uint64_t owner = store->owner(rank);
            if (owner != kNullHandle) {
                store->link(omnitig, owner);
                return StopReason::kLinked;
            }
            store->set_owner(rank, store->omnitigs()[omnitig].tail);
        }
        if (visited.test_and_set(rank))
            return StopReason::kRevisit;

        auto out = index.out_symbols(range);
        while (out.kind == vo::OutKind::kDollarOnly) {
            const auto parent = index.shorter(range);
            if (!parent)
                return StopReason::kMinOrder;
            range = *parent;
            out = index.out_symbols(range);
        }
        if (out.kind != vo::OutKind::kUnique)
            return StopReason::kBranching;
        emit(out.unique());
        range = index.vo_forward(range, out.unique());
    }
}

}  // namespace

std::size_t extend_omnitig(const vo::HoBossIndex &index, OmnitigStore &store, VisitedSet &visited,
                           std::uint64_t starter) {
    const std::size_t omnitig = store.open(starter, index.boss().label(starter));
    visited.clear();
    const auto reason = walk(index, &store, omnitig, visited, starter,
                             [&](Base symbol) { store.append(omnitig, symbol); });
    store.finish(omnitig, reason);
    return omnitig;
}

OmnitigStore assemble_all(const vo::HoBossIndex &index) {
    return assemble_all(index, find_starters(index.boss()));
}

OmnitigStore assemble_all(const vo::HoBossIndex &index, const StarterSet &starters) {
    OmnitigStore store(mark_pm_nodes(index));
    VisitedSet visited(index.topology().node_count());
    for (std::uint64_t starter : starters.starters)
        extend_omnitig(index, store, visited, starter);
    return store;
}

OmnitigStore assemble_cycle_only(const vo::HoBossIndex &index, unsigned threads) {
    return assemble_cycle_only(index, find_starters(index.boss()), threads);
}

OmnitigStore assemble_cycle_only(const vo::HoBossIndex &index, const StarterSet &starters, unsigned threads) {
    struct Walk {
        std::vector<Base> symbols;
        StopReason stop = StopReason::kBranching;
    };
    const auto &list = starters.starters;
    std::vector<Walk> walks(list.size());
    const unsigned n_threads =
          static_cast<unsigned>(std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(list.size(), 1)));

    auto run = [&](std::size_t begin, std::size_t end) {
        VisitedSet visited(index.topology().node_count());
        for (std::size_t s = begin; s < end; ++s) {
            visited.clear();
            auto &w = walks[s];
            w.stop = walk(index, nullptr, 0, visited, list[s], [&](Base symbol) { w.symbols.push_back(symbol); });
        }
    };
    if (n_threads == 1) {
        run(0, list.size());
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (list.size() + n_threads - 1) / n_threads;
        for (unsigned t = 0; t < n_threads; ++t) {
            const std::size_t begin = std::min(list.size(), t * chunk);
            const std::size_t end = std::min(list.size(), begin + chunk);
            pool.emplace_back(run, begin, end);
        }
        for (auto &thread : pool)
            thread.join();
    }

    OmnitigStore store;
    for (std::size_t s = 0; s < list.size(); ++s) {
        const std::size_t omnitig = store.open(list[s], index.boss().label(list[s]));
        for (Base symbol : walks[s].symbols)
            store.append(omnitig, symbol);
        store.finish(omnitig, walks[s].stop);
    }
    return store;
}

AssemblyCounts count_assembly(const OmnitigStore &store) {
    AssemblyCounts counts;
    counts.n_omnitigs = store.size();
    for (std::size_t i = 0; i < store.size(); ++i) {
        const auto &o = store.omnitigs()[i];
        const std::string text = store.materialize(i);
        counts.max_omnitig = std::max<std::uint64_t>(counts.max_omnitig, text.size());
        counts.traversed_nodes += o.appended + 1;
        counts.omnitig_nodes += text.size() - o.seed.size() + 1;
    }
    if (counts.omnitig_nodes > 0)
        counts.pct_reduction = 100.0 *
                               static_cast<double>(counts.omnitig_nodes - counts.traversed_nodes) /
                               static_cast<double>(counts.omnitig_nodes);
    return counts;
}

}  // namespace hoboss::assembly
