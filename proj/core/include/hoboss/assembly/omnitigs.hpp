#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "hoboss/alphabet.hpp"
#include "hoboss/succinct/bit_seq.hpp"
#include "hoboss/vo/ho_boss.hpp"

namespace hoboss::assembly {

inline constexpr std::uint64_t kNullHandle = std::numeric_limits<std::uint64_t>::max();

enum class StopReason : std::uint8_t {
    kBranching,  // more than one outgoing symbol
    kMinOrder,   // shortening hit the dummy root
    kLinked,     // reached a path-merging node already owned by another list
    kRevisit,    // reached a node already visited by this traversal
};

const char *stop_reason_name(StopReason reason);

struct ListNode {
    std::uint64_t next = kNullHandle;
    Base symbol = Base::kDollar;
    bool cross = false;  // next points into another list (or back into this one)
};

struct Omnitig {
    std::uint64_t starter = 0;  // colex rank of the seed K-mer
    std::string seed;           // seed label with leading $ removed
    std::uint64_t head = kNullHandle;
    std::uint64_t tail = kNullHandle;
    std::uint64_t appended = 0;  // symbols appended by this traversal
    StopReason stop = StopReason::kBranching;
    bool linked() const noexcept { return stop == StopReason::kLinked; }
};

/**
 * Arena of singly linked lists, one per starter. Each list begins with a
 * sentinel head so a path-merging node can point at the position reached
 * before any symbol was appended.
 */
class OmnitigStore {
  public:
    OmnitigStore() = default;
    explicit OmnitigStore(succinct::BitSeq pm);

    const succinct::BitSeq &pm() const noexcept { return pm_; }
    const std::vector<ListNode> &nodes() const noexcept { return nodes_; }
    const std::vector<Omnitig> &omnitigs() const noexcept { return omnitigs_; }
    std::size_t size() const noexcept { return omnitigs_.size(); }

    // V entry for the path-merging node with preorder rank `rank`
    std::uint64_t owner(std::uint64_t rank) const;
    void set_owner(std::uint64_t rank, std::uint64_t handle);

    std::size_t open(std::uint64_t starter, std::string seed);
    void append(std::size_t omnitig, Base symbol);
    void link(std::size_t omnitig, std::uint64_t target);
    void finish(std::size_t omnitig, StopReason reason);

    std::string materialize(std::size_t omnitig) const;

  private:
    succinct::BitSeq pm_;
    std::vector<std::uint64_t> owners_;  // V
    std::vector<ListNode> nodes_;
    std::vector<Omnitig> omnitigs_;
};

struct StarterSet {
    std::vector<std::uint64_t> starters;
};

StarterSet find_starters(const boss::BossIndex &boss);

// PM over preorder ranks of F: at most one non-$ out-symbol and at least two in-edges.
succinct::BitSeq mark_pm_nodes(const vo::HoBossIndex &index);

// Nodes of F already entered by the running traversal, cleared between starters.
class VisitedSet {
  public:
    explicit VisitedSet(std::uint64_t node_count) : bits_(node_count + 1, false) {}
    bool test_and_set(std::uint64_t rank);
    void clear();

  private:
    std::vector<bool> bits_;
    std::vector<std::uint64_t> touched_;
};

std::size_t extend_omnitig(const vo::HoBossIndex &index, OmnitigStore &store, VisitedSet &visited,
                           std::uint64_t starter);

OmnitigStore assemble_all(const vo::HoBossIndex &index);
OmnitigStore assemble_all(const vo::HoBossIndex &index, const StarterSet &starters);

// Per-traversal visited marks instead of V; no suffix sharing between lists.
OmnitigStore assemble_cycle_only(const vo::HoBossIndex &index, unsigned threads = 1);
OmnitigStore assemble_cycle_only(const vo::HoBossIndex &index, const StarterSet &starters, unsigned threads = 1);

struct AssemblyCounts {
    std::uint64_t n_omnitigs = 0;
    std::uint64_t max_omnitig = 0;
    std::uint64_t traversed_nodes = 0;  // seed plus own appended symbols, per omnitig
    std::uint64_t omnitig_nodes = 0;    // nodes of the materialized walks
    double pct_reduction = 0.0;
};

AssemblyCounts count_assembly(const OmnitigStore &store);

}  // namespace hoboss::assembly
