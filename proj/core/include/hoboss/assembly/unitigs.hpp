#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hoboss/boss/boss_index.hpp"
#include "hoboss/ingest/reads.hpp"

namespace hoboss::assembly {

/**
 * Maximal non-branching paths of the graph restricted to K-mers without '$'.
 * Degrees are taken inside that subgraph: u and its successor w are merged iff
 * u has one non-$ out-edge and w has one in-edge from a non-dummy node.
 * Leftover isolated cycles are emitted once, starting at their smallest node.
 */
std::vector<std::string> extract_unitigs(const boss::BossIndex &boss);

// Longest unitig over the BOSS graphs of orders lo..hi (orders below 2 are skipped).
std::uint64_t max_unitig_length(const ingest::ReadSet &reads, unsigned lo, unsigned hi);

}  // namespace hoboss::assembly
