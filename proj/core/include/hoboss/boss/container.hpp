#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>

#include "hoboss/boss/boss_index.hpp"
#include "hoboss/succinct/bp_tree.hpp"

namespace hoboss::boss {

inline constexpr char kContainerMagic[4] = {'H', 'O', 'B', 'S'};
inline constexpr std::uint16_t kContainerVersion = 1;

/**
 * `.hoboss` container. All integers little-endian:
 *
 *   "HOBS" | u16 version | u16 K | u16 m
 *   "BBIT" B  | "BEBT" BE  (bit sections)
 *   "EPRM" E'            (symbol section)
 *   "CARR" u64 count, count x u64
 *   "FBPT" F             (bit section; empty for a plain BOSS index)
 *   "META" u64 n_nodes, u64 n_edges
 */
struct Container {
    BossIndex boss;
    std::uint16_t min_order = 0;
    succinct::BpTree topology;  // empty when the container holds only BOSS
};

void write_container(std::ostream &out, const BossIndex &boss, std::uint16_t min_order,
                     const succinct::BpTree *topology);
Container read_container(std::istream &in);

void save_container(const std::filesystem::path &path, const BossIndex &boss, std::uint16_t min_order,
                    const succinct::BpTree *topology);
Container load_container(const std::filesystem::path &path);

}  // namespace hoboss::boss
