#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "hoboss/succinct/bit_seq.hpp"

namespace hoboss::succinct {

/**
 * Wavelet matrix over symbols 0..7 (three levels of plain bitvectors).
 * Same 1-indexed conventions as BitSeq; access/rank/select run in three
 * bitvector steps each.
 */
class WaveletSeq {
  public:
    static constexpr unsigned kLevels = 3;
    static constexpr unsigned kSigma = 1u << kLevels;

    WaveletSeq() = default;
    explicit WaveletSeq(std::span<const std::uint8_t> symbols);

    std::uint64_t size() const noexcept { return length_; }

    std::uint8_t access(std::uint64_t i) const;
    std::uint64_t rank(std::uint8_t symbol, std::uint64_t i) const;
    std::uint64_t select(std::uint8_t symbol, std::uint64_t j) const;
    std::uint64_t count(std::uint8_t symbol) const;

    std::vector<std::uint8_t> to_vector() const;
    std::uint64_t size_in_bits() const noexcept;

    // Tagged section: tag, u64 symbol count, symbols packed 4 bits each into
    // little-endian u64 words, u8 rebuild flag.
    void serialize(std::ostream &out, std::string_view tag) const;
    static WaveletSeq deserialize(std::istream &in, std::string_view tag);

    friend bool operator==(const WaveletSeq &a, const WaveletSeq &b) {
        return a.length_ == b.length_ && a.to_vector() == b.to_vector();
    }

  private:
    std::uint64_t length_ = 0;
    std::array<BitSeq, kLevels> levels_;
    std::array<std::uint64_t, kLevels> zeros_{};
    std::array<std::uint64_t, kSigma> counts_{};
};

}  // namespace hoboss::succinct
