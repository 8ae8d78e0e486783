#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string_view>
#include <vector>

namespace hoboss::succinct {

enum class BitMode : std::uint8_t {
    kPlain = 0,
    kSparse = 1,  // Elias-Fano over the positions of the 1s
};

/**
 * Static bitvector with rank and select.
 *
 * Positions are 1-indexed: access(i) for 1 <= i <= size(), rank(i) counts over
 * [1..i] (so rank(0) = 0), select(j) returns the 1-indexed position of the j-th
 * occurrence. The plain mode samples absolute ranks every 512 bits and relative
 * ranks every 64 bits; select binary-searches the samples. The sparse mode keeps
 * an Elias-Fano encoding and answers the same queries.
 */
class BitSeq {
  public:
    BitSeq();
    BitSeq(std::vector<std::uint64_t> words, std::uint64_t length, BitMode mode = BitMode::kPlain);

    BitSeq(const BitSeq &other);
    BitSeq &operator=(const BitSeq &other);
    BitSeq(BitSeq &&) noexcept;
    BitSeq &operator=(BitSeq &&) noexcept;
    ~BitSeq();

    // "110101" -> bits 1,1,0,1,0,1. Test and fixture helper.
    static BitSeq from_string(std::string_view bits, BitMode mode = BitMode::kPlain);

    std::uint64_t size() const noexcept { return length_; }
    BitMode mode() const noexcept { return mode_; }
    std::uint64_t count_ones() const noexcept { return ones_; }

    bool access(std::uint64_t i) const;
    std::uint64_t rank1(std::uint64_t i) const;
    std::uint64_t rank0(std::uint64_t i) const;
    std::uint64_t rank(bool bit, std::uint64_t i) const { return bit ? rank1(i) : rank0(i); }
    std::uint64_t select1(std::uint64_t j) const;
    std::uint64_t select0(std::uint64_t j) const;
    std::uint64_t select(bool bit, std::uint64_t j) const { return bit ? select1(j) : select0(j); }

    // Raw bits, reconstructed for the sparse mode.
    std::vector<std::uint64_t> words() const;

    // Payload plus rank/select directories.
    std::uint64_t size_in_bits() const noexcept;

    // Tagged section: tag, u64 bit length, u8 mode, raw words, u8 rebuild flag.
    void serialize(std::ostream &out, std::string_view tag) const;
    static BitSeq deserialize(std::istream &in, std::string_view tag);

    friend bool operator==(const BitSeq &a, const BitSeq &b);

  private:
    void build_plain_directories();
    void build_sparse(const std::vector<std::uint64_t> &words);

    std::uint64_t plain_rank1(std::uint64_t i) const;
    std::uint64_t plain_select(bool bit, std::uint64_t j) const;
    std::uint64_t sparse_rank1(std::uint64_t i) const;
    std::uint64_t sparse_select1(std::uint64_t j) const;
    std::uint64_t low_bits(std::uint64_t idx) const;

    std::uint64_t length_ = 0;
    std::uint64_t ones_ = 0;
    BitMode mode_ = BitMode::kPlain;

    // plain
    std::vector<std::uint64_t> words_;
    std::vector<std::uint64_t> super_ranks_;  // ones before each 512-bit superblock
    std::vector<std::uint16_t> block_ranks_;  // ones from superblock start to each word

    // sparse
    unsigned low_width_ = 0;
    std::vector<std::uint64_t> low_;
    std::unique_ptr<BitSeq> high_;
};

class BitBuilder {
  public:
    void push_back(bool bit);
    void append(bool bit, std::uint64_t count);
    std::uint64_t size() const noexcept { return length_; }
    BitSeq build(BitMode mode = BitMode::kPlain) &&;

  private:
    std::vector<std::uint64_t> words_;
    std::uint64_t length_ = 0;
};

}  // namespace hoboss::succinct
