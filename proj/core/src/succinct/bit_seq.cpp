#include "hoboss/succinct/bit_seq.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <string>

#include "hoboss/error.hpp"
#include "hoboss/succinct/binary_io.hpp"
#include "hoboss/succinct/counters.hpp"

namespace hoboss::succinct {

namespace {

constexpr std::uint64_t kWordsPerSuper = 8;
constexpr std::uint64_t kSuperBits = 64 * kWordsPerSuper;

std::uint64_t words_for(std::uint64_t bits) { return (bits + 63) / 64; }

// 0-based index of the k-th (1-based) set bit of x; x must hold >= k ones.
unsigned select_in_word(std::uint64_t x, std::uint64_t k) {
    while (--k > 0)
        x &= x - 1;
    return static_cast<unsigned>(std::countr_zero(x));
}

std::uint64_t valid_mask(std::uint64_t length, std::uint64_t word) {
    const std::uint64_t tail = length - 64 * word;
    return tail >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << tail) - 1);
}

}  // namespace

BitSeq::BitSeq() { build_plain_directories(); }

BitSeq::BitSeq(std::vector<std::uint64_t> words, std::uint64_t length, BitMode mode)
      : length_(length), mode_(mode) {
    if (words.size() < words_for(length))
        throw ArgumentError("BitSeq: word buffer shorter than bit length");
    words.resize(words_for(length));
    if (!words.empty())
        words.back() &= valid_mask(length, words.size() - 1);
    if (mode_ == BitMode::kPlain) {
        words_ = std::move(words);
        build_plain_directories();
    } else {
        build_sparse(words);
    }
}

BitSeq::BitSeq(const BitSeq &other)
      : length_(other.length_),
        ones_(other.ones_),
        mode_(other.mode_),
        words_(other.words_),
        super_ranks_(other.super_ranks_),
        block_ranks_(other.block_ranks_),
        low_width_(other.low_width_),
        low_(other.low_),
        high_(other.high_ ? std::make_unique<BitSeq>(*other.high_) : nullptr) {}

BitSeq &BitSeq::operator=(const BitSeq &other) {
    if (this != &other) {
        BitSeq copy(other);
        *this = std::move(copy);
    }
    return *this;
}

BitSeq::BitSeq(BitSeq &&) noexcept = default;
BitSeq &BitSeq::operator=(BitSeq &&) noexcept = default;
BitSeq::~BitSeq() = default;

BitSeq BitSeq::from_string(std::string_view bits, BitMode mode) {
    BitBuilder builder;
    for (char c : bits) {
        if (c != '0' && c != '1')
            throw ArgumentError("BitSeq::from_string: expected only '0'/'1'");
        builder.push_back(c == '1');
    }
    return std::move(builder).build(mode);
}

void BitSeq::build_plain_directories() {
    const std::uint64_t n_words = words_.size();
    const std::uint64_t n_super = (n_words + kWordsPerSuper - 1) / kWordsPerSuper;
    super_ranks_.assign(n_super + 1, 0);
    block_ranks_.assign(n_words, 0);
    std::uint64_t total = 0;
    for (std::uint64_t s = 0; s < n_super; ++s) {
        super_ranks_[s] = total;
        std::uint64_t within = 0;
        for (std::uint64_t w = s * kWordsPerSuper; w < std::min(n_words, (s + 1) * kWordsPerSuper); ++w) {
            block_ranks_[w] = static_cast<std::uint16_t>(within);
            within += static_cast<std::uint64_t>(std::popcount(words_[w]));
        }
        total += within;
    }
    super_ranks_[n_super] = total;
    ones_ = total;
}

void BitSeq::build_sparse(const std::vector<std::uint64_t> &words) {
    std::vector<std::uint64_t> positions;
    for (std::uint64_t w = 0; w < words.size(); ++w) {
        std::uint64_t x = words[w];
        while (x) {
            positions.push_back(64 * w + static_cast<std::uint64_t>(std::countr_zero(x)));
            x &= x - 1;
        }
    }
    ones_ = positions.size();
    low_width_ = 0;
    if (ones_ > 0 && length_ > ones_)
        low_width_ = static_cast<unsigned>(std::bit_width(length_ / ones_) - 1);

    const std::uint64_t high_len = ones_ + (length_ >> low_width_) + 1;
    std::vector<std::uint64_t> high_words(words_for(high_len), 0);
    low_.assign(words_for(ones_ * low_width_) + 1, 0);
    const std::uint64_t mask = (std::uint64_t{1} << low_width_) - 1;
    for (std::uint64_t idx = 0; idx < positions.size(); ++idx) {
        const std::uint64_t p = positions[idx];
        const std::uint64_t h = (p >> low_width_) + idx;
        high_words[h >> 6] |= std::uint64_t{1} << (h & 63);
        if (low_width_ > 0) {
            const std::uint64_t lo = p & mask;
            const std::uint64_t bit = idx * low_width_;
            low_[bit >> 6] |= lo << (bit & 63);
            if ((bit & 63) + low_width_ > 64)
                low_[(bit >> 6) + 1] |= lo >> (64 - (bit & 63));
        }
    }
    high_ = std::make_unique<BitSeq>(std::move(high_words), high_len, BitMode::kPlain);
}

std::uint64_t BitSeq::low_bits(std::uint64_t idx) const {
    if (low_width_ == 0)
        return 0;
    const std::uint64_t bit = idx * low_width_;
    std::uint64_t value = low_[bit >> 6] >> (bit & 63);
    if ((bit & 63) + low_width_ > 64)
        value |= low_[(bit >> 6) + 1] << (64 - (bit & 63));
    return value & ((std::uint64_t{1} << low_width_) - 1);
}

bool BitSeq::access(std::uint64_t i) const {
    count_primitive();
    if (i == 0 || i > length_)
        throw RangeError("BitSeq::access: position " + std::to_string(i) + " outside [1, " +
                         std::to_string(length_) + "]");
    if (mode_ == BitMode::kPlain)
        return (words_[(i - 1) >> 6] >> ((i - 1) & 63)) & 1;
    return sparse_rank1(i) != sparse_rank1(i - 1);
}

std::uint64_t BitSeq::rank1(std::uint64_t i) const {
    count_primitive();
    if (i > length_)
        throw RangeError("BitSeq::rank: position " + std::to_string(i) + " exceeds length " +
                         std::to_string(length_));
    return mode_ == BitMode::kPlain ? plain_rank1(i) : sparse_rank1(i);
}

std::uint64_t BitSeq::rank0(std::uint64_t i) const { return i - rank1(i); }

std::uint64_t BitSeq::plain_rank1(std::uint64_t i) const {
    if (i == length_)
        return ones_;
    const std::uint64_t w = i >> 6;
    const std::uint64_t off = i & 63;
    std::uint64_t r = super_ranks_[w / kWordsPerSuper] + block_ranks_[w];
    if (off)
        r += static_cast<std::uint64_t>(std::popcount(words_[w] & ((std::uint64_t{1} << off) - 1)));
    return r;
}

std::uint64_t BitSeq::sparse_rank1(std::uint64_t i) const {
    if (ones_ == 0)
        return 0;
    if (i >= length_)
        return ones_;
    const std::uint64_t bucket = i >> low_width_;
    const std::uint64_t low_target = i & ((std::uint64_t{1} << low_width_) - 1);
    std::uint64_t hpos = bucket == 0 ? 0 : high_->select0(bucket);
    std::uint64_t count = hpos - bucket;
    while (hpos < high_->size() && high_->access(hpos + 1) && low_bits(count) < low_target) {
        ++count;
        ++hpos;
    }
    return count;
}

std::uint64_t BitSeq::select1(std::uint64_t j) const {
    count_primitive();
    if (j == 0 || j > ones_)
        throw NotFound("BitSeq::select1: no occurrence " + std::to_string(j) + " (have " +
                       std::to_string(ones_) + ")");
    return mode_ == BitMode::kPlain ? plain_select(true, j) : sparse_select1(j);
}

std::uint64_t BitSeq::select0(std::uint64_t j) const {
    count_primitive();
    const std::uint64_t zeros = length_ - ones_;
    if (j == 0 || j > zeros)
        throw NotFound("BitSeq::select0: no occurrence " + std::to_string(j) + " (have " +
                       std::to_string(zeros) + ")");
    if (mode_ == BitMode::kPlain)
        return plain_select(false, j);
    // smallest p with rank0(p) >= j
    std::uint64_t lo = 1, hi = length_;
    while (lo < hi) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (mid - sparse_rank1(mid) >= j)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

std::uint64_t BitSeq::plain_select(bool bit, std::uint64_t j) const {
    auto before_super = [&](std::uint64_t s) {
        return bit ? super_ranks_[s] : s * kSuperBits - super_ranks_[s];
    };
    const std::uint64_t n_super = super_ranks_.size() - 1;
    // largest s with before_super(s) < j
    std::uint64_t lo = 0, hi = n_super;
    while (hi - lo > 1) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (before_super(mid) < j)
            lo = mid;
        else
            hi = mid;
    }
    std::uint64_t seen = before_super(lo);
    const std::uint64_t end = std::min<std::uint64_t>(words_.size(), (lo + 1) * kWordsPerSuper);
    for (std::uint64_t w = lo * kWordsPerSuper; w < end; ++w) {
        const std::uint64_t x = bit ? words_[w] : (~words_[w] & valid_mask(length_, w));
        const auto cnt = static_cast<std::uint64_t>(std::popcount(x));
        if (seen + cnt >= j)
            return 64 * w + select_in_word(x, j - seen) + 1;
        seen += cnt;
    }
    throw InvariantViolation("BitSeq::select: directory inconsistent with payload");
}

std::uint64_t BitSeq::sparse_select1(std::uint64_t j) const {
    const std::uint64_t h = high_->select1(j) - 1;
    const std::uint64_t bucket = h - (j - 1);
    return ((bucket << low_width_) | low_bits(j - 1)) + 1;
}

std::vector<std::uint64_t> BitSeq::words() const {
    if (mode_ == BitMode::kPlain)
        return words_;
    std::vector<std::uint64_t> out(words_for(length_), 0);
    for (std::uint64_t j = 1; j <= ones_; ++j) {
        const std::uint64_t p = sparse_select1(j) - 1;
        out[p >> 6] |= std::uint64_t{1} << (p & 63);
    }
    return out;
}

std::uint64_t BitSeq::size_in_bits() const noexcept {
    if (mode_ == BitMode::kPlain)
        return 64 * words_.size() + 64 * super_ranks_.size() + 16 * block_ranks_.size();
    return 64 * low_.size() + (high_ ? high_->size_in_bits() : 0) + 64;
}

void BitSeq::serialize(std::ostream &out, std::string_view tag) const {
    io::write_tag(out, tag);
    io::write_le<std::uint64_t>(out, length_);
    io::write_le<std::uint8_t>(out, static_cast<std::uint8_t>(mode_));
    for (std::uint64_t w : words())
        io::write_le<std::uint64_t>(out, w);
    io::write_le<std::uint8_t>(out, 1);  // directories rebuilt on load
}

BitSeq BitSeq::deserialize(std::istream &in, std::string_view tag) {
    io::expect_tag(in, tag);
    const auto length = io::read_le<std::uint64_t>(in);
    const auto mode = io::read_le<std::uint8_t>(in);
    if (mode > 1)
        throw FormatError("bit section '" + std::string(tag) + "': unknown mode");
    if (length > (std::uint64_t{1} << 40))
        throw FormatError("bit section '" + std::string(tag) + "': implausible length");
    std::vector<std::uint64_t> words(words_for(length));
    for (auto &w : words)
        w = io::read_le<std::uint64_t>(in);
    if (io::read_le<std::uint8_t>(in) != 1)
        throw FormatError("bit section '" + std::string(tag) + "': unsupported directory flag");
    if (!words.empty() && (words.back() & ~valid_mask(length, words.size() - 1)))
        throw FormatError("bit section '" + std::string(tag) + "': padding bits set");
    return BitSeq(std::move(words), length, static_cast<BitMode>(mode));
}

bool operator==(const BitSeq &a, const BitSeq &b) {
    return a.length_ == b.length_ && a.ones_ == b.ones_ && a.words() == b.words();
}

void BitBuilder::push_back(bool bit) {
    if ((length_ & 63) == 0)
        words_.push_back(0);
    if (bit)
        words_.back() |= std::uint64_t{1} << (length_ & 63);
    ++length_;
}

void BitBuilder::append(bool bit, std::uint64_t count) {
    for (std::uint64_t i = 0; i < count; ++i)
        push_back(bit);
}

BitSeq BitBuilder::build(BitMode mode) && {
    return BitSeq(std::move(words_), length_, mode);
}

}  // namespace hoboss::succinct
