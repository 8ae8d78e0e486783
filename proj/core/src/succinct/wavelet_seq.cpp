#include "hoboss/succinct/wavelet_seq.hpp"

#include <istream>
#include <ostream>
#include <string>

#include "hoboss/error.hpp"
#include "hoboss/succinct/binary_io.hpp"

namespace hoboss::succinct {

namespace {

bool bit_of(std::uint8_t symbol, unsigned level) {
    return (symbol >> (WaveletSeq::kLevels - 1 - level)) & 1;
}

}  // namespace

WaveletSeq::WaveletSeq(std::span<const std::uint8_t> symbols) : length_(symbols.size()) {
    std::vector<std::uint8_t> current(symbols.begin(), symbols.end());
    for (std::uint8_t s : current) {
        if (s >= kSigma)
            throw ArgumentError("WaveletSeq: symbol " + std::to_string(s) + " outside alphabet");
        ++counts_[s];
    }
    std::vector<std::uint8_t> next;
    next.reserve(current.size());
    for (unsigned level = 0; level < kLevels; ++level) {
        BitBuilder bits;
        for (std::uint8_t s : current)
            bits.push_back(bit_of(s, level));
        levels_[level] = std::move(bits).build();
        zeros_[level] = levels_[level].size() - levels_[level].count_ones();
        next.clear();
        for (std::uint8_t s : current)
            if (!bit_of(s, level))
                next.push_back(s);
        for (std::uint8_t s : current)
            if (bit_of(s, level))
                next.push_back(s);
        current.swap(next);
    }
}

std::uint8_t WaveletSeq::access(std::uint64_t i) const {
    if (i == 0 || i > length_)
        throw RangeError("WaveletSeq::access: position " + std::to_string(i) + " outside [1, " +
                         std::to_string(length_) + "]");
    std::uint64_t pos = i - 1;  // 0-based
    std::uint8_t symbol = 0;
    for (unsigned level = 0; level < kLevels; ++level) {
        const bool b = levels_[level].access(pos + 1);
        symbol = static_cast<std::uint8_t>((symbol << 1) | (b ? 1 : 0));
        pos = b ? zeros_[level] + levels_[level].rank1(pos) : levels_[level].rank0(pos);
    }
    return symbol;
}

std::uint64_t WaveletSeq::rank(std::uint8_t symbol, std::uint64_t i) const {
    if (i > length_)
        throw RangeError("WaveletSeq::rank: position " + std::to_string(i) + " exceeds length " +
                         std::to_string(length_));
    if (symbol >= kSigma)
        throw ArgumentError("WaveletSeq::rank: symbol outside alphabet");
    if (counts_[symbol] == 0 || i == 0)
        return 0;
    std::uint64_t start = 0, end = i;
    for (unsigned level = 0; level < kLevels; ++level) {
        if (bit_of(symbol, level)) {
            start = zeros_[level] + levels_[level].rank1(start);
            end = zeros_[level] + levels_[level].rank1(end);
        } else {
            start = levels_[level].rank0(start);
            end = levels_[level].rank0(end);
        }
    }
    return end - start;
}

std::uint64_t WaveletSeq::select(std::uint8_t symbol, std::uint64_t j) const {
    if (symbol >= kSigma)
        throw ArgumentError("WaveletSeq::select: symbol outside alphabet");
    if (j == 0 || j > counts_[symbol])
        throw NotFound("WaveletSeq::select: symbol " + std::to_string(symbol) + " has no occurrence " +
                       std::to_string(j));
    // start of the symbol's block in the last level
    std::uint64_t start = 0;
    for (unsigned level = 0; level < kLevels; ++level)
        start = bit_of(symbol, level) ? zeros_[level] + levels_[level].rank1(start)
                                      : levels_[level].rank0(start);
    std::uint64_t pos = start + j - 1;  // 0-based, below the last level
    for (unsigned level = kLevels; level-- > 0;) {
        if (bit_of(symbol, level))
            pos = levels_[level].select1(pos - zeros_[level] + 1) - 1;
        else
            pos = levels_[level].select0(pos + 1) - 1;
    }
    return pos + 1;
}

std::uint64_t WaveletSeq::count(std::uint8_t symbol) const {
    if (symbol >= kSigma)
        throw ArgumentError("WaveletSeq::count: symbol outside alphabet");
    return counts_[symbol];
}

std::vector<std::uint8_t> WaveletSeq::to_vector() const {
    std::vector<std::uint8_t> out;
    out.reserve(length_);
    for (std::uint64_t i = 1; i <= length_; ++i)
        out.push_back(access(i));
    return out;
}

std::uint64_t WaveletSeq::size_in_bits() const noexcept {
    std::uint64_t bits = 64 * (kLevels + kSigma + 1);
    for (const auto &level : levels_)
        bits += level.size_in_bits();
    return bits;
}

void WaveletSeq::serialize(std::ostream &out, std::string_view tag) const {
    io::write_tag(out, tag);
    io::write_le<std::uint64_t>(out, length_);
    const auto symbols = to_vector();
    for (std::uint64_t base = 0; base < symbols.size(); base += 16) {
        std::uint64_t word = 0;
        for (std::uint64_t k = 0; k < 16 && base + k < symbols.size(); ++k)
            word |= static_cast<std::uint64_t>(symbols[base + k]) << (4 * k);
        io::write_le<std::uint64_t>(out, word);
    }
    io::write_le<std::uint8_t>(out, 1);
}

WaveletSeq WaveletSeq::deserialize(std::istream &in, std::string_view tag) {
    io::expect_tag(in, tag);
    const auto length = io::read_le<std::uint64_t>(in);
    if (length > (std::uint64_t{1} << 38))
        throw FormatError("symbol section '" + std::string(tag) + "': implausible length");
    std::vector<std::uint8_t> symbols;
    symbols.reserve(length);
    for (std::uint64_t base = 0; base < length; base += 16) {
        const auto word = io::read_le<std::uint64_t>(in);
        for (std::uint64_t k = 0; k < 16; ++k) {
            const auto s = static_cast<std::uint8_t>((word >> (4 * k)) & 0xF);
            if (base + k < length) {
                if (s >= kSigma)
                    throw FormatError("symbol section '" + std::string(tag) + "': symbol outside alphabet");
                symbols.push_back(s);
            } else if (s != 0) {
                throw FormatError("symbol section '" + std::string(tag) + "': padding not zero");
            }
        }
    }
    if (io::read_le<std::uint8_t>(in) != 1)
        throw FormatError("symbol section '" + std::string(tag) + "': unsupported directory flag");
    return WaveletSeq(symbols);
}

}  // namespace hoboss::succinct
