#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace hoboss {

// Ordered $ < A < C < G < T, matching the colexicographic order of the index.
enum class Base : std::uint8_t { kDollar = 0, kA = 1, kC = 2, kG = 3, kT = 4 };

inline constexpr std::array<Base, 4> kNucleotides{Base::kA, Base::kC, Base::kG, Base::kT};
inline constexpr std::size_t kBaseCount = 5;

constexpr char base_char(Base b) {
    constexpr char table[] = {'$', 'A', 'C', 'G', 'T'};
    return table[static_cast<std::size_t>(b)];
}

constexpr std::optional<Base> base_from_char(char c) {
    switch (c) {
        case '$': return Base::kDollar;
        case 'A': return Base::kA;
        case 'C': return Base::kC;
        case 'G': return Base::kG;
        case 'T': return Base::kT;
        default: return std::nullopt;
    }
}

constexpr std::size_t base_index(Base b) { return static_cast<std::size_t>(b); }

/// Symbol of the edge column E: a base, or a flagged copy of one marking a
/// repeated label inside a run of nodes sharing their last K-1 characters.
struct EdgeSymbol {
    Base base = Base::kDollar;
    bool flagged = false;

    // code in the reduced sequence E' (A..T = 0..3, flagged A..T = 4..7)
    constexpr std::uint8_t code() const {
        return static_cast<std::uint8_t>(static_cast<unsigned>(base) - 1 + (flagged ? 4 : 0));
    }
    static constexpr EdgeSymbol from_code(std::uint8_t code) {
        return EdgeSymbol{static_cast<Base>((code & 3) + 1), code >= 4};
    }

    // "$", "A", ... with flagged symbols written as "A-"
    std::string to_string() const {
        std::string s(1, base_char(base));
        if (flagged)
            s.push_back('-');
        return s;
    }

    friend constexpr bool operator==(EdgeSymbol, EdgeSymbol) = default;
};

}  // namespace hoboss
