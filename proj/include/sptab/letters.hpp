#pragma once

#include <compare>
#include <cstdlib>
#include <string>

#include "errors.hpp"

namespace sptab {

/// One letter of the ordered alphabet 1 < 1' < 2 < 2' < ... < n < n'.
///
/// The barred letter k̄ is written k' in machine-readable text.  Member order
/// makes the defaulted comparison coincide with the alphabet order.
struct Letter {
    int value = 1;        ///< 1-based numeric part, in [1, n]
    bool barred = false;  ///< true for k', false for k

    friend constexpr auto operator<=>(const Letter&, const Letter&) = default;
};

/// 0-based position of a letter in the alphabet order.
constexpr int rank(Letter g) { return 2 * (g.value - 1) + (g.barred ? 1 : 0); }

/// Inverse of rank().
constexpr Letter letter_of_rank(int r) { return Letter{r / 2 + 1, r % 2 != 0}; }

/// The unbarred letter k.
constexpr Letter unbarred(int k) { return Letter{k, false}; }

/// The barred letter k'.
constexpr Letter barred(int k) { return Letter{k, true}; }

/// A letter with a positive subscript, ordered by letter first, subscript second.
struct SubscriptedLetter {
    Letter letter;
    int subscript = 1;

    friend constexpr auto operator<=>(const SubscriptedLetter&,
                                      const SubscriptedLetter&) = default;
};

/// The plain letter underlying either letter kind; lets tableau code accept both.
constexpr Letter base_letter(Letter g) { return g; }
constexpr Letter base_letter(const SubscriptedLetter& s) { return s.letter; }

/// Renders "3" or "3'".
inline std::string to_token(Letter g) {
    return std::to_string(g.value) + (g.barred ? "'" : "");
}

/// Renders "3_2" or "3'_2".
inline std::string to_token(const SubscriptedLetter& s) {
    return to_token(s.letter) + "_" + std::to_string(s.subscript);
}

/// Parses "3" or "3'"; rejects anything else.
inline Letter letter_from_token(const std::string& tok) {
    std::size_t i = 0;
    while (i < tok.size() && tok[i] >= '0' && tok[i] <= '9') ++i;
    if (i == 0) throw ParseError("letter token must start with a digit: '" + tok + "'");
    bool bar = false;
    if (i < tok.size()) {
        if (tok.substr(i) != "'")
            throw ParseError("trailing characters in letter token: '" + tok + "'");
        bar = true;
    }
    int v = std::atoi(tok.substr(0, i).c_str());
    if (v < 1) throw ParseError("letter value must be positive: '" + tok + "'");
    return Letter{v, bar};
}

/// Parses "3_2" or "3'_2".
inline SubscriptedLetter subscripted_from_token(const std::string& tok) {
    auto us = tok.find('_');
    if (us == std::string::npos)
        throw ParseError("subscripted letter token needs '_': '" + tok + "'");
    Letter g = letter_from_token(tok.substr(0, us));
    const std::string sub = tok.substr(us + 1);
    if (sub.empty() || sub.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("subscript must be a positive integer: '" + tok + "'");
    int s = std::atoi(sub.c_str());
    if (s < 1) throw ParseError("subscript must be positive: '" + tok + "'");
    return SubscriptedLetter{g, s};
}

}  // namespace sptab
