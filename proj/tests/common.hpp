#pragma once

// Shared fixtures for the test suites: the standard alphabets/antimorphisms
// used throughout, plus conversion helpers between oracle letter vectors and
// library words.

#include <random>
#include <string>
#include <vector>

#include "thetarich/core.hpp"

namespace fixtures {

using thetarich::Alphabet;
using thetarich::Antimorphism;
using thetarich::Letter;
using thetarich::Word;

/// {a, a'} with Θ exchanging them.
inline Alphabet swap2_alphabet() { return Alphabet({"a", "a'"}); }
inline Antimorphism swap2_theta() {
    return Antimorphism(swap2_alphabet(), {1, 0});
}

/// {a, a', c} with Θ: a<->a', c fixed.
inline Alphabet aac_alphabet() { return Alphabet({"a", "a'", "c"}); }
inline Antimorphism aac_theta() {
    return Antimorphism(aac_alphabet(), {1, 0, 2});
}

/// {a, b} with Θ = reversal.
inline Alphabet ab_alphabet() { return Alphabet({"a", "b"}); }
inline Antimorphism ab_reversal() { return Antimorphism::reversal(ab_alphabet()); }

/// {0, 1} with Θ = reversal (Sturmian setting).
inline Alphabet binary_alphabet() { return Alphabet({"0", "1"}); }
inline Antimorphism binary_reversal() { return Antimorphism::reversal(binary_alphabet()); }

inline Word mk(const Alphabet& a, const std::vector<Letter>& letters) {
    return Word(a, letters);
}

inline std::vector<Letter> random_letters(std::mt19937& rng, std::size_t len,
                                          std::size_t alphabet_size) {
    std::uniform_int_distribution<Letter> dist(0, static_cast<Letter>(alphabet_size - 1));
    std::vector<Letter> out(len);
    for (auto& x : out) x = dist(rng);
    return out;
}

}  // namespace fixtures
