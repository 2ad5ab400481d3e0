#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "thetarich/core.hpp"

namespace thetarich {

/// γ(w): unordered pairs {a, Θ(a)} with a != Θ(a) such that a or Θ(a)
/// occurs in w. Each pair is stored as (min, max) by letter index.
struct GammaSet {
    std::vector<std::pair<Letter, Letter>> pairs;  // sorted

    std::size_t size() const { return pairs.size(); }
    bool contains(Letter a, Letter b) const;
};

GammaSet gamma(const Antimorphism& theta, const Word& w);

/// Per-prefix record of the incremental Θ-palindrome scan. Prefix of
/// length `length` has longest Θ-palindromic suffix of length `lps_len`;
/// `new_palindrome` is true when that suffix occurs in the prefix only
/// once (equivalently: it is a Θ-palindromic factor not seen earlier).
struct PrefixStep {
    std::size_t length;
    std::size_t lps_len;
    bool gamma_grew;       // γ(p) != γ(px) at this letter
    bool new_palindrome;
    std::size_t pal_count;   // distinct Θ-palindromic factors so far, ε included
    std::size_t gamma_size;
};

/// One pass over all prefixes of w. steps[i] describes the prefix of
/// length i+1.
std::vector<PrefixStep> scan_prefixes(const Antimorphism& theta, const Word& w);

/// All distinct Θ-palindromic factors of w, ε included, sorted by
/// (length, lexicographic).
std::vector<Word> theta_palindromic_factors(const Antimorphism& theta, const Word& w);

/// Longest suffix s of w with s = Θ(s); possibly ε.
Word longest_theta_palindromic_suffix(const Antimorphism& theta, const Word& w);

struct RichnessWitness {
    Word prefix;                     // shortest non-rich prefix
    Word suffix;                     // its longest Θ-palindromic suffix
    std::size_t suffix_occurrences;  // occurrences of that suffix in the prefix
};

struct RichnessReport {
    Word word;
    std::size_t pal_count;  // distinct Θ-palindromic factors, ε included
    std::size_t bound;      // |w| + 1 - #γ(w)
    std::size_t defect;     // bound - pal_count (not the classical defect)
    bool is_rich;           // pal_count == bound
    std::optional<RichnessWitness> witness;
};

RichnessReport richness_report(const Antimorphism& theta, const Word& w);

/// Shortest Θ-palindrome having w as a prefix: p·s·Θ(p) where w = p·s and
/// s is the longest Θ-palindromic suffix of w.
Word theta_palindromic_closure(const Antimorphism& theta, const Word& w);

/// Largest prefix length with no unioccurrent Θ-palindromic suffix
/// (0 when every nonempty prefix has one). Every longer prefix within w
/// has a unioccurrent Θ-palindromic suffix; reported as observed data.
std::size_t unioccurrent_suffix_threshold(const Antimorphism& theta, const Word& w);

}  // namespace thetarich
