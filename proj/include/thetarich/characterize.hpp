#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thetarich/complexity.hpp"
#include "thetarich/core.hpp"

namespace thetarich {

/// Verifiable richness-related properties of a word on a window.
enum class PropertyId {
    ups,                 // longest Θ-palindromic suffix of each prefix unioccurrent
    alternation,         // occurrences of f and Θ(f) alternate, all factors
    v_theta_factor,      // factors v…Θ(v) without interior v/Θ(v) are Θ-palindromes
    sufficient,          // palindromic returns + letter alternation + letter-level v…Θ(v)
    letter_alternation,  // occurrences of a and Θ(a) alternate, letters only
    crw_palindrome,      // complete returns to Θ-palindromic factors are Θ-palindromes
};

/// Stable identifier used in reports and CLI listings.
std::string_view property_name(PropertyId id);
std::optional<PropertyId> property_from_name(std::string_view name);
std::vector<PropertyId> all_properties();

/// Offending factor(s) plus window positions; re-checkable against the source.
struct Counterexample {
    std::vector<Word> factors;
    std::vector<std::size_t> positions;
    std::string detail;
};

struct CharacterizationResult {
    PropertyId property;
    bool holds;
    std::optional<Counterexample> counterexample;  // present iff !holds
};

/// Every complete return word to a nonempty Θ-palindromic factor must itself
/// be a Θ-palindrome. Returns arising from occurrences within |f| of either
/// window edge are skipped: truncation fabricates incomplete returns.
CharacterizationResult check_return_words_palindromic(const Antimorphism& theta,
                                                      const FactorIndex& idx);

/// Occurrences of f and Θ(f), merged by position, must strictly alternate.
/// Requires f != Θ(f); throws std::invalid_argument otherwise. The result is
/// labeled letter_alternation for single letters, alternation otherwise.
CharacterizationResult check_alternation(const Antimorphism& theta, const FactorIndex& idx,
                                         const Word& f);

/// check_alternation over every non-Θ-palindromic letter of the window.
CharacterizationResult check_letter_alternation(const Antimorphism& theta,
                                                const FactorIndex& idx);

/// check_alternation over every factor f != Θ(f) with |f| <= len_cap.
CharacterizationResult check_factor_alternation(const Antimorphism& theta,
                                                const FactorIndex& idx, std::size_t len_cap);

/// For every nonempty factor v with |v| <= len_cap: any window factor that
/// begins with v, ends with Θ(v) and contains no other occurrence of either
/// must be a Θ-palindrome (for v = Θ(v) these are the complete returns to v).
/// Also requires letter alternation. len_cap is clamped to idx.max_len().
CharacterizationResult check_v_theta_factors(const Antimorphism& theta, const FactorIndex& idx,
                                             std::size_t len_cap);

/// Conjunction of palindromic returns, letter alternation, and the
/// letter-level v…Θ(v) condition; together they force richness.
CharacterizationResult check_sufficient_conditions(const Antimorphism& theta,
                                                   const FactorIndex& idx);

/// Each prefix must have a unioccurrent longest Θ-palindromic suffix, except
/// prefixes whose last letter enlarges γ. Unioccurrence is recounted from
/// occurrence positions, independently of the richness bookkeeping.
CharacterizationResult check_unioccurrent_suffixes(const Antimorphism& theta,
                                                   const FactorIndex& idx);

/// All property verdicts side by side, with the implications among them
/// verified. Factor-quantified checks use factor_cap = idx.max_len().
struct CharacterizationTable {
    std::size_t window_length;
    std::size_t factor_cap;
    bool closed_on_window;  // false ⇒ the balance sweep is omitted (partial)
    bool rich;              // Θ-palindrome count meets the γ bound
    bool ups;
    bool v_theta_factor;
    bool sufficient;
    bool crw_palindrome;
    bool alternation;
    bool letter_alternation;
    /// Balance equality at every 1 <= n < factor_cap; present when closed.
    std::optional<bool> equality_all_n;
    /// Violated implications among the verdicts above; empty when coherent.
    std::vector<std::string> inconsistencies;
};

CharacterizationTable cross_check_characterizations(const Antimorphism& theta,
                                                    const FactorIndex& idx);
CharacterizationTable cross_check_characterizations(const Antimorphism& theta, const Word& w);

/// One observed complete return word to the k-th bispecial, keyed by the
/// letter following the opening occurrence.
struct ReturnObservation {
    std::size_t k;
    Letter letter;
    Word word;
    bool theta_palindromic;
};

/// Largest k whose bispecial has observed non-Θ-palindromic returns for both
/// letters of the pair {a, Θ(a)}; absent when no such k is on the window.
struct ObservedBranchIndex {
    Letter letter;  // min(a, Θ(a))
    std::optional<std::size_t> value;
};

/// Window view of the bispecial tower: the chain w_0 = ε, w_1, … of
/// bispecial factors, their extension letters, and their return words.
struct EpisturmianProfile {
    std::size_t length_cap;  // special factors scanned for lengths 1..cap
    std::vector<std::size_t> left_special_counts;
    bool at_most_one_left_special;
    bool closed_on_window;
    bool theta_episturmian_on_window;  // both of the above
    /// Bispecials by increasing length; truncated where a length carries two
    /// or more bispecials (the chain is then meaningless).
    std::vector<Word> bispecials;
    bool bispecial_chain_coherent;  // each entry is a prefix of the next
    /// extension_letters[k] extends bispecials[k] toward bispecials[k+1];
    /// filled while the chain stays coherent.
    std::vector<Letter> extension_letters;
    std::vector<ReturnObservation> returns;  // margin-trimmed, deduplicated
    std::vector<ObservedBranchIndex> branch_indices;
};

/// Scans lengths 1..length_cap (clamped to idx.max_len() - 1).
EpisturmianProfile episturmian_profile(const Antimorphism& theta, const FactorIndex& idx,
                                       std::size_t length_cap);

/// Richness test requiring only the letter-level counts: P(1) + P(2) against
/// ΔC(1) + 2. rhs_alternative records the once-smaller constant for reports.
struct EpisturmianRichnessCriterion {
    std::size_t p1;
    std::size_t p2;
    long long dc1;
    std::size_t lhs;            // p1 + p2
    long long rhs;              // dc1 + 2
    long long rhs_alternative;  // dc1 + 1
    bool rich_predicted;        // lhs == rhs
    bool alternative_satisfied; // lhs == rhs_alternative
    std::vector<SweepRow> sweep;  // balance evidence for 1 <= n < idx.max_len()
};

/// Requires the word to be Θ-episturmian on the window (checked via
/// episturmian_profile); throws std::invalid_argument otherwise.
EpisturmianRichnessCriterion episturmian_richness_criterion(const Antimorphism& theta,
                                                            const FactorIndex& idx);

/// Structural clauses the bispecial tower's return words must satisfy.
struct ReturnStructureReport {
    /// Returns to bispecials keyed by a Θ-palindromic letter are Θ-palindromes.
    bool fixed_letter_returns_palindromic;
    /// For k up to the branch index: r = w_k·a·w_k, and a occurs neither in
    /// w_k nor in any other return to w_k.
    bool early_returns_sandwich;
    /// Beyond the branch index at most one of the pair's returns is observed.
    bool late_returns_exclusive;
    /// Beyond the branch index a Θ-palindromic return stays Θ-palindromic at
    /// the next level (or disappears).
    bool palindromic_returns_persist;
    std::vector<std::string> violations;  // empty when all clauses hold

    bool all_hold() const {
        return fixed_letter_returns_palindromic && early_returns_sandwich &&
               late_returns_exclusive && palindromic_returns_persist;
    }
};

ReturnStructureReport return_word_structure_check(const Antimorphism& theta,
                                                  const FactorIndex& idx,
                                                  std::size_t length_cap);

}  // namespace thetarich
