#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "thetarich/core.hpp"
#include "thetarich/generators.hpp"

namespace thetarich {

/// Parses a theta spec against a fixed alphabet. Grammar: whitespace
/// separated tokens; `x<->y` swaps x and y, a bare `x` (or `x<->x`) fixes x.
/// Every alphabet letter must be listed exactly once; unknown names,
/// duplicates and omissions raise std::invalid_argument naming the token.
Antimorphism parse_theta_spec(const Alphabet& alphabet, std::string_view text);

/// Same grammar, with the alphabet derived from the spec itself: letters in
/// order of first appearance.
Antimorphism theta_from_spec(std::string_view text);

/// Canonical rendering: letters ascending, each swap printed once as
/// `x<->y`, fixed letters bare. parse_theta_spec round-trips it.
std::string theta_spec_string(const Antimorphism& theta);

/// A word-spec document: `alphabet: a a' c`, `theta: a<->a' c`, `word: ...`
/// lines in any order. Blank lines and `#` comments are skipped; several
/// `word:` lines concatenate in order.
struct WordSpec {
    Alphabet alphabet;
    Antimorphism theta;
    Word word;
};

WordSpec parse_word_spec(std::string_view text);

/// "lo..hi" or a single "n"; throws std::invalid_argument naming the text.
std::pair<std::size_t, std::size_t> parse_n_range(std::string_view text);

/// A generator spec resolved to a word source. theta is present only when
/// the spec itself determines it (corpus-backed specs).
struct ResolvedSource {
    std::shared_ptr<const WordGenerator> generator;
    std::optional<Antimorphism> theta;
};

/// Grammar: `<corpus name>`, `morphic:<corpus name>`, `periodic:<word>`,
/// `sturmian:d1,d2,...` (a trailing ",..." is tolerated), or
/// `theta-standard:seed=<word>,directive=<word>`. periodic and
/// theta-standard read their payload over theta's alphabet and require it;
/// sturmian words live over {0,1}. Errors raise std::invalid_argument
/// naming the offending part.
ResolvedSource resolve_generator_spec(const std::string& spec,
                                      const std::optional<Antimorphism>& theta);

}  // namespace thetarich
