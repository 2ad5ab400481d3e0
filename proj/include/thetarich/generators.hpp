#pragma once

#include <memory>
#include <string>
#include <vector>

#include "thetarich/core.hpp"

namespace thetarich {

/// Deterministic producer of prefixes of one fixed, usually infinite, word.
/// prefix(m) is a prefix of prefix(n) whenever m <= n.
class WordGenerator {
public:
    virtual ~WordGenerator() = default;
    virtual const Alphabet& alphabet() const = 0;
    /// First n letters. Throws std::length_error when the generator cannot
    /// produce that many (finite limits, step budgets).
    virtual Word prefix(std::size_t n) const = 0;
};

/// v v v ... ; v must be nonempty.
std::unique_ptr<WordGenerator> periodic_word(Word v);

/// Characteristic Sturmian word over {"0","1"} built from standard
/// sequences: s_{-1} = 1, s_0 = 0, s_k = s_{k-1}^{d_k} s_{k-2}, with the
/// directive integers cycled indefinitely. All directive entries must be
/// positive. Directive (1) cycled yields the Fibonacci word. `depth` caps
/// the number of recursion steps used to satisfy one prefix request.
std::unique_ptr<WordGenerator> sturmian_standard(std::vector<unsigned> directive,
                                                 std::size_t depth = 64);

/// Letter-to-word substitution; all images must be nonempty (non-erasing).
class Morphism {
public:
    /// images[a] is the image of source letter a; every source letter needs one.
    Morphism(Alphabet source, Alphabet target, std::vector<Word> images);

    const Alphabet& source_alphabet() const { return source_; }
    const Alphabet& target_alphabet() const { return target_; }
    const Word& image(Letter a) const { return images_.at(static_cast<std::size_t>(a)); }
    Word apply(const Word& w) const;

private:
    Alphabet source_;
    Alphabet target_;
    std::vector<Word> images_;
};

/// Image of `base` under `m`, prefix-coherent.
std::unique_ptr<WordGenerator> morphic_image(Morphism m,
                                             std::shared_ptr<const WordGenerator> base);

/// Iterated Θ-palindromic closure with seed: u_0 = seed and
/// u_{k+1} = (u_k t_{k+1})^⊕ where t is the directive, cycled indefinitely.
/// prefix(n) evaluates Ψ steps lazily until the output covers n letters and
/// throws std::length_error if step_budget steps do not suffice.
std::unique_ptr<WordGenerator> theta_standard_with_seed(Antimorphism theta, Word seed,
                                                        Word directive,
                                                        std::size_t step_budget = 100000);

struct CorpusEntry {
    std::string name;
    std::string summary;
    Antimorphism theta;
    std::shared_ptr<const WordGenerator> generator;
    bool periodic;  // full language visible in a window of one period + n
};

/// The built-in study words: the five workhorse examples over {a,a',c}
/// plus the Fibonacci word under plain reversal.
std::vector<CorpusEntry> builtin_corpus();

/// Entry by name; throws std::invalid_argument for unknown names.
CorpusEntry corpus_entry(const std::string& name);

}  // namespace thetarich
