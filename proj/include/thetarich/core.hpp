#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace thetarich {

/// Index of a letter within its Alphabet.
using Letter = std::int32_t;

class Word;

/// An ordered set of named letters. Names may span several characters
/// ("a'" is one letter). Immutable and cheap to copy (shared state).
class Alphabet {
public:
    /// Throws std::invalid_argument on empty or duplicate names.
    explicit Alphabet(std::vector<std::string> letter_names);

    std::size_t size() const { return impl_->names.size(); }
    const std::string& name(Letter a) const;
    const std::vector<std::string>& names() const { return impl_->names; }

    /// Letter with the given name, if declared.
    std::optional<Letter> find(std::string_view name) const;

    /// Tokenizes `text` greedily by declared letter names, longest match
    /// first; whitespace between tokens is skipped. Throws
    /// std::invalid_argument naming the offending position on failure.
    Word parse(std::string_view text) const;

    /// Same letter names in the same order. Words and antimorphisms built
    /// from compatible alphabets interoperate.
    bool compatible_with(const Alphabet& other) const;

private:
    struct Impl {
        std::vector<std::string> names;
        // letter ids sorted by decreasing name length, for greedy parsing
        std::vector<Letter> by_length;
    };
    std::shared_ptr<const Impl> impl_;
};

/// A finite sequence of letters over one Alphabet. Immutable value type;
/// length counts letters, not display characters.
class Word {
public:
    Word(Alphabet alphabet, std::vector<Letter> letters);
    static Word empty(Alphabet alphabet) { return Word(std::move(alphabet), {}); }

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t size() const { return letters_.size(); }
    bool is_empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    std::span<const Letter> letters() const { return letters_; }

    Word subword(std::size_t pos, std::size_t len) const;
    Word prefix(std::size_t len) const { return subword(0, len); }
    Word suffix(std::size_t len) const { return subword(size() - len, len); }
    Word appended(Letter x) const;
    /// Concatenation; alphabets must be compatible.
    Word operator+(const Word& rhs) const;

    /// Concatenated letter names.
    std::string display() const;

    /// True if `f` occurs starting at position `pos`.
    bool matches_at(std::size_t pos, const Word& f) const;

    bool operator==(const Word& rhs) const { return letters_ == rhs.letters_; }
    /// Lexicographic by letter index; meaningful within one alphabet.
    std::strong_ordering operator<=>(const Word& rhs) const;

private:
    Alphabet alphabet_;
    std::vector<Letter> letters_;
};

/// An involutory antimorphism over an Alphabet: reversal composed with an
/// involutory letter permutation. The reversal mapping itself is the
/// identity-permutation instance.
class Antimorphism {
public:
    /// permutation[a] is the image of letter a. Throws std::invalid_argument
    /// unless the permutation is an involution on the alphabet.
    Antimorphism(Alphabet alphabet, std::vector<Letter> permutation);

    static Antimorphism reversal(Alphabet alphabet);
    /// Builds from explicit cycles: each pair (a,b) with a!=b swaps, each
    /// listed (a,a) fixes. Every letter must be covered exactly once.
    static Antimorphism from_cycles(Alphabet alphabet,
                                    const std::vector<std::pair<Letter, Letter>>& cycles);

    const Alphabet& alphabet() const { return alphabet_; }
    Letter image(Letter a) const { return perm_[static_cast<std::size_t>(a)]; }
    bool fixes(Letter a) const { return image(a) == a; }
    std::size_t fixed_letter_count() const;
    bool is_reversal() const;

    /// Reverse of w with the permutation applied letterwise. Involution.
    /// Throws std::invalid_argument on alphabet mismatch.
    Word apply(const Word& w) const;

    /// w == apply(w), without materializing the image.
    bool palindrome(const Word& w) const;

private:
    Alphabet alphabet_;
    std::vector<Letter> perm_;
};

/// Queryable factor structure over one finite word: per-length factor sets,
/// occurrence lists and special-factor flags, all observed within the window.
class FactorIndex {
public:
    /// Indexes factors of length 0..max_len (clamped to |source|).
    FactorIndex(Word source, std::size_t max_len);

    const Word& source() const { return source_; }
    std::size_t max_len() const { return max_len_; }

    /// C(n): number of distinct factors of length n.
    std::size_t factor_count(std::size_t n) const;
    /// Distinct factors of length n in lexicographic order.
    std::vector<Word> factors(std::size_t n) const;

    bool contains(const Word& f) const;
    /// Strictly increasing start positions of f in the source. Falls back to
    /// a direct scan for |f| > max_len. The empty word occurs at 0..|source|.
    std::vector<std::size_t> occurrences(const Word& f) const;

    /// Distinct letters a such that fa (resp. af) occurs in the window.
    std::vector<Letter> right_extensions(const Word& f) const;
    std::vector<Letter> left_extensions(const Word& f) const;
    bool is_right_special(const Word& f) const { return right_extensions(f).size() >= 2; }
    bool is_left_special(const Word& f) const { return left_extensions(f).size() >= 2; }

    std::vector<Word> left_special(std::size_t n) const;
    std::vector<Word> right_special(std::size_t n) const;
    std::vector<Word> bispecial(std::size_t n) const;
    /// Left or right special factors of length n.
    std::vector<Word> special(std::size_t n) const;

private:
    struct Entry {
        std::size_t first;                 // first occurrence
        std::vector<std::size_t> occ;      // all occurrences, increasing
    };
    // entries_[n] sorted lexicographically by factor content
    const Entry* lookup(const Word& f) const;
    Word factor_at(std::size_t start, std::size_t len) const;

    Word source_;
    std::size_t max_len_;
    std::vector<std::vector<Entry>> entries_;
};

/// Complete return words to f within idx.source: for each pair of
/// consecutive occurrences i<j of f, the factor source[i .. j+|f|-1]
/// (exactly two occurrences of f, one as prefix and one as suffix).
/// Fewer than two occurrences yield an empty list.
std::vector<Word> complete_return_words(const FactorIndex& idx, const Word& f);

}  // namespace thetarich
