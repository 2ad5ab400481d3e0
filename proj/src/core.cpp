#include "thetarich/core.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace thetarich {

// ---------------------------------------------------------------------------
// Alphabet

Alphabet::Alphabet(std::vector<std::string> letter_names) {
    if (letter_names.empty())
        throw std::invalid_argument("alphabet must declare at least one letter");
    std::unordered_set<std::string_view> seen;
    for (const auto& n : letter_names) {
        if (n.empty())
            throw std::invalid_argument("alphabet letter names must be non-empty");
        if (!seen.insert(n).second)
            throw std::invalid_argument("duplicate letter name '" + n + "' in alphabet");
    }
    auto impl = std::make_shared<Impl>();
    impl->names = std::move(letter_names);
    impl->by_length.resize(impl->names.size());
    for (std::size_t i = 0; i < impl->names.size(); ++i)
        impl->by_length[i] = static_cast<Letter>(i);
    std::stable_sort(impl->by_length.begin(), impl->by_length.end(),
                     [&](Letter a, Letter b) {
                         return impl->names[static_cast<std::size_t>(a)].size() >
                                impl->names[static_cast<std::size_t>(b)].size();
                     });
    impl_ = std::move(impl);
}

const std::string& Alphabet::name(Letter a) const {
    if (a < 0 || static_cast<std::size_t>(a) >= impl_->names.size())
        throw std::out_of_range("letter index out of range");
    return impl_->names[static_cast<std::size_t>(a)];
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
    for (std::size_t i = 0; i < impl_->names.size(); ++i)
        if (impl_->names[i] == name) return static_cast<Letter>(i);
    return std::nullopt;
}

bool Alphabet::compatible_with(const Alphabet& other) const {
    return impl_ == other.impl_ || impl_->names == other.impl_->names;
}

Word Alphabet::parse(std::string_view text) const {
    std::vector<Letter> letters;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            continue;
        }
        bool matched = false;
        for (Letter a : impl_->by_length) {  // longest name first
            const std::string& n = impl_->names[static_cast<std::size_t>(a)];
            if (text.substr(pos, n.size()) == n) {
                letters.push_back(a);
                pos += n.size();
                matched = true;
                break;
            }
        }
        if (!matched)
            throw std::invalid_argument("cannot tokenize word at position " +
                                        std::to_string(pos) + ": '" +
                                        std::string(text.substr(pos, 8)) +
                                        "' matches no declared letter");
    }
    return Word(*this, std::move(letters));
}

// ---------------------------------------------------------------------------
// Word

Word::Word(Alphabet alphabet, std::vector<Letter> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
    for (Letter a : letters_)
        if (a < 0 || static_cast<std::size_t>(a) >= alphabet_.size())
            throw std::invalid_argument("word letter outside its alphabet");
}

Word Word::subword(std::size_t pos, std::size_t len) const {
    if (pos > size() || len > size() - pos)
        throw std::out_of_range("subword range outside word");
    return Word(alphabet_,
                std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                    letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

Word Word::appended(Letter x) const {
    std::vector<Letter> ls = letters_;
    ls.push_back(x);
    return Word(alphabet_, std::move(ls));
}

Word Word::operator+(const Word& rhs) const {
    if (!alphabet_.compatible_with(rhs.alphabet_))
        throw std::invalid_argument("concatenation of words over different alphabets");
    std::vector<Letter> ls = letters_;
    ls.insert(ls.end(), rhs.letters_.begin(), rhs.letters_.end());
    return Word(alphabet_, std::move(ls));
}

std::string Word::display() const {
    std::string out;
    for (Letter a : letters_) out += alphabet_.name(a);
    return out;
}

bool Word::matches_at(std::size_t pos, const Word& f) const {
    if (pos + f.size() > size()) return false;
    return std::equal(f.letters_.begin(), f.letters_.end(), letters_.begin() + static_cast<std::ptrdiff_t>(pos));
}

std::strong_ordering Word::operator<=>(const Word& rhs) const {
    return std::lexicographical_compare_three_way(letters_.begin(), letters_.end(),
                                                  rhs.letters_.begin(), rhs.letters_.end());
}

// ---------------------------------------------------------------------------
// Antimorphism

Antimorphism::Antimorphism(Alphabet alphabet, std::vector<Letter> permutation)
    : alphabet_(std::move(alphabet)), perm_(std::move(permutation)) {
    const std::size_t k = alphabet_.size();
    if (perm_.size() != k)
        throw std::invalid_argument("permutation size does not match alphabet size");
    for (std::size_t a = 0; a < k; ++a) {
        Letter img = perm_[a];
        if (img < 0 || static_cast<std::size_t>(img) >= k)
            throw std::invalid_argument("permutation image outside alphabet");
        if (perm_[static_cast<std::size_t>(img)] != static_cast<Letter>(a))
            throw std::invalid_argument(
                "letter permutation is not an involution: perm(perm('" +
                alphabet_.name(static_cast<Letter>(a)) + "')) != '" +
                alphabet_.name(static_cast<Letter>(a)) + "'");
    }
}

Antimorphism Antimorphism::reversal(Alphabet alphabet) {
    std::vector<Letter> id(alphabet.size());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<Letter>(i);
    return Antimorphism(std::move(alphabet), std::move(id));
}

Antimorphism Antimorphism::from_cycles(Alphabet alphabet,
                                       const std::vector<std::pair<Letter, Letter>>& cycles) {
    std::vector<Letter> perm(alphabet.size(), -1);
    for (auto [a, b] : cycles) {
        for (Letter x : {a, b})
            if (x < 0 || static_cast<std::size_t>(x) >= alphabet.size())
                throw std::invalid_argument("cycle letter outside alphabet");
        if (perm[static_cast<std::size_t>(a)] != -1 ||
            (a != b && perm[static_cast<std::size_t>(b)] != -1))
            throw std::invalid_argument("letter '" + alphabet.name(a) +
                                        "' listed in more than one cycle");
        perm[static_cast<std::size_t>(a)] = b;
        perm[static_cast<std::size_t>(b)] = a;
    }
    for (std::size_t a = 0; a < perm.size(); ++a)
        if (perm[a] == -1)
            throw std::invalid_argument("letter '" + alphabet.name(static_cast<Letter>(a)) +
                                        "' not covered by any cycle");
    return Antimorphism(std::move(alphabet), std::move(perm));
}

std::size_t Antimorphism::fixed_letter_count() const {
    std::size_t k = 0;
    for (std::size_t a = 0; a < perm_.size(); ++a)
        if (perm_[a] == static_cast<Letter>(a)) ++k;
    return k;
}

bool Antimorphism::is_reversal() const { return fixed_letter_count() == perm_.size(); }

Word Antimorphism::apply(const Word& w) const {
    if (!alphabet_.compatible_with(w.alphabet()))
        throw std::invalid_argument("word alphabet does not match antimorphism alphabet");
    std::vector<Letter> out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        out[i] = perm_[static_cast<std::size_t>(w[w.size() - 1 - i])];
    return Word(alphabet_, std::move(out));
}

bool Antimorphism::palindrome(const Word& w) const {
    if (!alphabet_.compatible_with(w.alphabet()))
        throw std::invalid_argument("word alphabet does not match antimorphism alphabet");
    const std::size_t n = w.size();
    for (std::size_t i = 0; i <= n / 2 && i < n; ++i) {
        if (w[i] != perm_[static_cast<std::size_t>(w[n - 1 - i])]) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// FactorIndex

namespace {

struct SpanKey {
    const Letter* data;
    std::size_t len;
    bool operator==(const SpanKey& o) const {
        return len == o.len && std::equal(data, data + len, o.data);
    }
};

struct SpanKeyHash {
    std::size_t operator()(const SpanKey& k) const {
        std::size_t h = 1469598103934665603ull;
        for (std::size_t i = 0; i < k.len; ++i) {
            h ^= static_cast<std::size_t>(k.data[i]) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace

FactorIndex::FactorIndex(Word source, std::size_t max_len)
    : source_(std::move(source)), max_len_(std::min(max_len, source_.size())) {
    entries_.resize(max_len_ + 1);
    const std::span<const Letter> ls = source_.letters();
    for (std::size_t n = 0; n <= max_len_; ++n) {
        std::unordered_map<SpanKey, std::size_t, SpanKeyHash> first_of;
        std::vector<Entry>& level = entries_[n];
        for (std::size_t start = 0; start + n <= source_.size(); ++start) {
            SpanKey key{ls.data() + start, n};
            auto [it, inserted] = first_of.try_emplace(key, level.size());
            if (inserted) level.push_back(Entry{start, {}});
            level[it->second].occ.push_back(start);
        }
        std::sort(level.begin(), level.end(), [&](const Entry& a, const Entry& b) {
            return std::lexicographical_compare(ls.begin() + static_cast<std::ptrdiff_t>(a.first),
                                                ls.begin() + static_cast<std::ptrdiff_t>(a.first + n),
                                                ls.begin() + static_cast<std::ptrdiff_t>(b.first),
                                                ls.begin() + static_cast<std::ptrdiff_t>(b.first + n));
        });
    }
}

Word FactorIndex::factor_at(std::size_t start, std::size_t len) const {
    return source_.subword(start, len);
}

std::size_t FactorIndex::factor_count(std::size_t n) const {
    if (n > max_len_) throw std::out_of_range("factor length exceeds index max_len");
    return entries_[n].size();
}

std::vector<Word> FactorIndex::factors(std::size_t n) const {
    if (n > max_len_) throw std::out_of_range("factor length exceeds index max_len");
    std::vector<Word> out;
    out.reserve(entries_[n].size());
    for (const Entry& e : entries_[n]) out.push_back(factor_at(e.first, n));
    return out;
}

const FactorIndex::Entry* FactorIndex::lookup(const Word& f) const {
    const std::size_t n = f.size();
    if (n > max_len_) return nullptr;
    const std::span<const Letter> ls = source_.letters();
    const auto& level = entries_[n];
    auto it = std::lower_bound(level.begin(), level.end(), f, [&](const Entry& e, const Word& w) {
        return std::lexicographical_compare(ls.begin() + static_cast<std::ptrdiff_t>(e.first),
                                            ls.begin() + static_cast<std::ptrdiff_t>(e.first + n),
                                            w.letters().begin(), w.letters().end());
    });
    if (it == level.end() || !source_.matches_at(it->first, f)) return nullptr;
    return &*it;
}

bool FactorIndex::contains(const Word& f) const {
    if (f.size() <= max_len_) return lookup(f) != nullptr;
    return !occurrences(f).empty();
}

std::vector<std::size_t> FactorIndex::occurrences(const Word& f) const {
    if (f.size() <= max_len_) {
        const Entry* e = lookup(f);
        return e ? e->occ : std::vector<std::size_t>{};
    }
    std::vector<std::size_t> occ;  // direct scan beyond the indexed lengths
    if (f.size() > source_.size()) return occ;
    for (std::size_t start = 0; start + f.size() <= source_.size(); ++start)
        if (source_.matches_at(start, f)) occ.push_back(start);
    return occ;
}

std::vector<Letter> FactorIndex::right_extensions(const Word& f) const {
    std::set<Letter> ext;
    for (std::size_t i : occurrences(f))
        if (i + f.size() < source_.size()) ext.insert(source_[i + f.size()]);
    return {ext.begin(), ext.end()};
}

std::vector<Letter> FactorIndex::left_extensions(const Word& f) const {
    std::set<Letter> ext;
    for (std::size_t i : occurrences(f))
        if (i > 0) ext.insert(source_[i - 1]);
    return {ext.begin(), ext.end()};
}

namespace {
// distinct letters following (dir=+1) or preceding (dir=-1) the occurrences
std::size_t extension_count(const Word& src, const std::vector<std::size_t>& occ,
                            std::size_t len, int dir) {
    std::set<Letter> ext;
    for (std::size_t i : occ) {
        if (dir > 0) {
            if (i + len < src.size()) ext.insert(src[i + len]);
        } else if (i > 0) {
            ext.insert(src[i - 1]);
        }
    }
    return ext.size();
}
}  // namespace

std::vector<Word> FactorIndex::left_special(std::size_t n) const {
    if (n > max_len_) throw std::out_of_range("factor length exceeds index max_len");
    std::vector<Word> out;
    for (const Entry& e : entries_[n])
        if (extension_count(source_, e.occ, n, -1) >= 2) out.push_back(factor_at(e.first, n));
    return out;
}

std::vector<Word> FactorIndex::right_special(std::size_t n) const {
    if (n > max_len_) throw std::out_of_range("factor length exceeds index max_len");
    std::vector<Word> out;
    for (const Entry& e : entries_[n])
        if (extension_count(source_, e.occ, n, +1) >= 2) out.push_back(factor_at(e.first, n));
    return out;
}

std::vector<Word> FactorIndex::bispecial(std::size_t n) const {
    if (n > max_len_) throw std::out_of_range("factor length exceeds index max_len");
    std::vector<Word> out;
    for (const Entry& e : entries_[n])
        if (extension_count(source_, e.occ, n, -1) >= 2 &&
            extension_count(source_, e.occ, n, +1) >= 2)
            out.push_back(factor_at(e.first, n));
    return out;
}

std::vector<Word> FactorIndex::special(std::size_t n) const {
    if (n > max_len_) throw std::out_of_range("factor length exceeds index max_len");
    std::vector<Word> out;
    for (const Entry& e : entries_[n])
        if (extension_count(source_, e.occ, n, -1) >= 2 ||
            extension_count(source_, e.occ, n, +1) >= 2)
            out.push_back(factor_at(e.first, n));
    return out;
}

// ---------------------------------------------------------------------------

std::vector<Word> complete_return_words(const FactorIndex& idx, const Word& f) {
    std::vector<Word> out;
    const std::vector<std::size_t> occ = idx.occurrences(f);
    for (std::size_t k = 0; k + 1 < occ.size(); ++k) {
        const std::size_t i = occ[k], j = occ[k + 1];
        out.push_back(idx.source().subword(i, j + f.size() - i));
    }
    return out;
}

}  // namespace thetarich
