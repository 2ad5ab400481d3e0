#include "thetarich/palindromic.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <unordered_set>

namespace thetarich {

namespace {

struct LetterVecHash {
    std::size_t operator()(const std::vector<Letter>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (Letter x : v) {
            h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(x));
            h *= 1099511628211ull;
        }
        return h;
    }
};

using PalSet = std::unordered_set<std::vector<Letter>, LetterVecHash>;

}  // namespace

bool GammaSet::contains(Letter a, Letter b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(a, b));
}

GammaSet gamma(const Antimorphism& theta, const Word& w) {
    if (!theta.alphabet().compatible_with(w.alphabet()))
        throw std::invalid_argument("gamma: alphabet mismatch");
    std::vector<bool> present(theta.alphabet().size(), false);
    for (std::size_t i = 0; i < w.size(); ++i) present[static_cast<std::size_t>(w[i])] = true;
    GammaSet g;
    for (Letter a = 0; a < static_cast<Letter>(theta.alphabet().size()); ++a) {
        Letter b = theta.image(a);
        if (a >= b) continue;  // fixed letters (a == b) and already-listed pairs
        if (present[static_cast<std::size_t>(a)] || present[static_cast<std::size_t>(b)])
            g.pairs.emplace_back(a, b);
    }
    return g;
}

std::vector<PrefixStep> scan_prefixes(const Antimorphism& theta, const Word& w) {
    if (!theta.alphabet().compatible_with(w.alphabet()))
        throw std::invalid_argument("scan_prefixes: alphabet mismatch");
    const std::size_t n = w.size();
    std::vector<PrefixStep> steps;
    steps.reserve(n);

    PalSet seen_pals;
    std::vector<bool> pair_present(theta.alphabet().size(), false);
    std::size_t gamma_size = 0;
    std::size_t pal_count = 1;  // ε
    std::size_t prev_lps = 0;

    std::vector<Letter> buf;
    for (std::size_t len = 1; len <= n; ++len) {
        const Letter x = w[len - 1];
        const Letter tx = theta.image(x);
        bool grew = false;
        if (x != tx) {
            const std::size_t key = static_cast<std::size_t>(std::min(x, tx));
            if (!pair_present[key]) {
                pair_present[key] = true;
                ++gamma_size;
                grew = true;
            }
        }

        // Longest Θ-palindromic suffix of the current prefix. Stripping the
        // outer letters of a Θ-palindromic suffix of length L >= 2 yields one
        // of length L-2 for the previous prefix, so L <= prev_lps + 2.
        std::size_t lps = 0;
        for (std::size_t cand = std::min(prev_lps + 2, len); cand > 0; --cand) {
            const std::size_t pos = len - cand;
            bool ok = true;
            for (std::size_t i = 0, j = cand - 1; i <= j; ++i, --j) {
                if (w[pos + i] != theta.image(w[pos + j])) { ok = false; break; }
                if (i >= j) break;
            }
            if (ok) { lps = cand; break; }
        }
        prev_lps = lps;
        assert(!grew || lps == 0);

        bool fresh = false;
        if (lps > 0) {
            auto span = w.letters();
            buf.assign(span.begin() + static_cast<std::ptrdiff_t>(len - lps),
                       span.begin() + static_cast<std::ptrdiff_t>(len));
            if (seen_pals.insert(buf).second) {
                fresh = true;
                ++pal_count;
            }
        }

        steps.push_back(PrefixStep{len, lps, grew, fresh, pal_count, gamma_size});
    }
    return steps;
}

std::vector<Word> theta_palindromic_factors(const Antimorphism& theta, const Word& w) {
    auto steps = scan_prefixes(theta, w);
    std::vector<Word> out;
    out.push_back(Word::empty(w.alphabet()));
    for (const auto& s : steps)
        if (s.new_palindrome) out.push_back(w.subword(s.length - s.lps_len, s.lps_len));
    std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

Word longest_theta_palindromic_suffix(const Antimorphism& theta, const Word& w) {
    if (!theta.alphabet().compatible_with(w.alphabet()))
        throw std::invalid_argument("longest_theta_palindromic_suffix: alphabet mismatch");
    const std::size_t n = w.size();
    for (std::size_t len = n; len > 0; --len) {
        const std::size_t pos = n - len;
        bool ok = true;
        for (std::size_t i = 0, j = len - 1; i <= j; ++i, --j) {
            if (w[pos + i] != theta.image(w[pos + j])) { ok = false; break; }
            if (i >= j) break;
        }
        if (ok) return w.suffix(len);
    }
    return Word::empty(w.alphabet());
}

RichnessReport richness_report(const Antimorphism& theta, const Word& w) {
    auto steps = scan_prefixes(theta, w);
    RichnessReport rep{w, 1, 1, 0, true, std::nullopt};
    std::size_t bound = 1;  // ε only
    for (const auto& s : steps) {
        if (!s.gamma_grew) ++bound;  // |p|+1-#γ(p) gains except when γ grows
        if (!s.gamma_grew && !s.new_palindrome && !rep.witness) {
            Word prefix = w.prefix(s.length);
            Word suffix = w.subword(s.length - s.lps_len, s.lps_len);
            std::size_t occ = 0;
            if (suffix.is_empty()) {
                occ = prefix.size() + 1;
            } else {
                for (std::size_t i = 0; i + suffix.size() <= prefix.size(); ++i)
                    if (prefix.matches_at(i, suffix)) ++occ;
            }
            rep.witness = RichnessWitness{std::move(prefix), std::move(suffix), occ};
        }
    }
    rep.pal_count = steps.empty() ? 1 : steps.back().pal_count;
    rep.bound = bound;
    rep.defect = bound - rep.pal_count;
    rep.is_rich = rep.defect == 0;
    return rep;
}

Word theta_palindromic_closure(const Antimorphism& theta, const Word& w) {
    Word s = longest_theta_palindromic_suffix(theta, w);
    const std::size_t plen = w.size() - s.size();
    auto span = w.letters();
    std::vector<Letter> letters(span.begin(), span.end());
    letters.reserve(w.size() + plen);
    for (std::size_t i = plen; i > 0; --i) letters.push_back(theta.image(w[i - 1]));
    return Word(w.alphabet(), std::move(letters));
}

std::size_t unioccurrent_suffix_threshold(const Antimorphism& theta, const Word& w) {
    auto steps = scan_prefixes(theta, w);
    std::size_t threshold = 0;
    for (const auto& s : steps)
        if (!s.new_palindrome) threshold = s.length;
    return threshold;
}

}  // namespace thetarich
