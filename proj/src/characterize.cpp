#include "thetarich/characterize.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <span>
#include <sstream>
#include <stdexcept>

#include "thetarich/palindromic.hpp"

namespace thetarich {

namespace {

CharacterizationResult pass(PropertyId id) { return {id, true, std::nullopt}; }

CharacterizationResult fail(PropertyId id, Counterexample cex) {
    return {id, false, std::move(cex)};
}

/// Occurrence positions whose return words fit the window with |f| margin.
std::vector<std::size_t> trimmed_occurrences(const FactorIndex& idx, const Word& f) {
    const std::size_t m = f.size();
    const std::size_t window = idx.source().size();
    std::vector<std::size_t> out;
    if (window < 2 * m) return out;
    for (std::size_t pos : idx.occurrences(f))
        if (pos >= m && pos + 2 * m <= window) out.push_back(pos);
    return out;
}

struct LabeledOccurrence {
    std::size_t pos;
    bool first;  // occurrence of f rather than Θ(f)
};

std::vector<LabeledOccurrence> merged_occurrences(const FactorIndex& idx, const Word& f,
                                                  const Word& tf) {
    std::vector<LabeledOccurrence> merged;
    for (std::size_t pos : idx.occurrences(f)) merged.push_back({pos, true});
    for (std::size_t pos : idx.occurrences(tf)) merged.push_back({pos, false});
    std::sort(merged.begin(), merged.end(),
              [](const LabeledOccurrence& a, const LabeledOccurrence& b) {
                  return a.pos < b.pos;
              });
    return merged;
}

std::size_t count_in_prefix(std::span<const Letter> letters, std::size_t prefix_len,
                            std::size_t start, std::size_t len, std::size_t cap_hits) {
    if (len == 0) return std::min(prefix_len + 1, cap_hits);
    std::size_t hits = 0;
    auto pattern = letters.subspan(start, len);
    for (std::size_t pos = 0; pos + len <= prefix_len && hits < cap_hits; ++pos)
        if (std::equal(pattern.begin(), pattern.end(), letters.begin() + pos)) ++hits;
    return hits;
}

}  // namespace

std::string_view property_name(PropertyId id) {
    switch (id) {
        case PropertyId::ups: return "ups";
        case PropertyId::alternation: return "alternation";
        case PropertyId::v_theta_factor: return "vTheta_factor";
        case PropertyId::sufficient: return "sufficient";
        case PropertyId::letter_alternation: return "letter_alternation";
        case PropertyId::crw_palindrome: return "crw_palindrome";
    }
    return "unknown";
}

std::optional<PropertyId> property_from_name(std::string_view name) {
    for (PropertyId id : all_properties())
        if (property_name(id) == name) return id;
    return std::nullopt;
}

std::vector<PropertyId> all_properties() {
    return {PropertyId::ups,        PropertyId::alternation,
            PropertyId::v_theta_factor, PropertyId::sufficient,
            PropertyId::letter_alternation, PropertyId::crw_palindrome};
}

CharacterizationResult check_return_words_palindromic(const Antimorphism& theta,
                                                      const FactorIndex& idx) {
    const Word& w = idx.source();
    for (std::size_t n = 1; n <= idx.max_len(); ++n)
        for (const Word& f : idx.factors(n)) {
            if (!theta.palindrome(f)) continue;
            auto occs = trimmed_occurrences(idx, f);
            for (std::size_t k = 0; k + 1 < occs.size(); ++k) {
                Word r = w.subword(occs[k], occs[k + 1] - occs[k] + n);
                if (theta.palindrome(r)) continue;
                std::ostringstream detail;
                detail << "return word to \"" << f.display() << "\" at position " << occs[k]
                       << " is not a theta-palindrome";
                return fail(PropertyId::crw_palindrome,
                            {{f, r}, {occs[k], occs[k + 1]}, detail.str()});
            }
        }
    return pass(PropertyId::crw_palindrome);
}

CharacterizationResult check_alternation(const Antimorphism& theta, const FactorIndex& idx,
                                         const Word& f) {
    Word tf = theta.apply(f);
    if (f == tf)
        throw std::invalid_argument("check_alternation: factor is theta-palindromic");
    PropertyId id = f.size() == 1 ? PropertyId::letter_alternation : PropertyId::alternation;
    auto merged = merged_occurrences(idx, f, tf);
    for (std::size_t k = 0; k + 1 < merged.size(); ++k) {
        if (merged[k].first != merged[k + 1].first) continue;
        const Word& repeated = merged[k].first ? f : tf;
        std::ostringstream detail;
        detail << "\"" << repeated.display() << "\" occurs twice with no \""
               << (merged[k].first ? tf : f).display() << "\" in between";
        return fail(id, {{repeated}, {merged[k].pos, merged[k + 1].pos}, detail.str()});
    }
    return pass(id);
}

CharacterizationResult check_letter_alternation(const Antimorphism& theta,
                                                const FactorIndex& idx) {
    const Alphabet alpha = idx.source().alphabet();
    for (Letter a = 0; a < static_cast<Letter>(alpha.size()); ++a) {
        Letter ta = theta.image(a);
        if (ta <= a) continue;
        Word wa(alpha, {a});
        Word wta(alpha, {ta});
        if (idx.occurrences(wa).empty() && idx.occurrences(wta).empty()) continue;
        auto res = check_alternation(theta, idx, wa);
        if (!res.holds) return res;
    }
    return pass(PropertyId::letter_alternation);
}

CharacterizationResult check_factor_alternation(const Antimorphism& theta,
                                                const FactorIndex& idx, std::size_t len_cap) {
    const std::size_t cap = std::min(len_cap, idx.max_len());
    for (std::size_t n = 1; n <= cap; ++n)
        for (const Word& f : idx.factors(n)) {
            Word tf = theta.apply(f);
            if (f == tf) continue;
            // One check per pair: defer to Θ(f) only when it is itself indexed.
            if (tf < f && idx.contains(tf)) continue;
            auto res = check_alternation(theta, idx, f);
            if (!res.holds) {
                res.property = PropertyId::alternation;
                return res;
            }
        }
    return pass(PropertyId::alternation);
}

CharacterizationResult check_v_theta_factors(const Antimorphism& theta, const FactorIndex& idx,
                                             std::size_t len_cap) {
    const Word& w = idx.source();
    const std::size_t cap = std::min(len_cap, idx.max_len());
    for (std::size_t n = 1; n <= cap; ++n)
        for (const Word& v : idx.factors(n)) {
            Word tv = theta.apply(v);
            if (tv < v && idx.contains(tv)) continue;
            std::vector<LabeledOccurrence> merged;
            if (v == tv) {
                for (std::size_t pos : idx.occurrences(v)) merged.push_back({pos, true});
            } else {
                merged = merged_occurrences(idx, v, tv);
            }
            for (std::size_t k = 0; k + 1 < merged.size(); ++k) {
                // v = Θ(v): every complete return qualifies; otherwise only
                // label changes give a factor v…Θ(v) without interior copies.
                if (v != tv && merged[k].first == merged[k + 1].first) continue;
                std::size_t i = merged[k].pos;
                Word r = w.subword(i, merged[k + 1].pos - i + n);
                if (theta.palindrome(r)) continue;
                const Word& head = merged[k].first ? v : tv;
                std::ostringstream detail;
                detail << "factor from \"" << head.display() << "\" to its image at position "
                       << i << " is not a theta-palindrome";
                return fail(PropertyId::v_theta_factor,
                            {{head, r}, {i, merged[k + 1].pos}, detail.str()});
            }
        }
    auto letters = check_letter_alternation(theta, idx);
    if (!letters.holds) {
        letters.property = PropertyId::v_theta_factor;
        return letters;
    }
    return pass(PropertyId::v_theta_factor);
}

CharacterizationResult check_sufficient_conditions(const Antimorphism& theta,
                                                   const FactorIndex& idx) {
    auto returns = check_return_words_palindromic(theta, idx);
    if (!returns.holds) {
        returns.property = PropertyId::sufficient;
        return returns;
    }
    auto letters = check_v_theta_factors(theta, idx, 1);
    if (!letters.holds) {
        letters.property = PropertyId::sufficient;
        return letters;
    }
    return pass(PropertyId::sufficient);
}

CharacterizationResult check_unioccurrent_suffixes(const Antimorphism& theta,
                                                   const FactorIndex& idx) {
    const Word& w = idx.source();
    auto letters = w.letters();
    for (const PrefixStep& step : scan_prefixes(theta, w)) {
        if (step.gamma_grew) continue;
        const std::size_t len = step.lps_len;
        const std::size_t start = step.length - len;
        if (count_in_prefix(letters, step.length, start, len, 2) == 1) continue;
        Word lps = w.subword(start, len);
        std::ostringstream detail;
        detail << "longest theta-palindromic suffix of the length-" << step.length
               << " prefix occurs more than once";
        return fail(PropertyId::ups, {{lps}, {step.length}, detail.str()});
    }
    return pass(PropertyId::ups);
}

CharacterizationTable cross_check_characterizations(const Antimorphism& theta,
                                                    const FactorIndex& idx) {
    CharacterizationTable t{};
    t.window_length = idx.source().size();
    t.factor_cap = idx.max_len();
    t.rich = richness_report(theta, idx.source()).is_rich;
    if (t.factor_cap == 0) {
        t.closed_on_window = true;
        t.ups = t.v_theta_factor = t.sufficient = true;
        t.crw_palindrome = t.alternation = t.letter_alternation = true;
        return t;
    }

    t.closed_on_window =
        closure_under_theta(theta, idx, t.factor_cap, ClosureMode::window).verdict ==
        ClosureVerdict::closed_on_window;
    t.ups = check_unioccurrent_suffixes(theta, idx).holds;
    t.v_theta_factor = check_v_theta_factors(theta, idx, t.factor_cap).holds;
    t.sufficient = check_sufficient_conditions(theta, idx).holds;
    t.crw_palindrome = check_return_words_palindromic(theta, idx).holds;
    t.alternation = check_factor_alternation(theta, idx, t.factor_cap).holds;
    t.letter_alternation = check_letter_alternation(theta, idx).holds;

    if (t.closed_on_window && t.factor_cap >= 2) {
        auto prof = complexity_profile(theta, idx, t.factor_cap - 1);
        bool all_equal = true;
        for (std::size_t n = 1; n + 1 <= t.factor_cap; ++n)
            all_equal = all_equal && prof.status(n) == BalanceStatus::equal;
        t.equality_all_n = all_equal;
    }

    if (t.ups != t.rich)
        t.inconsistencies.push_back("unioccurrent-suffix property disagrees with richness");
    if (t.v_theta_factor != t.rich)
        t.inconsistencies.push_back("reflected-factor property disagrees with richness");
    if (t.sufficient && !t.rich)
        t.inconsistencies.push_back("sufficient conditions hold on a non-rich window");
    if (t.rich && !t.alternation)
        t.inconsistencies.push_back("rich window with a non-alternating factor pair");
    if (t.rich && !t.letter_alternation)
        t.inconsistencies.push_back("rich window with a non-alternating letter pair");
    return t;
}

CharacterizationTable cross_check_characterizations(const Antimorphism& theta, const Word& w) {
    return cross_check_characterizations(theta, FactorIndex(w, w.size()));
}

EpisturmianProfile episturmian_profile(const Antimorphism& theta, const FactorIndex& idx,
                                       std::size_t length_cap) {
    const Word& w = idx.source();
    EpisturmianProfile prof{};
    prof.length_cap =
        idx.max_len() == 0 ? 0 : std::min(length_cap, idx.max_len() - 1);
    prof.at_most_one_left_special = true;
    for (std::size_t n = 1; n <= prof.length_cap; ++n) {
        std::size_t count = idx.left_special(n).size();
        prof.left_special_counts.push_back(count);
        if (count > 1) prof.at_most_one_left_special = false;
    }
    prof.closed_on_window =
        closure_under_theta(theta, idx, prof.length_cap, ClosureMode::window).verdict ==
        ClosureVerdict::closed_on_window;
    prof.theta_episturmian_on_window =
        prof.at_most_one_left_special && prof.closed_on_window;

    prof.bispecials.push_back(Word::empty(w.alphabet()));
    for (std::size_t n = 1; n <= prof.length_cap; ++n) {
        auto bs = idx.bispecial(n);
        if (bs.size() >= 2) break;
        if (bs.size() == 1) prof.bispecials.push_back(bs.front());
    }

    prof.bispecial_chain_coherent = true;
    for (std::size_t k = 0; k + 1 < prof.bispecials.size(); ++k) {
        const Word& cur = prof.bispecials[k];
        const Word& next = prof.bispecials[k + 1];
        if (!next.matches_at(0, cur)) {
            prof.bispecial_chain_coherent = false;
            break;
        }
        prof.extension_letters.push_back(next[cur.size()]);
    }

    std::set<std::tuple<std::size_t, Letter, std::vector<Letter>>> seen;
    for (std::size_t k = 0; k < prof.bispecials.size(); ++k) {
        const Word& f = prof.bispecials[k];
        const std::size_t m = f.size();
        auto occs = trimmed_occurrences(idx, f);
        for (std::size_t i = 0; i + 1 < occs.size(); ++i) {
            Letter a = w[occs[i] + m];
            Word r = w.subword(occs[i], occs[i + 1] - occs[i] + m);
            auto key = std::make_tuple(k, a,
                                       std::vector<Letter>(r.letters().begin(),
                                                           r.letters().end()));
            if (!seen.insert(std::move(key)).second) continue;
            bool pal = theta.palindrome(r);
            prof.returns.push_back({k, a, std::move(r), pal});
        }
    }
    std::sort(prof.returns.begin(), prof.returns.end(),
              [](const ReturnObservation& a, const ReturnObservation& b) {
                  if (a.k != b.k) return a.k < b.k;
                  if (a.letter != b.letter) return a.letter < b.letter;
                  return a.word < b.word;
              });

    for (const auto& [a, ta] : gamma(theta, w).pairs) {
        ObservedBranchIndex entry{a, std::nullopt};
        for (const auto& ra : prof.returns) {
            if (ra.letter != a || ra.theta_palindromic) continue;
            for (const auto& rt : prof.returns)
                if (rt.k == ra.k && rt.letter == ta && !rt.theta_palindromic)
                    entry.value = std::max(entry.value.value_or(0), ra.k);
        }
        prof.branch_indices.push_back(entry);
    }
    return prof;
}

EpisturmianRichnessCriterion episturmian_richness_criterion(const Antimorphism& theta,
                                                            const FactorIndex& idx) {
    if (idx.max_len() < 3)
        throw std::invalid_argument(
            "episturmian_richness_criterion: index too short for letter-level counts");
    auto eprof = episturmian_profile(theta, idx, idx.max_len() - 1);
    if (!eprof.theta_episturmian_on_window)
        throw std::invalid_argument(
            "episturmian_richness_criterion: window is not theta-episturmian");

    auto cprof = complexity_profile(theta, idx, 2);
    EpisturmianRichnessCriterion out{};
    out.p1 = cprof.p(1);
    out.p2 = cprof.p(2);
    out.dc1 = cprof.dc(1);
    out.lhs = out.p1 + out.p2;
    out.rhs = out.dc1 + 2;
    out.rhs_alternative = out.dc1 + 1;
    out.rich_predicted = static_cast<long long>(out.lhs) == out.rhs;
    out.alternative_satisfied = static_cast<long long>(out.lhs) == out.rhs_alternative;
    out.sweep = palindromic_balance_sweep(theta, idx, 1, idx.max_len() - 1);
    return out;
}

ReturnStructureReport return_word_structure_check(const Antimorphism& theta,
                                                  const FactorIndex& idx,
                                                  std::size_t length_cap) {
    auto prof = episturmian_profile(theta, idx, length_cap);
    ReturnStructureReport report{true, true, true, true, {}};
    const Alphabet alpha = idx.source().alphabet();

    auto at = [&](std::size_t k, Letter a) {
        std::vector<const ReturnObservation*> hits;
        for (const auto& obs : prof.returns)
            if (obs.k == k && obs.letter == a) hits.push_back(&obs);
        return hits;
    };
    auto note = [&](bool& flag, std::string text) {
        flag = false;
        report.violations.push_back(std::move(text));
    };

    for (const auto& obs : prof.returns) {
        if (!theta.fixes(obs.letter) || obs.theta_palindromic) continue;
        std::ostringstream msg;
        msg << "return \"" << obs.word.display() << "\" for fixed letter "
            << alpha.name(obs.letter) << " at level " << obs.k
            << " is not a theta-palindrome";
        note(report.fixed_letter_returns_palindromic, msg.str());
    }

    for (const auto& branch : prof.branch_indices) {
        const Letter a = branch.letter;
        const Letter ta = theta.image(a);
        for (std::size_t k = 0; k < prof.bispecials.size(); ++k) {
            const Word& wk = prof.bispecials[k];
            const bool early = branch.value.has_value() && k <= *branch.value;
            if (early) {
                for (Letter x : {a, ta}) {
                    Word sandwich = wk.appended(x) + wk;
                    for (const ReturnObservation* obs : at(k, x)) {
                        if (!(obs->word == sandwich)) {
                            std::ostringstream msg;
                            msg << "return for " << alpha.name(x) << " at level " << k
                                << " is \"" << obs->word.display()
                                << "\", expected the sandwich form";
                            note(report.early_returns_sandwich, msg.str());
                        }
                    }
                    auto in_word = [&](const Word& v) {
                        auto ls = v.letters();
                        return std::find(ls.begin(), ls.end(), x) != ls.end();
                    };
                    if (in_word(wk)) {
                        std::ostringstream msg;
                        msg << "letter " << alpha.name(x) << " occurs inside bispecial \""
                            << wk.display() << "\" at level " << k;
                        note(report.early_returns_sandwich, msg.str());
                    }
                    for (const auto& other : prof.returns) {
                        if (other.k != k || other.letter == x) continue;
                        if (!in_word(other.word)) continue;
                        std::ostringstream msg;
                        msg << "letter " << alpha.name(x) << " occurs in the return for "
                            << alpha.name(other.letter) << " at level " << k;
                        note(report.early_returns_sandwich, msg.str());
                    }
                }
            } else {
                std::size_t observed = (at(k, a).empty() ? 0u : 1u) +
                                       (at(k, ta).empty() ? 0u : 1u);
                if (observed > 1) {
                    std::ostringstream msg;
                    msg << "both returns of the pair {" << alpha.name(a) << ", "
                        << alpha.name(ta) << "} observed at level " << k
                        << " beyond the branch index";
                    note(report.late_returns_exclusive, msg.str());
                }
                for (Letter x : {a, ta})
                    for (const ReturnObservation* obs : at(k, x)) {
                        if (!obs->theta_palindromic) continue;
                        for (const ReturnObservation* next : at(k + 1, x)) {
                            if (next->theta_palindromic) continue;
                            std::ostringstream msg;
                            msg << "palindromic return for " << alpha.name(x)
                                << " at level " << k
                                << " is followed by a non-palindromic one";
                            note(report.palindromic_returns_persist, msg.str());
                        }
                    }
            }
        }
    }
    return report;
}

}  // namespace thetarich
