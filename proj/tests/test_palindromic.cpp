#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <set>
#include <string>
#include <vector>

#include "common.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "thetarich/core.hpp"
#include "thetarich/palindromic.hpp"

using namespace thetarich;
using namespace fixtures;

namespace {

std::set<std::string> display_set(const std::vector<Word>& ws) {
    std::set<std::string> out;
    for (const auto& w : ws) out.insert(w.display());
    return out;
}

std::vector<Letter> to_vec(const Word& w) {
    return std::vector<Letter>(w.letters().begin(), w.letters().end());
}

}  // namespace

TEST_CASE("gamma collects the non-fixed letter pairs that occur") {
    Antimorphism t = aac_theta();
    Alphabet a = t.alphabet();
    CHECK(gamma(t, a.parse("cc")).size() == 0);

    auto g = gamma(t, a.parse("ca"));
    REQUIRE(g.size() == 1);
    CHECK(g.contains(0, 1));
    CHECK(g.contains(1, 0));

    Alphabet ab4({"a", "a'", "b", "b'"});
    Antimorphism t4 = Antimorphism::from_cycles(ab4, {{0, 1}, {2, 3}});
    CHECK(gamma(t4, ab4.parse("ab'")).size() == 2);
}

TEST_CASE("gamma is monotone along prefixes") {
    std::mt19937 rng(41);
    Antimorphism t = aac_theta();
    for (int i = 0; i < 50; ++i) {
        auto letters = random_letters(rng, 20, 3);
        Word w = mk(t.alphabet(), letters);
        std::size_t prev = 0;
        for (std::size_t len = 0; len <= w.size(); ++len) {
            std::size_t g = gamma(t, w.prefix(len)).size();
            REQUIRE(g >= prev);
            prev = g;
        }
    }
}

TEST_CASE("theta-palindromic factor enumeration matches the documented examples") {
    Antimorphism t = aac_theta();
    Alphabet a = t.alphabet();

    auto f1 = theta_palindromic_factors(t, a.parse("ccaa'"));
    CHECK(f1.size() == 4);
    CHECK(display_set(f1) == std::set<std::string>{"", "c", "cc", "aa'"});

    auto f2 = theta_palindromic_factors(t, a.parse("caca'"));
    CHECK(f2.size() == 3);
    CHECK(display_set(f2) == std::set<std::string>{"", "c", "aca'"});

    Antimorphism rev = ab_reversal();
    auto f3 = theta_palindromic_factors(rev, rev.alphabet().parse("aba"));
    CHECK(f3.size() == 4);
    CHECK(display_set(f3) == std::set<std::string>{"", "a", "b", "aba"});
}

TEST_CASE("longest theta-palindromic suffix examples") {
    Antimorphism t = aac_theta();
    CHECK(longest_theta_palindromic_suffix(t, t.alphabet().parse("cac")).display() == "c");

    Antimorphism sw = swap2_theta();
    CHECK(longest_theta_palindromic_suffix(sw, sw.alphabet().parse("a")).is_empty());

    Antimorphism rev = ab_reversal();
    CHECK(longest_theta_palindromic_suffix(rev, rev.alphabet().parse("aab")).display() == "b");
}

TEST_CASE("richness report on the periodic examples") {
    Antimorphism t = aac_theta();
    Alphabet a = t.alphabet();

    auto rich = richness_report(t, a.parse("ccaa'"));
    CHECK(rich.pal_count == 4);
    CHECK(rich.bound == 4);
    CHECK(rich.defect == 0);
    CHECK(rich.is_rich);
    CHECK_FALSE(rich.witness.has_value());

    auto poor = richness_report(t, a.parse("caca'"));
    CHECK(poor.pal_count == 3);
    CHECK(poor.bound == 4);
    CHECK(poor.defect == 1);
    CHECK_FALSE(poor.is_rich);
    REQUIRE(poor.witness.has_value());
    CHECK(poor.witness->prefix.display() == "cac");
    CHECK(poor.witness->suffix.display() == "c");
    CHECK(poor.witness->suffix_occurrences == 2);

    auto trivial = richness_report(t, Word::empty(a));
    CHECK(trivial.pal_count == 1);
    CHECK(trivial.bound == 1);
    CHECK(trivial.is_rich);
}

TEST_CASE("closure matches the worked examples") {
    Antimorphism sw = swap2_theta();
    CHECK(theta_palindromic_closure(sw, sw.alphabet().parse("a")).display() == "aa'");

    Antimorphism rev = ab_reversal();
    CHECK(theta_palindromic_closure(rev, rev.alphabet().parse("ab")).display() == "aba");

    Antimorphism t = aac_theta();
    CHECK(theta_palindromic_closure(t, t.alphabet().parse("ca")).display() == "caa'c");
    CHECK(theta_palindromic_closure(t, Word::empty(t.alphabet())).is_empty());
}

TEST_CASE("scan steps: at most one new palindrome per letter and it is the lps") {
    std::mt19937 rng(5150);
    Antimorphism t = aac_theta();
    for (int i = 0; i < 80; ++i) {
        auto letters = random_letters(rng, 1 + i % 40, 3);
        Word w = mk(t.alphabet(), letters);
        auto steps = scan_prefixes(t, w);
        std::size_t prev_count = 1;
        for (const auto& s : steps) {
            REQUIRE(s.pal_count - prev_count <= 1);
            auto pref = oracle::slice(letters, 0, s.length);
            auto lps = oracle::longest_theta_pal_suffix(t, pref);
            REQUIRE(s.lps_len == lps.size());
            if (s.pal_count > prev_count) {
                // the factor just added is exactly the longest Θ-pal suffix
                auto before = oracle::theta_pal_factors(t, oracle::slice(letters, 0, s.length - 1));
                REQUIRE(before.count(lps) == 0);
                REQUIRE(oracle::occurrences(pref, lps).size() == 1);
            }
            prev_count = s.pal_count;
        }
    }
}

TEST_CASE("exhaustive oracle agreement for the palindromic operations") {
    struct Setup {
        Antimorphism theta;
        std::size_t k;
        std::size_t max_len;
    };
    std::vector<Setup> setups = {{swap2_theta(), 2, 10}, {aac_theta(), 3, 8}};
    for (const auto& su : setups) {
        const Alphabet& alpha = su.theta.alphabet();
        oracle::enumerate_words(su.k, su.max_len, [&](const oracle::Vec& v) {
            Word w(alpha, v);

            auto pal_expect = oracle::theta_pal_factors(su.theta, v);
            auto pal_got = theta_palindromic_factors(su.theta, w);
            REQUIRE(pal_got.size() == pal_expect.size());
            for (const auto& f : pal_got) REQUIRE(pal_expect.count(to_vec(f)) == 1);

            REQUIRE(to_vec(longest_theta_palindromic_suffix(su.theta, w)) ==
                    oracle::longest_theta_pal_suffix(su.theta, v));

            auto rep = richness_report(su.theta, w);
            REQUIRE(rep.bound == oracle::richness_bound(su.theta, v));
            REQUIRE(rep.pal_count == pal_expect.size());
            REQUIRE(rep.is_rich == oracle::is_rich(su.theta, v));

            // Prop 4.2 bound can never be exceeded
            REQUIRE(pal_expect.size() <= oracle::richness_bound(su.theta, v));

            REQUIRE(to_vec(theta_palindromic_closure(su.theta, w)) ==
                    oracle::closure_by_reflection(su.theta, v));
        });
    }
}

TEST_CASE("closure is the minimal theta-palindrome extending w") {
    // reflection-filled candidates, cross-checked against dumb enumeration
    struct Setup {
        Antimorphism theta;
        std::size_t k;
    };
    std::vector<Setup> setups = {{swap2_theta(), 2}, {aac_theta(), 3}};
    for (const auto& su : setups) {
        const Alphabet& alpha = su.theta.alphabet();
        oracle::enumerate_words(su.k, 4, [&](const oracle::Vec& v) {
            Word w(alpha, v);
            Word c = theta_palindromic_closure(su.theta, w);
            REQUIRE(su.theta.palindrome(c));
            REQUIRE(c.size() >= w.size());
            REQUIRE(c.prefix(w.size()) == w);
            REQUIRE(oracle::no_shorter_theta_pal_extension(su.theta, v, su.k, c.size()));
        });
    }
}

TEST_CASE("richness is inherited by every factor of a rich word") {
    Antimorphism t = aac_theta();
    Alphabet a = t.alphabet();
    Word w = a.parse("ccaa'ccaa'ccaa'ccaa'");
    REQUIRE(richness_report(t, w).is_rich);
    for (std::size_t n = 0; n <= w.size(); ++n)
        for (std::size_t i = 0; i + n <= w.size(); ++i)
            REQUIRE(richness_report(t, w.subword(i, n)).is_rich);
}

TEST_CASE("with reversal the report reduces to classic richness") {
    std::mt19937 rng(321);
    Antimorphism rev = ab_reversal();
    for (int i = 0; i < 400; ++i) {
        auto letters = random_letters(rng, 1 + i % 16, 2);
        Word w = mk(rev.alphabet(), letters);
        auto rep = richness_report(rev, w);
        CHECK(rep.bound == w.size() + 1);  // γ is empty for reversal
        CHECK(rep.is_rich == (oracle::theta_pal_factors(rev, letters).size() == w.size() + 1));
    }
}

TEST_CASE("unioccurrent suffix threshold matches a full suffix scan") {
    Antimorphism t = aac_theta();
    Alphabet a = t.alphabet();
    CHECK(unioccurrent_suffix_threshold(t, a.parse("ccaa'")) == 3);

    std::mt19937 rng(888);
    for (int i = 0; i < 60; ++i) {
        auto letters = random_letters(rng, 1 + i % 25, 3);
        Word w = mk(a, letters);
        std::size_t expect = 0;
        for (std::size_t len = 1; len <= letters.size(); ++len)
            if (!oracle::has_unioccurrent_theta_pal_suffix(t, oracle::slice(letters, 0, len)))
                expect = len;
        CHECK(unioccurrent_suffix_threshold(t, w) == expect);
    }
}

TEST_CASE("defect never decreases when letters are appended") {
    std::mt19937 rng(2024);
    Antimorphism t = aac_theta();
    for (int i = 0; i < 50; ++i) {
        auto letters = random_letters(rng, 24, 3);
        Word w = mk(t.alphabet(), letters);
        std::size_t prev = 0;
        for (std::size_t len = 0; len <= w.size(); ++len) {
            auto rep = richness_report(t, w.prefix(len));
            REQUIRE(rep.defect >= prev);
            prev = rep.defect;
        }
    }
}
