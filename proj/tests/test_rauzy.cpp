#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <set>

#include "common.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "thetarich/complexity.hpp"
#include "thetarich/core.hpp"
#include "thetarich/generators.hpp"
#include "thetarich/rauzy.hpp"

using namespace thetarich;
using namespace fixtures;

namespace {

std::vector<Word> path_edges(const SimplePath& p) {
    std::vector<Word> out;
    for (std::size_t i = 0; i + p.order + 1 <= p.word.size(); ++i)
        out.push_back(p.word.subword(i, p.order + 1));
    return out;
}

bool connected_after_quotient(const SuperReducedGraph& g) {
    std::vector<std::size_t> comp(g.vertices.size());
    for (std::size_t i = 0; i < comp.size(); ++i) comp[i] = i;
    auto find = [&](std::size_t x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
    };
    for (const auto& e : g.edges) comp[find(e.from)] = find(e.to);
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < comp.size(); ++i) roots.insert(find(i));
    return roots.size() <= 1;
}

}  // namespace

TEST_CASE("rauzy graph of a periodic window is a single cycle") {
    auto ex = corpus_entry("ex5.5");
    FactorIndex idx(ex.generator->prefix(60), 4);
    RauzyGraph g = rauzy_graph(idx, 2);

    REQUIRE(g.vertices.size() == 4);
    REQUIRE(g.edges.size() == 4);
    CHECK(g.strongly_connected);

    std::map<std::size_t, std::size_t> out_deg, in_deg;
    for (const auto& e : g.edges) {
        ++out_deg[e.from];
        ++in_deg[e.to];
    }
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        CHECK(out_deg[v] == 1);
        CHECK(in_deg[v] == 1);
    }
}

TEST_CASE("fibonacci rauzy graph at order 1") {
    auto fib = corpus_entry("fibonacci");
    FactorIndex idx(fib.generator->prefix(500), 4);
    RauzyGraph g = rauzy_graph(idx, 1);

    REQUIRE(g.vertices.size() == 2);
    CHECK(g.vertices[0].display() == "0");
    CHECK(g.vertices[1].display() == "1");
    REQUIRE(g.edges.size() == 3);
    CHECK(g.edges[0].word.display() == "00");
    CHECK(g.edges[1].word.display() == "01");
    CHECK(g.edges[2].word.display() == "10");
    CHECK(g.strongly_connected);
}

TEST_CASE("complete two-letter word gives the one-edge graph") {
    Alphabet ab = ab_alphabet();
    FactorIndex idx(ab.parse("ab"), 2);
    RauzyGraph g = rauzy_graph(idx, 1);

    REQUIRE(g.vertices.size() == 2);
    CHECK(g.vertices[0].display() == "a");
    CHECK(g.vertices[1].display() == "b");
    REQUIRE(g.edges.size() == 1);
    CHECK(g.edges[0].word.display() == "ab");
    CHECK(g.edges[0].from == 0);
    CHECK(g.edges[0].to == 1);
    CHECK_FALSE(g.strongly_connected);
}

TEST_CASE("rauzy graph rejects orders beyond the index") {
    Alphabet ab = ab_alphabet();
    FactorIndex idx(ab.parse("abab"), 3);
    CHECK_THROWS_AS(rauzy_graph(idx, 3), std::invalid_argument);
    CHECK_NOTHROW(rauzy_graph(idx, 2));
}

TEST_CASE("graph sizes equal the complexity counts across the corpus") {
    for (const auto& entry : builtin_corpus()) {
        Word w = entry.generator->prefix(400);
        FactorIndex idx(w, 12);
        auto prof = complexity_profile(entry.theta, idx, 11);
        for (std::size_t n = 1; n <= 10; ++n) {
            RauzyGraph g = rauzy_graph(idx, n);
            REQUIRE(g.vertices.size() == prof.c(n));
            REQUIRE(g.edges.size() == prof.c(n + 1));
        }
    }
}

TEST_CASE("fibonacci simple paths at order 1") {
    auto fib = corpus_entry("fibonacci");
    FactorIndex idx(fib.generator->prefix(500), 4);
    SimplePathSet ps = n_simple_paths(idx, 1);

    CHECK_FALSE(ps.periodic_regime);
    REQUIRE(ps.paths.size() == 2);
    CHECK(ps.paths[0].word.display() == "00");
    CHECK(ps.paths[1].word.display() == "010");
    CHECK_FALSE(ps.paths[0].provisional);
    CHECK_FALSE(ps.paths[1].provisional);
    CHECK(ps.uncovered_edges == 0);
    CHECK(ps.paths[0].start_vertex().display() == "0");
    CHECK(ps.paths[0].end_vertex().display() == "0");
    CHECK(ps.paths[1].start_vertex().display() == "0");
    CHECK(ps.paths[1].end_vertex().display() == "0");
}

TEST_CASE("periodic window yields no simple paths and is flagged") {
    auto ex = corpus_entry("ex5.5");
    FactorIndex idx(ex.generator->prefix(60), 4);
    SimplePathSet ps = n_simple_paths(idx, 2);
    CHECK(ps.periodic_regime);
    CHECK(ps.paths.empty());
    CHECK(ps.uncovered_edges == 0);
}

TEST_CASE("path endpoints are special and interiors are not") {
    for (const char* name : {"ex5.1", "ex5.2", "ex5.3"}) {
        auto entry = corpus_entry(name);
        Word w = entry.generator->prefix(800);
        FactorIndex idx(w, 8);
        for (std::size_t n = 1; n <= 6; ++n) {
            SimplePathSet ps = n_simple_paths(idx, n);
            REQUIRE_FALSE(ps.periodic_regime);
            auto specials = idx.special(n);
            auto is_special = [&](const Word& v) {
                return std::find(specials.begin(), specials.end(), v) != specials.end();
            };
            for (const auto& p : ps.paths) {
                REQUIRE(p.word.size() >= n + 1);
                CHECK(is_special(p.start_vertex()));
                CHECK(is_special(p.end_vertex()));
                for (std::size_t i = 1; i + n < p.word.size(); ++i)
                    CHECK_FALSE(is_special(p.word.subword(i, n)));
            }
        }
    }
}

TEST_CASE("every graph edge lies on exactly one path over recurrent windows") {
    for (const char* name : {"fibonacci", "ex5.1", "ex5.2", "ex5.3"}) {
        auto entry = corpus_entry(name);
        Word w = entry.generator->prefix(800);
        FactorIndex idx(w, 8);
        for (std::size_t n = 1; n <= 6; ++n) {
            RauzyGraph g = rauzy_graph(idx, n);
            SimplePathSet ps = n_simple_paths(idx, n);
            std::vector<Word> covered;
            for (const auto& p : ps.paths)
                for (auto& e : path_edges(p)) covered.push_back(std::move(e));
            std::sort(covered.begin(), covered.end());
            std::vector<Word> expected;
            for (const auto& e : g.edges) expected.push_back(e.word);
            REQUIRE(covered == expected);
            CHECK(ps.uncovered_edges == 0);
        }
    }
}

TEST_CASE("paths never carry more than one interior theta-palindrome") {
    for (const auto& entry : builtin_corpus()) {
        Word w = entry.generator->prefix(800);
        FactorIndex idx(w, 10);
        auto closed = closure_under_theta(entry.theta, idx, 9, ClosureMode::window);
        if (closed.verdict != ClosureVerdict::closed_on_window) continue;
        for (std::size_t n = 1; n <= 8; ++n) {
            SimplePathSet ps = n_simple_paths(idx, n);
            for (const auto& p : ps.paths) {
                std::size_t interior_pals = 0;
                for (std::size_t len = n; len <= n + 1; ++len)
                    for (std::size_t i = 0; i + len <= p.word.size(); ++i) {
                        if (i == 0 || i + len == p.word.size()) continue;
                        if (entry.theta.palindrome(p.word.subword(i, len)))
                            ++interior_pals;
                    }
                CHECK(interior_pals <= 1);
            }
        }
    }
}

TEST_CASE("reduced graph keeps the special factors as vertices") {
    auto ex = corpus_entry("ex5.1");
    FactorIndex idx(ex.generator->prefix(800), 5);
    ReducedGraph g = reduced_graph(idx, 2);
    CHECK_FALSE(g.periodic_regime);
    REQUIRE(g.vertices == idx.special(2));
    REQUIRE_FALSE(g.paths.empty());
    for (const auto& p : g.paths) {
        CHECK(std::find(g.vertices.begin(), g.vertices.end(), p.start_vertex()) !=
              g.vertices.end());
        CHECK(std::find(g.vertices.begin(), g.vertices.end(), p.end_vertex()) !=
              g.vertices.end());
    }
}

TEST_CASE("quotient collapses a non-palindromic special pair to one vertex") {
    auto ex = corpus_entry("ex5.1");
    FactorIndex idx(ex.generator->prefix(1500), 9);
    for (std::size_t n = 1; n <= 7; ++n) {
        auto specials = idx.special(n);
        SuperReducedGraph g = super_reduced_graph(ex.theta, idx, n);
        REQUIRE_FALSE(g.periodic_regime);
        REQUIRE(g.vertices.size() == 1);
        CHECK(g.alpha + g.beta == 1);
        CHECK(g.alpha == (g.vertices[0].theta_palindromic ? 1u : 0u));
        for (const auto& e : g.edges) CHECK(e.loop());
        if (specials.size() == 2) {
            CHECK(ex.theta.apply(specials[0]) == specials[1]);
            CHECK(g.beta == 1);
        }
    }
}

TEST_CASE("quotient of a periodic window is empty") {
    auto ex = corpus_entry("ex5.5");
    FactorIndex idx(ex.generator->prefix(60), 5);
    SuperReducedGraph g = super_reduced_graph(ex.theta, idx, 3);
    CHECK(g.periodic_regime);
    CHECK(g.vertices.empty());
    CHECK(g.edges.empty());
    CHECK(g.alpha == 0);
    CHECK(g.beta == 0);
}

TEST_CASE("single palindromic special with reflected loop pair") {
    auto ex = corpus_entry("ex5.4");
    FactorIndex idx(ex.generator->prefix(60), 4);

    auto specials = idx.special(1);
    REQUIRE(specials.size() == 1);
    CHECK(specials[0].display() == "c");

    SimplePathSet ps = n_simple_paths(idx, 1);
    REQUIRE(ps.paths.size() == 2);
    CHECK(ps.paths[0].word.display() == "cac");
    CHECK(ps.paths[1].word.display() == "ca'c");

    SuperReducedGraph g = super_reduced_graph(ex.theta, idx, 1);
    REQUIRE(g.vertices.size() == 1);
    CHECK(g.vertices[0].representative.display() == "c");
    CHECK(g.vertices[0].theta_palindromic);
    CHECK(g.alpha == 1);
    CHECK(g.beta == 0);
    REQUIRE(g.edges.size() == 1);
    CHECK(g.edges[0].loop());
    CHECK_FALSE(g.edges[0].theta_fixed);
    CHECK(g.edges[0].representative.display() == "cac");
}

TEST_CASE("alpha and beta account for every special factor") {
    for (const auto& entry : builtin_corpus()) {
        Word w = entry.generator->prefix(600);
        FactorIndex idx(w, 8);
        for (std::size_t n = 1; n <= 6; ++n) {
            SuperReducedGraph g = super_reduced_graph(entry.theta, idx, n);
            std::size_t pal = 0, nonpal = 0;
            for (const Word& s : idx.special(n))
                (entry.theta.palindrome(s) ? pal : nonpal) += 1;
            REQUIRE(nonpal % 2 == 0);
            CHECK(g.alpha == pal);
            CHECK(g.beta == nonpal / 2);
            CHECK(g.vertices.size() == g.alpha + g.beta);
        }
    }
}

TEST_CASE("connected quotients force the path-count lower bound") {
    std::size_t checked = 0;
    for (const auto& entry : builtin_corpus()) {
        Word w = entry.generator->prefix(800);
        FactorIndex idx(w, 8);
        for (std::size_t n = 1; n <= 6; ++n) {
            SuperReducedGraph g = super_reduced_graph(entry.theta, idx, n);
            if (g.periodic_regime || g.provisional_excluded > 0) continue;
            if (!connected_after_quotient(g)) continue;
            SimplePathSet ps = n_simple_paths(idx, n);
            std::size_t non_fixed = 0;
            for (const auto& p : ps.paths)
                if (!entry.theta.palindrome(p.word)) ++non_fixed;
            CHECK(non_fixed >= 2 * (g.alpha + g.beta - 1));
            ++checked;
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("equality verdicts follow the graph structure on the morphic words") {
    auto ex1 = corpus_entry("ex5.1");
    FactorIndex idx1(ex1.generator->prefix(3000), 42);
    auto prof1 = complexity_profile(ex1.theta, idx1, 41);
    for (std::size_t n = 1; n <= 40; ++n) {
        EqualityStructureVerdict v = equality_structure_check(ex1.theta, idx1, n, prof1);
        CHECK(v.equality_predicted);
        CHECK(v.equality_observed);
    }

    auto ex2 = corpus_entry("ex5.2");
    FactorIndex idx2(ex2.generator->prefix(3000), 22);
    auto prof2 = complexity_profile(ex2.theta, idx2, 21);
    std::size_t failures = 0;
    for (std::size_t n = 1; n <= 20; ++n) {
        EqualityStructureVerdict v = equality_structure_check(ex2.theta, idx2, n, prof2);
        REQUIRE(v.equality_predicted == v.equality_observed);
        if (!v.equality_observed) ++failures;
    }
    CHECK(failures > 0);
}

TEST_CASE("periodic regime delegates to the no-special-factor equality") {
    for (const char* name : {"ex5.4", "ex5.5"}) {
        auto entry = corpus_entry(name);
        FactorIndex idx(entry.generator->prefix(200), 12);
        auto prof = complexity_profile(entry.theta, idx, 11);
        for (std::size_t n = 2; n <= 10; ++n) {
            EqualityStructureVerdict v = equality_structure_check(entry.theta, idx, n, prof);
            CHECK(v.periodic_regime);
            CHECK(v.equality_predicted);
            CHECK(v.equality_observed);
            CHECK(prof.lhs(n) == 2);
        }
    }
}

TEST_CASE("verdicts match observed equality across the closed corpus") {
    for (const auto& entry : builtin_corpus()) {
        Word w = entry.generator->prefix(1500);
        FactorIndex idx(w, 16);
        auto closed = closure_under_theta(entry.theta, idx, 15, ClosureMode::window);
        if (closed.verdict != ClosureVerdict::closed_on_window) continue;
        auto prof = complexity_profile(entry.theta, idx, 15);
        for (std::size_t n = 1; n <= 14; ++n) {
            EqualityStructureVerdict v = equality_structure_check(entry.theta, idx, n, prof);
            REQUIRE(v.equality_predicted == v.equality_observed);
        }
    }
}

TEST_CASE("structure check requires the profile to cover the order") {
    auto fib = corpus_entry("fibonacci");
    FactorIndex idx(fib.generator->prefix(200), 8);
    auto prof = complexity_profile(fib.theta, idx, 5);
    CHECK_THROWS_AS(equality_structure_check(fib.theta, idx, 6, prof), std::invalid_argument);
    CHECK_NOTHROW(equality_structure_check(fib.theta, idx, 5, prof));
}

TEST_CASE("dot output is deterministic and lexicographically ordered") {
    auto fib = corpus_entry("fibonacci");
    FactorIndex idx(fib.generator->prefix(500), 4);

    std::string dot = rauzy_graph(idx, 1).to_dot();
    CHECK(dot == rauzy_graph(idx, 1).to_dot());
    CHECK(dot ==
          "digraph rauzy_1 {\n"
          "  \"0\";\n"
          "  \"1\";\n"
          "  \"0\" -> \"0\" [label=\"00\"];\n"
          "  \"0\" -> \"1\" [label=\"01\"];\n"
          "  \"1\" -> \"0\" [label=\"10\"];\n"
          "}\n");

    std::string reduced = reduced_graph(idx, 1).to_dot();
    CHECK(reduced == reduced_graph(idx, 1).to_dot());
    CHECK(reduced.find("\"0\" -> \"0\" [label=\"010\"]") != std::string::npos);

    auto ex = corpus_entry("ex5.4");
    FactorIndex pidx(ex.generator->prefix(60), 4);
    std::string super = super_reduced_graph(ex.theta, pidx, 1).to_dot();
    CHECK(super == super_reduced_graph(ex.theta, pidx, 1).to_dot());
    CHECK(super.find("graph super_reduced_1 {") != std::string::npos);
    CHECK(super.find("\"c\" -- \"c\" [label=\"cac\" style=bold]") != std::string::npos);
}
