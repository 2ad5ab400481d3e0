#include "thetarich/rauzy.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace thetarich {

namespace {

std::size_t vertex_id(const std::vector<Word>& vertices, const Word& w) {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), w);
    return static_cast<std::size_t>(it - vertices.begin());
}

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out.push_back('\\');
        out.push_back(ch);
    }
    out.push_back('"');
    return out;
}

/// Forward+backward reachability from vertex 0 over the edge list.
bool check_strongly_connected(std::size_t vertex_count,
                              const std::vector<RauzyEdge>& edges) {
    if (vertex_count <= 1) return true;
    std::vector<std::vector<std::size_t>> fwd(vertex_count), bwd(vertex_count);
    for (const auto& e : edges) {
        fwd[e.from].push_back(e.to);
        bwd[e.to].push_back(e.from);
    }
    auto reach = [&](const std::vector<std::vector<std::size_t>>& adj) {
        std::vector<bool> seen(vertex_count, false);
        std::vector<std::size_t> stack = {0};
        seen[0] = true;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t w : adj[v]) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
    };
    return reach(fwd) && reach(bwd);
}

std::vector<Letter> word_vec(const Word& w) {
    return std::vector<Letter>(w.letters().begin(), w.letters().end());
}

}  // namespace

RauzyGraph rauzy_graph(const FactorIndex& idx, std::size_t n) {
    if (n + 1 > idx.max_len())
        throw std::invalid_argument("rauzy_graph: n+1 exceeds indexed length");
    RauzyGraph g{n, idx.factors(n), {}, false};
    for (const Word& e : idx.factors(n + 1)) {
        std::size_t from = vertex_id(g.vertices, e.prefix(n));
        std::size_t to = vertex_id(g.vertices, e.suffix(n));
        g.edges.push_back(RauzyEdge{e, from, to});
    }
    g.strongly_connected = check_strongly_connected(g.vertices.size(), g.edges);
    return g;
}

std::string RauzyGraph::to_dot() const {
    std::ostringstream out;
    out << "digraph rauzy_" << order << " {\n";
    for (const Word& v : vertices)
        out << "  " << dot_quote(v.display()) << ";\n";
    for (const RauzyEdge& e : edges)
        out << "  " << dot_quote(vertices[e.from].display()) << " -> "
            << dot_quote(vertices[e.to].display()) << " [label="
            << dot_quote(e.word.display()) << "];\n";
    out << "}\n";
    return out.str();
}

SimplePathSet n_simple_paths(const FactorIndex& idx, std::size_t n) {
    SimplePathSet out{n, false, {}, 0};
    RauzyGraph g = rauzy_graph(idx, n);

    std::vector<bool> special(g.vertices.size(), false);
    bool any_special = false;
    for (const Word& s : idx.special(n)) {
        special[vertex_id(g.vertices, s)] = true;
        any_special = true;
    }
    if (!any_special) {
        out.periodic_regime = true;
        return out;
    }

    // Edges whose every occurrence touches the window boundary cannot be
    // trusted: the walk may describe an artifact of truncation.
    const std::size_t window = idx.source().size();
    std::vector<bool> edge_interior(g.edges.size(), false);
    std::vector<std::vector<std::size_t>> out_edges(g.vertices.size());
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        out_edges[g.edges[i].from].push_back(i);
        for (std::size_t pos : idx.occurrences(g.edges[i].word)) {
            if (pos > 0 && pos + n + 1 < window) {
                edge_interior[i] = true;
                break;
            }
        }
    }

    std::vector<bool> used(g.edges.size(), false);
    for (std::size_t start = 0; start < g.vertices.size(); ++start) {
        if (!special[start]) continue;
        for (std::size_t first : out_edges[start]) {
            std::vector<Letter> letters = word_vec(g.edges[first].word);
            bool provisional = !edge_interior[first];
            used[first] = true;
            std::size_t cur = g.edges[first].to;
            std::size_t steps = 0;
            while (!special[cur]) {
                if (out_edges[cur].empty() || ++steps > g.edges.size()) {
                    provisional = true;  // window cut the walk short
                    break;
                }
                std::size_t next = out_edges[cur].front();  // non-special: unique
                used[next] = true;
                const Word& ew = g.edges[next].word;
                letters.push_back(ew[n]);
                if (!edge_interior[next]) provisional = true;
                cur = g.edges[next].to;
            }
            out.paths.push_back(SimplePath{
                n, Word(idx.source().alphabet(), std::move(letters)), provisional});
        }
    }
    std::sort(out.paths.begin(), out.paths.end(),
              [](const SimplePath& a, const SimplePath& b) { return a.word < b.word; });
    for (bool u : used)
        if (!u) ++out.uncovered_edges;
    return out;
}

ReducedGraph reduced_graph(const FactorIndex& idx, std::size_t n) {
    SimplePathSet ps = n_simple_paths(idx, n);
    return ReducedGraph{n, ps.periodic_regime, idx.special(n), std::move(ps.paths)};
}

std::string ReducedGraph::to_dot() const {
    std::ostringstream out;
    out << "digraph reduced_" << order << " {\n";
    for (const Word& v : vertices)
        out << "  " << dot_quote(v.display()) << ";\n";
    for (const SimplePath& p : paths) {
        out << "  " << dot_quote(p.start_vertex().display()) << " -> "
            << dot_quote(p.end_vertex().display()) << " [label="
            << dot_quote(p.word.display());
        if (p.provisional) out << " style=dashed";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

SuperReducedGraph super_reduced_graph(const Antimorphism& theta, const FactorIndex& idx,
                                      std::size_t n) {
    if (!theta.alphabet().compatible_with(idx.source().alphabet()))
        throw std::invalid_argument("super_reduced_graph: alphabet mismatch");
    SimplePathSet ps = n_simple_paths(idx, n);
    SuperReducedGraph g{n, ps.periodic_regime, {}, {}, 0, 0, 0};
    if (ps.periodic_regime) return g;

    auto canonical = [&](const Word& w) {
        Word img = theta.apply(w);
        return img < w ? img : w;
    };

    for (const Word& s : idx.special(n)) {
        Word rep = canonical(s);
        bool pal = theta.palindrome(s);
        bool found = false;
        for (const auto& v : g.vertices)
            if (v.representative == rep) found = true;
        if (!found) g.vertices.push_back({rep, pal});
    }
    std::sort(g.vertices.begin(), g.vertices.end(),
              [](const auto& a, const auto& b) { return a.representative < b.representative; });
    for (const auto& v : g.vertices)
        (v.theta_palindromic ? g.alpha : g.beta) += 1;

    auto rep_id = [&](const Word& w) {
        Word rep = canonical(w);
        for (std::size_t i = 0; i < g.vertices.size(); ++i)
            if (g.vertices[i].representative == rep) return i;
        throw std::logic_error("super_reduced_graph: path endpoint not special");
    };

    std::map<std::vector<Letter>, SuperReducedGraph::Edge> grouped;
    for (const SimplePath& p : ps.paths) {
        if (p.provisional) {
            ++g.provisional_excluded;
            continue;
        }
        Word rep = canonical(p.word);
        auto key = word_vec(rep);
        if (grouped.count(key)) continue;  // Θ-image of an already seen path
        std::size_t a = rep_id(p.start_vertex());
        std::size_t b = rep_id(p.end_vertex());
        grouped.emplace(std::move(key),
                        SuperReducedGraph::Edge{rep, std::min(a, b), std::max(a, b),
                                                theta.palindrome(p.word)});
    }
    for (auto& [key, edge] : grouped) g.edges.push_back(std::move(edge));
    return g;
}

std::string SuperReducedGraph::to_dot() const {
    std::ostringstream out;
    out << "graph super_reduced_" << order << " {\n";
    for (const Vertex& v : vertices) {
        out << "  " << dot_quote(v.representative.display());
        if (v.theta_palindromic) out << " [shape=doublecircle]";
        out << ";\n";
    }
    for (const Edge& e : edges) {
        std::string label = e.representative.display();
        if (e.theta_fixed) label += " (theta-fixed)";
        out << "  " << dot_quote(vertices[e.from].representative.display()) << " -- "
            << dot_quote(vertices[e.to].representative.display()) << " [label="
            << dot_quote(label);
        if (e.loop()) out << " style=bold";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

EqualityStructureVerdict equality_structure_check(const Antimorphism& theta, const FactorIndex& idx, std::size_t n,
                         const ComplexityProfile& profile) {
    if (n > profile.n_max())
        throw std::invalid_argument("equality_structure_check: profile does not cover n");
    SuperReducedGraph g = super_reduced_graph(theta, idx, n);
    EqualityStructureVerdict v{n, g.periodic_regime, true, true, false,
                   profile.status(n) == BalanceStatus::equal};
    if (!g.periodic_regime) {
        std::size_t non_loops = 0;
        std::vector<std::size_t> comp(g.vertices.size());
        for (std::size_t i = 0; i < comp.size(); ++i) comp[i] = i;
        auto find = [&](std::size_t x) {
            while (comp[x] != x) x = comp[x] = comp[comp[x]];
            return x;
        };
        for (const auto& e : g.edges) {
            if (e.loop()) {
                if (!e.theta_fixed) v.all_loops_theta_palindromic = false;
            } else {
                ++non_loops;
                comp[find(e.from)] = find(e.to);
            }
        }
        std::size_t components = 0;
        for (std::size_t i = 0; i < comp.size(); ++i)
            if (find(i) == i) ++components;
        const bool connected = g.vertices.empty() || components == 1;
        v.tree_after_loop_removal =
            connected && (g.vertices.empty() || non_loops == g.vertices.size() - 1);
    }
    v.equality_predicted = v.tree_after_loop_removal && v.all_loops_theta_palindromic;
    return v;
}

}  // namespace thetarich
