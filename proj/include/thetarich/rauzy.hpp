#pragma once

#include <string>
#include <vector>

#include "thetarich/complexity.hpp"
#include "thetarich/core.hpp"

namespace thetarich {

struct RauzyEdge {
    Word word;  // length n+1 factor
    std::size_t from;
    std::size_t to;  // indices into RauzyGraph::vertices
};

/// Γ_n: vertices are the length-n factors, edges the length-(n+1) factors,
/// each going from its length-n prefix to its length-n suffix.
struct RauzyGraph {
    std::size_t order;
    std::vector<Word> vertices;   // lexicographic
    std::vector<RauzyEdge> edges; // lexicographic by edge word
    bool strongly_connected;

    std::string to_dot() const;
};

/// Requires n+1 <= idx.max_len().
RauzyGraph rauzy_graph(const FactorIndex& idx, std::size_t n);

/// A factor whose length-n prefix and suffix are special (left or right)
/// while no interior length-n factor is special. `provisional` marks paths
/// the window cannot vouch for: walks cut off by the window edge and paths
/// using an edge that never occurs with one letter of margin on both sides.
struct SimplePath {
    std::size_t order;
    Word word;  // length >= order + 1
    bool provisional;

    Word start_vertex() const { return word.prefix(order); }
    Word end_vertex() const { return word.suffix(order); }
};

struct SimplePathSet {
    std::size_t order;
    bool periodic_regime;  // no special factor of length `order` observed
    std::vector<SimplePath> paths;  // sorted by word
    /// Edges of Γ_n lying on none of the returned paths (0 on recurrent
    /// windows; boundary truncation can strand a few). Reported as 0 in the
    /// periodic regime, where no walk is attempted.
    std::size_t uncovered_edges;
};

SimplePathSet n_simple_paths(const FactorIndex& idx, std::size_t n);

/// Γ′_n: the special factors of length n joined by the n-simple paths.
struct ReducedGraph {
    std::size_t order;
    bool periodic_regime;
    std::vector<Word> vertices;  // special factors, lexicographic
    std::vector<SimplePath> paths;

    std::string to_dot() const;
};

ReducedGraph reduced_graph(const FactorIndex& idx, std::size_t n);

/// Γ″_n: Γ′_n quotiented by Θ. Vertices are unordered pairs {w, Θ(w)} of
/// special factors, edges unordered pairs {p, Θ(p)} of n-simple paths;
/// loops and multi-edges are kept as distinct objects.
struct SuperReducedGraph {
    struct Vertex {
        Word representative;  // min(w, Θ(w))
        bool theta_palindromic;
    };
    struct Edge {
        Word representative;  // min(p, Θ(p)) among the underlying paths
        std::size_t from;
        std::size_t to;  // vertex indices with from <= to
        bool theta_fixed;  // p == Θ(p)

        bool loop() const { return from == to; }
    };

    std::size_t order;
    bool periodic_regime;
    std::vector<Vertex> vertices;  // sorted by representative
    std::vector<Edge> edges;       // sorted by representative
    std::size_t alpha;  // special Θ-palindromes of length n
    std::size_t beta;   // unordered pairs {w, Θ(w)} with w != Θ(w)
    /// Provisional paths are excluded from the quotient; this counts them.
    std::size_t provisional_excluded;

    std::string to_dot() const;
};

SuperReducedGraph super_reduced_graph(const Antimorphism& theta, const FactorIndex& idx,
                                      std::size_t n);

/// Structural equality test: P(n)+P(n+1) = ΔC(n)+2 holds exactly when Γ″_n
/// minus its loops is a tree and every loop is θ-fixed; with no special
/// factors of length n the graph is empty and the equality reduces to
/// P(n)+P(n+1) = 2.
struct EqualityStructureVerdict {
    std::size_t n;
    bool periodic_regime;
    bool tree_after_loop_removal;
    bool all_loops_theta_palindromic;
    bool equality_predicted;
    bool equality_observed;
};

/// Requires profile.n_max() >= n.
EqualityStructureVerdict equality_structure_check(const Antimorphism& theta, const FactorIndex& idx, std::size_t n,
                         const ComplexityProfile& profile);

}  // namespace thetarich
