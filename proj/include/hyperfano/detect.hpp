#pragma once

#include "hyperfano/coloring.hpp"
#include "hyperfano/patterns.hpp"
#include "hyperfano/witness.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace hf {

struct SearchOptions {
    /// Workers for the top-level branch split. Results never depend on it.
    int threads = 1;
    /// Nodes allowed per image of pattern vertex 0 (0 = unlimited). Exhausting
    /// it under an image smaller than any successful one throws BudgetExceeded.
    std::uint64_t node_budget = 0;
};

struct SearchStats {
    std::uint64_t nodes = 0;
};

// ---------------------------------------------------------------------------
// Generic embedding engine
// ---------------------------------------------------------------------------

/// Lexicographically least injective map (pattern vertex order, ascending host
/// vertices) sending every pattern edge to a triple of color `col`.
///
/// Depth-first with forward checking over pair masks, plus a no-good cache
/// keyed on (depth, used vertices, images of the assigned vertices that still
/// share an edge with an unassigned one).
std::optional<Witness> find_mono(const Coloring& host, const Pattern& p, Color col, const SearchOptions& opts = {},
                                 SearchStats* stats = nullptr);

// ---------------------------------------------------------------------------
// Tight paths
// ---------------------------------------------------------------------------

struct TightPathOptions {
    /// Hosts up to this size get the memoized longest-extension search; larger
    /// hosts use an increasing-target ladder with per-target failure caches.
    int exact_max_n = 20;
    /// 0 = unlimited. When exhausted the result is a lower bound (exact = false).
    std::uint64_t node_budget = 0;
};

struct TightPathResult {
    int length = 2;
    std::optional<Witness> witness; ///< absent when length < 3
    bool exact = true;
    std::uint64_t nodes = 0;
};

/// Largest n <= cap with a red tight path on n vertices. Returns 2 and no
/// witness when the host has no red triple.
TightPathResult longest_red_tight_path(const Coloring& host, int cap, const TightPathOptions& opts = {});

/// Extends `prefix` (length >= 2) by vertices from `pool` to a red tight path
/// of exactly `target` vertices. Depth-first, ascending candidates, failure
/// cache on (used, last two). Empty when impossible or the budget runs out.
std::optional<std::vector<Vertex>> extend_red_tight_path(const Coloring& host, const std::vector<Vertex>& prefix,
                                                         VertexSet pool, int target, std::uint64_t node_budget = 0,
                                                         SearchStats* stats = nullptr);

// ---------------------------------------------------------------------------
// Named structures
// ---------------------------------------------------------------------------

/// Lexicographically least m-set inside `within` spanning only red triples.
std::optional<VertexSet> find_red_clique(const Coloring& host, int m, VertexSet within);
std::optional<VertexSet> find_red_clique(const Coloring& host, int m);

/// a1 < a2 in A, b1 < b2 in B with red {a_outer, a_inner, b_inner} and
/// {a_inner, b_inner, b_outer}: the tight path a_outer a_inner b_inner b_outer.
struct Butterfly {
    Vertex a1 = 0, a2 = 0, b1 = 0, b2 = 0;
    bool inner_a_is_a2 = true; ///< orientation marker
    bool inner_b_is_b1 = true;

    Vertex a_inner() const { return inner_a_is_a2 ? a2 : a1; }
    Vertex a_outer() const { return inner_a_is_a2 ? a1 : a2; }
    Vertex b_inner() const { return inner_b_is_b1 ? b1 : b2; }
    Vertex b_outer() const { return inner_b_is_b1 ? b2 : b1; }
    /// a_outer, a_inner, b_inner, b_outer
    std::array<Vertex, 4> as_path() const { return {a_outer(), a_inner(), b_inner(), b_outer()}; }
    VertexSet vertices() const { return VertexSet{a1, a2, b1, b2}; }
    bool operator==(const Butterfly&) const = default;
};

/// Red butterfly on {a1,a2} x {b1,b2}, preferring the orientations
/// (a2,b1), (a2,b2), (a1,b1), (a1,b2) for (a_inner, b_inner).
std::optional<Butterfly> butterfly_on(const Coloring& host, Vertex a1, Vertex a2, Vertex b1, Vertex b2);

/// Every red butterfly between disjoint A and B, in lexicographic (a1,a2,b1,b2) order.
std::vector<Butterfly> all_butterflies(const Coloring& host, VertexSet A, VertexSet B);

/// Greedy pairwise vertex-disjoint butterflies scanning (a1,a2,b1,b2)
/// lexicographically; maximal with respect to inclusion.
std::vector<Butterfly> max_disjoint_butterflies(const Coloring& host, VertexSet A, VertexSet B);

/// w,x,y,z on one side, v on the other, with wxv, xyv, yzv red.
struct TripleTriangle {
    Vertex w = 0, x = 0, y = 0, z = 0;
    Vertex v = 0;
    bool quad_in_first = true; ///< w..z lie in the first set argument
    bool operator==(const TripleTriangle&) const = default;
};

/// Lexicographically least 3-edge path w-x-y-z inside `g`.
std::optional<std::array<Vertex, 4>> find_three_edge_path(const Graph& g);

/// Quadruple in `quad_side` (minus `exclude`), apex in `apex_side`, lexicographic in (v, w, x, y, z).
std::optional<TripleTriangle> find_triple_triangle_directed(const Coloring& host, VertexSet quad_side,
                                                            VertexSet apex_side, VertexSet exclude = {});

/// Either direction; quadruple-in-A first.
std::optional<TripleTriangle> find_triple_triangle(const Coloring& host, VertexSet A, VertexSet B);

/// S in A, T in B, |S| = |T| = t, all arcs s -> t present. Exact; branches over
/// A in decreasing out-degree order and prunes on the common out-neighborhood.
std::optional<std::pair<VertexSet, VertexSet>> find_directed_ktt(const Digraph& d, VertexSet A, VertexSet B, int t);

/// Two-colored complete bipartite graph: red_rows[i] holds the right vertices j with (i,j) red.
struct BipartiteColoring {
    int left = 0;
    int right = 0;
    std::vector<VertexMask> red_rows;

    Color color(int i, int j) const { return (red_rows[i] >> j) & 1U ? Color::Red : Color::Blue; }
};

struct MonoBiclique {
    Color color = Color::Red;
    std::vector<int> left;
    std::vector<int> right;
};

/// Every two-coloring of K_{t,t} with t >= this contains a monochromatic K_{4,4}.
inline constexpr int kK44BipartiteRamseyBound = 48;

/// Monochromatic K_{k,k}: red first, then blue, lexicographically least left set.
std::optional<MonoBiclique> find_mono_biclique(const BipartiteColoring& bip, int k);
std::optional<MonoBiclique> find_mono_k44(const BipartiteColoring& bip);

/// Hamiltonian path by rotation-extension. Succeeds whenever the minimum degree
/// is at least |V|/2; otherwise still tries and throws NotFound if it gives up.
std::vector<Vertex> hamiltonian_path_dense(const Graph& g);

} // namespace hf
