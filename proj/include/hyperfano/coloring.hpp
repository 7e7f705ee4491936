#pragma once

#include "hyperfano/triple.hpp"
#include "hyperfano/vertex_set.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

namespace hf {

enum class Color : std::uint8_t { Red, Blue };

inline constexpr Color other(Color c) noexcept { return c == Color::Red ? Color::Blue : Color::Red; }
std::string_view to_string(Color c);
/// "red" / "blue"; throws ParseError otherwise.
Color parse_color(std::string_view s);

/// Simple undirected graph on a subset of 0..63, adjacency as bitmasks.
struct Graph {
    VertexSet vertices;
    std::array<VertexMask, kMaxVertices> adj{};

    void add_edge(Vertex u, Vertex v)
    {
        adj[u] |= bit(v);
        adj[v] |= bit(u);
    }
    bool has_edge(Vertex u, Vertex v) const { return (adj[u] & bit(v)) != 0; }
    int degree(Vertex v) const;
    int min_degree() const;
    std::int64_t edge_count() const;
    /// Complete graph on `vs`.
    static Graph complete(VertexSet vs);
};

struct LinkGraph {
    Vertex center = 0;
    Color color = Color::Red;
    Graph graph; ///< graph.vertices is the ground set W
};

/// Directed graph; out[u] holds the heads of arcs leaving u.
struct Digraph {
    VertexSet vertices;
    std::array<VertexMask, kMaxVertices> out{};

    void add_arc(Vertex u, Vertex v) { out[u] |= bit(v); }
    bool has_arc(Vertex u, Vertex v) const { return (out[u] & bit(v)) != 0; }
};

/// Red/blue coloring of every triple of [N]. Red triples are stored as a dense
/// bitset over colex ranks; blue is the complement. Immutable once built.
class Coloring {
public:
    Coloring() = default;
    /// `red` may be in any order; duplicates are ignored.
    Coloring(int n, const std::vector<TripleId>& red);

    static Coloring all(int n, Color c);
    static Coloring from_predicate(int n, const std::function<bool(Vertex, Vertex, Vertex)>& is_red);

    int n_vertices() const { return n_; }
    std::uint64_t triple_count() const { return binomial(n_, 3); }
    std::uint64_t red_count() const { return red_count_; }
    std::uint64_t blue_count() const { return triple_count() - red_count_; }
    VertexSet all_vertices() const { return VertexSet::range(0, n_); }

    Color color_of(Vertex x, Vertex y, Vertex z) const;
    Color color_of(const Triple& t) const { return color_of(t.a, t.b, t.c); }
    bool is_red(TripleId id) const { return (bits_[id.rank >> 6] >> (id.rank & 63)) & 1U; }

    /// All c with {a,b,c} of color `col` (a != b; a, b excluded).
    VertexMask pair_mask(Vertex a, Vertex b, Color col) const
    {
        VertexMask m = red_pairs_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b)];
        return col == Color::Red ? m : (all_vertices().mask() & ~m & ~bit(a) & ~bit(b));
    }

    /// Red triples in ascending colex order.
    std::vector<TripleId> red_triples() const;

    /// Coloring induced on `vs`, relabeled to 0..|vs|-1 in ascending order.
    Coloring induced(VertexSet vs) const;

    bool operator==(const Coloring& o) const { return n_ == o.n_ && bits_ == o.bits_; }

private:
    void set_red(Vertex a, Vertex b, Vertex c);

    int n_ = 0;
    std::uint64_t red_count_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<VertexMask> red_pairs_;
};

/// Graph on W with edge ab iff {v,a,b} has color `col`. Throws if v is in W.
LinkGraph link_graph(const Coloring& c, Vertex v, VertexSet W, Color col);

/// |{(a,{b1,b2}) : a in A, b1,b2 in B, color = col}|. Throws on overlapping sets.
std::int64_t directed_count(const Coloring& c, VertexSet A, VertexSet B, Color col);

/// |{(a,b,x) in A x B x C of color col}|. Throws unless pairwise disjoint.
std::int64_t cross_count(const Coloring& c, VertexSet A, VertexSet B, VertexSet C, Color col);

} // namespace hf
