#include "hyperfano/coloring.hpp"

#include "hyperfano/error.hpp"

#include <algorithm>

namespace hf {

std::string_view to_string(Color c)
{
    return c == Color::Red ? "red" : "blue";
}

Color parse_color(std::string_view s)
{
    if (s == "red") return Color::Red;
    if (s == "blue") return Color::Blue;
    throw ParseError("unknown color '" + std::string(s) + "'");
}

int Graph::degree(Vertex v) const
{
    return std::popcount(adj[v] & vertices.mask());
}

int Graph::min_degree() const
{
    if (vertices.empty()) return 0;
    int best = kMaxVertices;
    for (Vertex v : vertices) best = std::min(best, degree(v));
    return best;
}

std::int64_t Graph::edge_count() const
{
    std::int64_t twice = 0;
    for (Vertex v : vertices) twice += degree(v);
    return twice / 2;
}

Graph Graph::complete(VertexSet vs)
{
    Graph g;
    g.vertices = vs;
    for (Vertex v : vs) g.adj[v] = vs.mask() & ~bit(v);
    return g;
}

Coloring::Coloring(int n, const std::vector<TripleId>& red) : n_(n)
{
    if (n < 0 || n > kMaxVertices)
        throw InvalidArgument("coloring size " + std::to_string(n) + " outside 0.." + std::to_string(kMaxVertices));
    bits_.assign((binomial(n, 3) + 63) / 64, 0);
    red_pairs_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (TripleId id : red) {
        Triple t = triple_unrank(id, n);
        set_red(t.a, t.b, t.c);
    }
}

Coloring Coloring::all(int n, Color c)
{
    return from_predicate(n, [c](Vertex, Vertex, Vertex) { return c == Color::Red; });
}

Coloring Coloring::from_predicate(int n, const std::function<bool(Vertex, Vertex, Vertex)>& is_red)
{
    Coloring out(n, {});
    for (Vertex c = 2; c < n; ++c)
        for (Vertex b = 1; b < c; ++b)
            for (Vertex a = 0; a < b; ++a)
                if (is_red(a, b, c)) out.set_red(a, b, c);
    return out;
}

void Coloring::set_red(Vertex a, Vertex b, Vertex c)
{
    const std::uint64_t r = colex_rank_unchecked(a, b, c);
    std::uint64_t& word = bits_[r >> 6];
    const std::uint64_t m = std::uint64_t{1} << (r & 63);
    if (word & m) return;
    word |= m;
    ++red_count_;
    auto pair = [this](Vertex x, Vertex y) -> VertexMask& {
        return red_pairs_[static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(y)];
    };
    pair(a, b) |= bit(c);
    pair(b, a) |= bit(c);
    pair(a, c) |= bit(b);
    pair(c, a) |= bit(b);
    pair(b, c) |= bit(a);
    pair(c, b) |= bit(a);
}

Color Coloring::color_of(Vertex x, Vertex y, Vertex z) const
{
    return is_red(triple_rank(x, y, z, n_)) ? Color::Red : Color::Blue;
}

std::vector<TripleId> Coloring::red_triples() const
{
    std::vector<TripleId> out;
    out.reserve(red_count_);
    const std::uint64_t total = triple_count();
    for (std::uint64_t r = 0; r < total; ++r)
        if (is_red(TripleId{r})) out.push_back(TripleId{r});
    return out;
}

Coloring Coloring::induced(VertexSet vs) const
{
    if (!(vs - all_vertices()).empty()) throw InvalidArgument("induced: vertex set exceeds host " + vs.to_string());
    const std::vector<Vertex> map = vs.to_vector();
    return from_predicate(static_cast<int>(map.size()), [&](Vertex a, Vertex b, Vertex c) {
        return is_red(TripleId{colex_rank_unchecked(map[a], map[b], map[c])});
    });
}

namespace {

void require_in_host(const Coloring& c, VertexSet s, const char* what)
{
    if (!(s - c.all_vertices()).empty())
        throw InvalidArgument(std::string(what) + ": vertex set " + s.to_string() + " outside host");
}

} // namespace

LinkGraph link_graph(const Coloring& c, Vertex v, VertexSet W, Color col)
{
    if (W.contains(v)) throw InvalidArgument("link_graph: center " + std::to_string(v) + " lies in the ground set");
    if (v < 0 || v >= c.n_vertices()) throw InvalidArgument("link_graph: center out of range");
    require_in_host(c, W, "link_graph");
    LinkGraph lg{v, col, {}};
    lg.graph.vertices = W;
    for (Vertex a : W) lg.graph.adj[a] = c.pair_mask(v, a, col) & W.mask();
    return lg;
}

std::int64_t directed_count(const Coloring& c, VertexSet A, VertexSet B, Color col)
{
    if (A.intersects(B)) throw InvalidArgument("directed_count: sets overlap");
    require_in_host(c, A | B, "directed_count");
    std::int64_t total = 0;
    for (Vertex a : A)
        for (Vertex b1 : B) total += std::popcount(c.pair_mask(a, b1, col) & B.mask() & ~prefix_mask(b1 + 1));
    return total;
}

std::int64_t cross_count(const Coloring& c, VertexSet A, VertexSet B, VertexSet C, Color col)
{
    if (A.intersects(B) || A.intersects(C) || B.intersects(C)) throw InvalidArgument("cross_count: sets overlap");
    require_in_host(c, A | B | C, "cross_count");
    std::int64_t total = 0;
    for (Vertex a : A)
        for (Vertex b : B) total += std::popcount(c.pair_mask(a, b, col) & C.mask());
    return total;
}

} // namespace hf
