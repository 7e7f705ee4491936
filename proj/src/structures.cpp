#include "hyperfano/detect.hpp"

#include "hyperfano/error.hpp"

#include <algorithm>

namespace hf {

// --- red cliques -----------------------------------------------------------

namespace {

bool grow_clique(const Coloring& host, int m, std::vector<Vertex>& chosen, VertexMask common)
{
    if (static_cast<int>(chosen.size()) == m) return true;
    const Vertex last = chosen.empty() ? -1 : chosen.back();
    VertexMask cands = common & ~prefix_mask(last + 1);
    while (cands) {
        if (std::popcount(cands) < m - static_cast<int>(chosen.size())) return false;
        const Vertex v = std::countr_zero(cands);
        cands &= cands - 1;
        // every pair among the chosen vertices must see the next vertex red
        VertexMask next = common;
        for (Vertex u : chosen) next &= host.pair_mask(u, v, Color::Red);
        chosen.push_back(v);
        if (grow_clique(host, m, chosen, next & ~bit(v))) return true;
        chosen.pop_back();
    }
    return false;
}

} // namespace

std::optional<VertexSet> find_red_clique(const Coloring& host, int m, VertexSet within)
{
    if (m < 3 || m > host.n_vertices())
        throw InvalidArgument("find_red_clique: need 3 <= m <= N, got m=" + std::to_string(m));
    within = within & host.all_vertices();
    std::vector<Vertex> chosen;
    if (!grow_clique(host, m, chosen, within.mask())) return std::nullopt;
    return VertexSet::from_vector(chosen);
}

std::optional<VertexSet> find_red_clique(const Coloring& host, int m)
{
    return find_red_clique(host, m, host.all_vertices());
}

// --- butterflies -----------------------------------------------------------

std::optional<Butterfly> butterfly_on(const Coloring& host, Vertex a1, Vertex a2, Vertex b1, Vertex b2)
{
    auto red = [&](Vertex x, Vertex y, Vertex z) { return host.color_of(x, y, z) == Color::Red; };
    for (const bool inner_a2 : {true, false})
        for (const bool inner_b1 : {true, false}) {
            const Vertex ai = inner_a2 ? a2 : a1;
            const Vertex bi = inner_b1 ? b1 : b2;
            const Vertex bo = inner_b1 ? b2 : b1;
            if (red(a1, a2, bi) && red(ai, bi, bo)) return Butterfly{a1, a2, b1, b2, inner_a2, inner_b1};
        }
    return std::nullopt;
}

std::vector<Butterfly> all_butterflies(const Coloring& host, VertexSet A, VertexSet B)
{
    if (A.intersects(B)) throw InvalidArgument("all_butterflies: A and B overlap");
    std::vector<Butterfly> out;
    for (Vertex a1 : A)
        for (Vertex a2 : A - VertexSet(prefix_mask(a1 + 1)))
            for (Vertex b1 : B)
                for (Vertex b2 : B - VertexSet(prefix_mask(b1 + 1)))
                    if (auto bf = butterfly_on(host, a1, a2, b1, b2)) out.push_back(*bf);
    return out;
}

std::vector<Butterfly> max_disjoint_butterflies(const Coloring& host, VertexSet A, VertexSet B)
{
    if (A.intersects(B)) throw InvalidArgument("max_disjoint_butterflies: A and B overlap");
    std::vector<Butterfly> out;
    VertexSet used;
    for (Vertex a1 : A)
        for (Vertex a2 : A - VertexSet(prefix_mask(a1 + 1))) {
            if (used.contains(a1) || used.contains(a2)) continue;
            for (Vertex b1 : B)
                for (Vertex b2 : B - VertexSet(prefix_mask(b1 + 1))) {
                    if (used.intersects(VertexSet{a1, a2, b1, b2})) continue;
                    if (auto bf = butterfly_on(host, a1, a2, b1, b2)) {
                        out.push_back(*bf);
                        used |= bf->vertices();
                    }
                }
        }
    return out;
}

// --- triple triangles --------------------------------------------------------

std::optional<std::array<Vertex, 4>> find_three_edge_path(const Graph& g)
{
    for (Vertex w : g.vertices)
        for (Vertex x : VertexSet(g.adj[w] & g.vertices.mask()))
            for (Vertex y : VertexSet(g.adj[x] & g.vertices.mask() & ~bit(w))) {
                const VertexMask zs = g.adj[y] & g.vertices.mask() & ~bit(w) & ~bit(x);
                if (zs) return std::array<Vertex, 4>{w, x, y, static_cast<Vertex>(std::countr_zero(zs))};
            }
    return std::nullopt;
}

std::optional<TripleTriangle> find_triple_triangle_directed(const Coloring& host, VertexSet quad_side,
                                                            VertexSet apex_side, VertexSet exclude)
{
    if (quad_side.intersects(apex_side)) throw InvalidArgument("triple triangle: sets overlap");
    const VertexSet ground = quad_side - exclude;
    for (Vertex v : apex_side - exclude) {
        const LinkGraph lg = link_graph(host, v, ground, Color::Red);
        if (auto p = find_three_edge_path(lg.graph)) return TripleTriangle{(*p)[0], (*p)[1], (*p)[2], (*p)[3], v, true};
    }
    return std::nullopt;
}

std::optional<TripleTriangle> find_triple_triangle(const Coloring& host, VertexSet A, VertexSet B)
{
    if (A.intersects(B)) throw InvalidArgument("find_triple_triangle: sets overlap");
    if (auto t = find_triple_triangle_directed(host, A, B)) return t;
    if (auto t = find_triple_triangle_directed(host, B, A)) {
        t->quad_in_first = false;
        return t;
    }
    return std::nullopt;
}

// --- directed K_{t,t} ------------------------------------------------------

namespace {

bool grow_ktt(const Digraph& d, const std::vector<Vertex>& order, std::size_t from, int t, std::vector<Vertex>& S,
              VertexMask common)
{
    if (static_cast<int>(S.size()) == t) return true;
    for (std::size_t i = from; i < order.size(); ++i) {
        if (order.size() - i < static_cast<std::size_t>(t) - S.size()) return false;
        const VertexMask next = common & d.out[order[i]];
        if (std::popcount(next) < t) continue;
        S.push_back(order[i]);
        if (grow_ktt(d, order, i + 1, t, S, next)) return true;
        S.pop_back();
    }
    return false;
}

} // namespace

std::optional<std::pair<VertexSet, VertexSet>> find_directed_ktt(const Digraph& d, VertexSet A, VertexSet B, int t)
{
    if (t < 1) throw InvalidArgument("find_directed_ktt: t must be >= 1");
    if (A.intersects(B)) throw InvalidArgument("find_directed_ktt: parts overlap");
    std::vector<Vertex> order = A.to_vector();
    auto outdeg = [&](Vertex a) { return std::popcount(d.out[a] & B.mask()); };
    std::stable_sort(order.begin(), order.end(), [&](Vertex x, Vertex y) { return outdeg(x) > outdeg(y); });
    std::vector<Vertex> S;
    if (!grow_ktt(d, order, 0, t, S, B.mask())) return std::nullopt;
    VertexMask common = B.mask();
    for (Vertex s : S) common &= d.out[s];
    VertexSet T;
    for (Vertex b : VertexSet(common)) {
        if (T.size() == t) break;
        T.insert(b);
    }
    return std::make_pair(VertexSet::from_vector(S), T);
}

// --- monochromatic bicliques -------------------------------------------------

namespace {

bool grow_biclique(const std::vector<VertexMask>& rows, int k, int from, std::vector<int>& L, VertexMask common)
{
    if (static_cast<int>(L.size()) == k) return true;
    const int left = static_cast<int>(rows.size());
    for (int i = from; i < left; ++i) {
        if (left - i < k - static_cast<int>(L.size())) return false;
        const VertexMask next = common & rows[i];
        if (std::popcount(next) < k) continue;
        L.push_back(i);
        if (grow_biclique(rows, k, i + 1, L, next)) return true;
        L.pop_back();
    }
    return false;
}

} // namespace

std::optional<MonoBiclique> find_mono_biclique(const BipartiteColoring& bip, int k)
{
    if (k < 1) throw InvalidArgument("find_mono_biclique: k must be >= 1");
    if (bip.right > kMaxVertices || static_cast<int>(bip.red_rows.size()) != bip.left)
        throw InvalidArgument("find_mono_biclique: malformed bipartite coloring");
    const VertexMask all_right = prefix_mask(bip.right);
    for (const Color col : {Color::Red, Color::Blue}) {
        std::vector<VertexMask> rows(bip.red_rows);
        if (col == Color::Blue)
            for (auto& r : rows) r = ~r & all_right;
        std::vector<int> L;
        if (!grow_biclique(rows, k, 0, L, all_right)) continue;
        VertexMask common = all_right;
        for (int i : L) common &= rows[i];
        MonoBiclique out{col, L, {}};
        for (Vertex j : VertexSet(common)) {
            if (static_cast<int>(out.right.size()) == k) break;
            out.right.push_back(j);
        }
        return out;
    }
    return std::nullopt;
}

std::optional<MonoBiclique> find_mono_k44(const BipartiteColoring& bip)
{
    return find_mono_biclique(bip, 4);
}

} // namespace hf
