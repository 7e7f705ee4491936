#include "hyperfano/detect.hpp"

#include "hyperfano/error.hpp"

#include <algorithm>
#include <set>

namespace hf {

namespace {

/// Closed neighborhoods are never used; adjacency is restricted to the graph's vertices.
struct Adj {
    const Graph& g;
    VertexMask of(Vertex v) const { return g.adj[v] & g.vertices.mask(); }
    bool has(Vertex u, Vertex v) const { return (of(u) >> v) & 1U; }
};

/// Extend at both ends; when stuck close a cycle (Ore) and re-open it at a
/// vertex with an outside neighbor; when no cycle closes, rotate (Posa).
std::optional<std::vector<Vertex>> rotation_extension(const Graph& g)
{
    const Adj adj{g};
    const int n = g.vertices.size();
    std::vector<Vertex> path{g.vertices.front()};
    VertexMask on_path = bit(path.front());
    std::set<Vertex> rotated_endpoints;
    int rotations = 0;
    const int rotation_limit = n * n + 8;

    while (static_cast<int>(path.size()) < n) {
        if (VertexMask ext = adj.of(path.back()) & ~on_path) {
            const Vertex u = std::countr_zero(ext);
            path.push_back(u);
            on_path |= bit(u);
            rotated_endpoints.clear();
            continue;
        }
        if (VertexMask ext = adj.of(path.front()) & ~on_path) {
            const Vertex u = std::countr_zero(ext);
            path.insert(path.begin(), u);
            on_path |= bit(u);
            rotated_endpoints.clear();
            continue;
        }

        const int k = static_cast<int>(path.size());
        const Vertex head = path.front(), tail = path.back();
        std::vector<Vertex> cycle;
        if (k >= 3 && adj.has(head, tail)) {
            cycle = path;
        } else {
            for (int i = 0; i + 1 < k && cycle.empty(); ++i) {
                if (adj.has(head, path[i + 1]) && adj.has(tail, path[i])) {
                    cycle.assign(path.begin(), path.begin() + i + 1);
                    cycle.insert(cycle.end(), path.rbegin(), path.rend() - (i + 1));
                }
            }
        }
        if (!cycle.empty()) {
            // reopen the cycle next to a vertex with an outside neighbor
            bool reopened = false;
            for (int j = 0; j < k && !reopened; ++j) {
                if (VertexMask out = adj.of(cycle[j]) & ~on_path) {
                    const Vertex u = std::countr_zero(out);
                    path.clear();
                    path.push_back(u);
                    for (int s = 0; s < k; ++s) path.push_back(cycle[(j + s) % k]);
                    on_path |= bit(u);
                    reopened = true;
                }
            }
            if (!reopened) return std::nullopt; // disconnected
            rotated_endpoints.clear();
            continue;
        }

        if (++rotations > rotation_limit) return std::nullopt;
        bool rotated = false;
        for (int i = 0; i + 2 < k && !rotated; ++i) {
            if (!adj.has(tail, path[i]) || rotated_endpoints.count(path[i + 1])) continue;
            rotated_endpoints.insert(path[i + 1]);
            std::reverse(path.begin() + i + 1, path.end());
            rotated = true;
        }
        if (!rotated) return std::nullopt;
    }
    return path;
}

/// Held-Karp style reachability over subsets; only for small graphs.
std::optional<std::vector<Vertex>> exact_hamiltonian_path(const Graph& g)
{
    const std::vector<Vertex> vs = g.vertices.to_vector();
    const int n = static_cast<int>(vs.size());
    const std::size_t full = (std::size_t{1} << n);
    // reach[mask] = bitmask of end indices for which a path covering mask exists
    std::vector<std::uint32_t> reach(full, 0);
    for (int i = 0; i < n; ++i) reach[std::size_t{1} << i] = 1U << i;
    for (std::size_t mask = 1; mask < full; ++mask) {
        if (!reach[mask]) continue;
        for (int e = 0; e < n; ++e) {
            if (!((reach[mask] >> e) & 1U)) continue;
            for (int f = 0; f < n; ++f)
                if (!((mask >> f) & 1U) && g.has_edge(vs[e], vs[f])) reach[mask | (std::size_t{1} << f)] |= 1U << f;
        }
    }
    if (!reach[full - 1]) return std::nullopt;
    std::vector<Vertex> rev;
    std::size_t mask = full - 1;
    int end = std::countr_zero(reach[mask]);
    while (true) {
        rev.push_back(vs[end]);
        const std::size_t prev = mask & ~(std::size_t{1} << end);
        if (!prev) break;
        int next = -1;
        for (int e = 0; e < n && next < 0; ++e)
            if (((reach[prev] >> e) & 1U) && g.has_edge(vs[e], vs[end])) next = e;
        mask = prev;
        end = next;
    }
    return std::vector<Vertex>(rev.rbegin(), rev.rend());
}

} // namespace

std::vector<Vertex> hamiltonian_path_dense(const Graph& g)
{
    const int n = g.vertices.size();
    if (n == 0) return {};
    if (n == 1) return {g.vertices.front()};
    const int min_deg = g.min_degree();
    const bool dirac = 2 * min_deg >= n;

    if (auto p = rotation_extension(g)) return *p;
    if (n <= 20)
        if (auto p = exact_hamiltonian_path(g)) return *p;
    if (dirac) throw NotFound("hamiltonian_path_dense: rotation-extension failed on a graph meeting the degree condition");
    throw NotFound("hamiltonian_path_dense: precondition violated (min degree " + std::to_string(min_deg) + " < " +
                   std::to_string(n) + "/2) and no Hamiltonian path found");
}

} // namespace hf
