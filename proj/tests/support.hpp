#pragma once

// Test-side helpers: a small seeded RNG, random instance generators, and
// brute-force checkers that do not call into the library's search code.

#include "hyperfano/coloring.hpp"
#include "hyperfano/patterns.hpp"
#include "hyperfano/witness.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace hf::test {

/// splitmix64
class Rng {
public:
    explicit Rng(std::uint64_t seed) : s_(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (s_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    /// uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return next() % n; }
    int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    bool chance(double p) { return unit() < p; }

    template <class T>
    void shuffle(std::vector<T>& v)
    {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::uint64_t s_;
};

inline Coloring random_coloring(Rng& rng, int n, double p_red)
{
    return Coloring::from_predicate(n, [&](Vertex, Vertex, Vertex) { return rng.chance(p_red); });
}

inline std::vector<Vertex> random_permutation(Rng& rng, int n)
{
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), 0);
    rng.shuffle(p);
    return p;
}

/// Random subset of [0, n) with each vertex kept with probability p.
inline VertexSet random_subset(Rng& rng, int n, double p)
{
    VertexSet s;
    for (Vertex v = 0; v < n; ++v)
        if (rng.chance(p)) s.insert(v);
    return s;
}

// --- brute-force checkers ----------------------------------------------------

/// Every triple {a<b<c} of [n] listed with c major, then b, then a.
inline std::vector<Triple> colex_triples(int n)
{
    std::vector<Triple> out;
    for (Vertex c = 2; c < n; ++c)
        for (Vertex b = 1; b < c; ++b)
            for (Vertex a = 0; a < b; ++a) out.push_back(Triple{a, b, c});
    return out;
}

/// Do the mapped edges all have color col, with an injective in-range map?
inline bool naive_check(const Coloring& c, const Pattern& p, const std::vector<Vertex>& map, Color col)
{
    if (static_cast<int>(map.size()) != p.n_vertices) return false;
    std::set<Vertex> seen;
    for (Vertex v : map) {
        if (v < 0 || v >= c.n_vertices() || !seen.insert(v).second) return false;
    }
    for (const Triple& e : p.edges)
        if (c.color_of(map[e.a], map[e.b], map[e.c]) != col) return false;
    return true;
}

/// Pair-coverage check for seven triples: every pair of the support covered once.
inline bool pair_coverage_fano(const std::vector<Triple>& edges)
{
    std::set<Vertex> support;
    for (const Triple& e : edges) support.insert({e.a, e.b, e.c});
    if (support.size() != 7 || edges.size() != 7) return false;
    std::vector<Vertex> s(support.begin(), support.end());
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = i + 1; j < 7; ++j) {
            int hits = 0;
            for (const Triple& e : edges) {
                const std::set<Vertex> t{e.a, e.b, e.c};
                hits += t.count(s[i]) && t.count(s[j]);
            }
            if (hits != 1) return false;
        }
    return true;
}

/// Longest red tight path by trying every ordering of every subset (n <= 8).
inline int permutation_longest_path(const Coloring& c)
{
    const int n = c.n_vertices();
    int best = std::min(n, 2);
    for (VertexMask m = 0; m < (VertexMask{1} << n); ++m) {
        const int k = std::popcount(m);
        if (k <= best) continue;
        std::vector<Vertex> seq = VertexSet(m).to_vector();
        do {
            bool ok = true;
            for (int i = 0; i + 2 < k && ok; ++i) ok = c.color_of(seq[i], seq[i + 1], seq[i + 2]) == Color::Red;
            if (ok) {
                best = k;
                break;
            }
        } while (std::next_permutation(seq.begin(), seq.end()));
    }
    return best;
}

} // namespace hf::test
