#pragma once

#include "hyperfano/vertex_set.hpp"

#include <array>
#include <cstdint>
#include <string>

namespace hf {

/// C(n, k) for the small k used here; 0 when k > n.
constexpr std::uint64_t binomial(std::int64_t n, int k) noexcept
{
    if (k < 0 || n < k) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

/// A 3-set of vertices stored sorted, a < b < c.
struct Triple {
    Vertex a = 0;
    Vertex b = 0;
    Vertex c = 0;

    /// Sorts the three vertices; throws InvalidArgument on a repeated vertex.
    static Triple of(Vertex x, Vertex y, Vertex z);

    std::array<Vertex, 3> vertices() const { return {a, b, c}; }
    VertexSet as_set() const { return VertexSet{a, b, c}; }
    bool operator==(const Triple&) const = default;
    std::string to_string() const;
};

/// Colexicographic rank of a triple over [N].
struct TripleId {
    std::uint64_t rank = 0;
    auto operator<=>(const TripleId&) const = default;
};

/// C(c,3)+C(b,2)+C(a,1) after sorting. Throws on duplicates or a vertex >= n.
TripleId triple_rank(Vertex x, Vertex y, Vertex z, int n);
TripleId triple_rank(const Triple& t, int n);

/// Inverse of triple_rank; throws if rank >= C(n,3).
Triple triple_unrank(TripleId id, int n);

/// Rank without validation, for hot loops over pre-sorted triples.
constexpr std::uint64_t colex_rank_unchecked(Vertex a, Vertex b, Vertex c) noexcept
{
    return binomial(c, 3) + binomial(b, 2) + static_cast<std::uint64_t>(a);
}

} // namespace hf
