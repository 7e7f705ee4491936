#include "hyperfano/triple.hpp"

#include "hyperfano/error.hpp"

#include <algorithm>

namespace hf {

Triple Triple::of(Vertex x, Vertex y, Vertex z)
{
    std::array<Vertex, 3> v{x, y, z};
    std::sort(v.begin(), v.end());
    if (v[0] == v[1] || v[1] == v[2])
        throw InvalidArgument("triple has a repeated vertex: " + std::to_string(x) + " " + std::to_string(y) + " " +
                              std::to_string(z));
    return Triple{v[0], v[1], v[2]};
}

std::string Triple::to_string() const
{
    return std::to_string(a) + " " + std::to_string(b) + " " + std::to_string(c);
}

TripleId triple_rank(const Triple& t, int n)
{
    if (t.a < 0 || !(t.a < t.b && t.b < t.c))
        throw InvalidArgument("triple is not a sorted 3-set: " + t.to_string());
    if (t.c >= n) throw InvalidArgument("vertex " + std::to_string(t.c) + " out of range for N=" + std::to_string(n));
    return TripleId{colex_rank_unchecked(t.a, t.b, t.c)};
}

TripleId triple_rank(Vertex x, Vertex y, Vertex z, int n)
{
    return triple_rank(Triple::of(x, y, z), n);
}

Triple triple_unrank(TripleId id, int n)
{
    if (n < 3 || id.rank >= binomial(n, 3))
        throw InvalidArgument("rank " + std::to_string(id.rank) + " out of range for N=" + std::to_string(n));
    std::uint64_t r = id.rank;
    // largest c with C(c,3) <= r, then b, then a
    Vertex c = 2;
    while (binomial(c + 1, 3) <= r) ++c;
    r -= binomial(c, 3);
    Vertex b = 1;
    while (binomial(b + 1, 2) <= r) ++b;
    r -= binomial(b, 2);
    return Triple{static_cast<Vertex>(r), b, c};
}

} // namespace hf
