#include "hyperfano/patterns.hpp"

#include "hyperfano/error.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace hf {

void validate(const Pattern& p)
{
    if (p.n_vertices < 1 || p.n_vertices > kMaxVertices) throw InvalidArgument("pattern size out of range");
    std::set<std::uint64_t> seen;
    for (const Triple& e : p.edges) {
        if (!(0 <= e.a && e.a < e.b && e.b < e.c && e.c < p.n_vertices))
            throw InvalidArgument("pattern edge " + e.to_string() + " is not a sorted in-range 3-set");
        if (!seen.insert(colex_rank_unchecked(e.a, e.b, e.c)).second)
            throw InvalidArgument("pattern edge " + e.to_string() + " repeated");
    }
}

Pattern fano_lines()
{
    return Pattern{"fano", 7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}}};
}

bool is_fano(const std::vector<Triple>& edges)
{
    std::set<Vertex> support;
    for (const Triple& e : edges) {
        const Triple t = Triple::of(e.a, e.b, e.c);
        support.insert({t.a, t.b, t.c});
    }
    if (support.size() != 7) throw InvalidArgument("is_fano: edges span " + std::to_string(support.size()) + " vertices, need 7");

    std::set<std::uint64_t> distinct;
    for (const Triple& e : edges) {
        const Triple t = Triple::of(e.a, e.b, e.c);
        distinct.insert(colex_rank_unchecked(t.a, t.b, t.c));
    }
    if (distinct.size() != 7 || edges.size() != 7) return false;

    // relabel the support to 0..6 and count pair coverage
    const std::vector<Vertex> label(support.begin(), support.end());
    auto idx = [&](Vertex v) { return static_cast<int>(std::lower_bound(label.begin(), label.end(), v) - label.begin()); };
    int cover[7][7] = {};
    for (const Triple& e : edges) {
        const int x = idx(e.a), y = idx(e.b), z = idx(e.c);
        ++cover[x][y], ++cover[y][x];
        ++cover[x][z], ++cover[z][x];
        ++cover[y][z], ++cover[z][y];
    }
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j)
            if (cover[i][j] != 1) return false;
    return true;
}

Pattern tight_path(int n)
{
    if (n < 3) throw InvalidArgument("tight_path needs n >= 3, got " + std::to_string(n));
    if (n > kMaxVertices) throw InvalidArgument("tight_path: n too large");
    Pattern p{"tightpath:" + std::to_string(n), n, {}};
    for (int i = 0; i + 2 < n; ++i) p.edges.push_back(Triple{i, i + 1, i + 2});
    return p;
}

Pattern tight_cycle(int n)
{
    if (n < 4) throw InvalidArgument("tight_cycle needs n >= 4, got " + std::to_string(n));
    if (n > kMaxVertices) throw InvalidArgument("tight_cycle: n too large");
    Pattern p{"tightcycle:" + std::to_string(n), n, {}};
    for (int i = 0; i < n; ++i) p.edges.push_back(Triple::of(i, (i + 1) % n, (i + 2) % n));
    return p;
}

Pattern p_prime(int n)
{
    if (n < 6) throw InvalidArgument("p_prime needs n >= 6, got " + std::to_string(n));
    Pattern p = tight_path(n);
    p.name = "pprime:" + std::to_string(n);
    p.edges.push_back(Triple{1, 2, 5});
    p.edges.push_back(Triple{0, 1, 4});
    p.edges.push_back(Triple{0, 3, 5});
    return p;
}

Pattern pattern_by_name(const std::string& name)
{
    if (name == "fano") return fano_lines();
    const auto colon = name.find(':');
    if (colon == std::string::npos) throw ParseError("unknown pattern '" + name + "'");
    const std::string kind = name.substr(0, colon);
    const std::string arg = name.substr(colon + 1);
    int n = 0;
    auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), n);
    if (ec != std::errc{} || ptr != arg.data() + arg.size()) throw ParseError("bad pattern size in '" + name + "'");
    if (kind == "tightpath") return tight_path(n);
    if (kind == "tightcycle") return tight_cycle(n);
    if (kind == "pprime") return p_prime(n);
    throw ParseError("unknown pattern '" + name + "'");
}

std::int64_t h_good_bound(std::int64_t v_g, std::int64_t chi_h, std::int64_t sigma_h)
{
    if (v_g < 1 || chi_h < 2 || sigma_h < 1)
        throw InvalidArgument("h_good_bound needs v_G >= 1, chi_H >= 2, sigma_H >= 1");
    return (chi_h - 1) * (v_g - 1) + sigma_h;
}

TwoColoringScan scan_fano_two_colorings()
{
    const Pattern f = fano_lines();
    TwoColoringScan scan;
    for (unsigned side = 0; side < (1U << 7); ++side) {
        ++scan.bipartitions_checked;
        const bool proper = std::none_of(f.edges.begin(), f.edges.end(), [side](const Triple& e) {
            const unsigned x = (side >> e.a) & 1U, y = (side >> e.b) & 1U, z = (side >> e.c) & 1U;
            return x == y && y == z;
        });
        if (proper) ++scan.proper_found;
    }
    return scan;
}

bool fano_two_colorable()
{
    return scan_fano_two_colorings().proper_found > 0;
}

} // namespace hf
