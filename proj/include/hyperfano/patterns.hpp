#pragma once

#include "hyperfano/triple.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hf {

/// A labeled 3-uniform hypergraph on vertices 0..n-1 to be embedded in a host.
struct Pattern {
    std::string name; ///< e.g. "fano", "tightpath:7"
    int n_vertices = 0;
    std::vector<Triple> edges;

    bool operator==(const Pattern&) const = default;
};

/// Checks the Pattern invariants (distinct, in-range, 3-vertex edges); throws InvalidArgument.
void validate(const Pattern& p);

/// The seven lines {0,1,2},{0,3,4},{0,5,6},{1,3,5},{1,4,6},{2,3,6},{2,4,5}.
Pattern fano_lines();

/// True iff `edges` has 7 distinct triples over exactly 7 vertices covering every pair once.
/// Throws InvalidArgument when the edges do not span exactly 7 vertices.
bool is_fano(const std::vector<Triple>& edges);

/// v_0..v_{n-1} with edges {v_i, v_{i+1}, v_{i+2}}; n >= 3.
Pattern tight_path(int n);

/// Tight path closed with wrap-around indices. n >= 4: at n = 4 the edges are the
/// four 3-subsets of [4], at n = 3 all three wrap edges coincide.
Pattern tight_cycle(int n);

/// tight_path(n) plus {1,2,5}, {0,1,4}, {0,3,5}; n >= 6.
Pattern p_prime(int n);

/// Parses "fano", "tightpath:<n>", "tightcycle:<n>", "pprime:<n>".
Pattern pattern_by_name(const std::string& name);

/// (chi_H - 1)(v_G - 1) + sigma_H.
std::int64_t h_good_bound(std::int64_t v_g, std::int64_t chi_h, std::int64_t sigma_h);

struct TwoColoringScan {
    int bipartitions_checked = 0;
    int proper_found = 0;
};

/// Scans all 2^7 vertex bipartitions of fano_lines() for one without a monochromatic line.
TwoColoringScan scan_fano_two_colorings();

/// False: no bipartition of the Fano plane avoids a monochromatic line.
bool fano_two_colorable();

} // namespace hf
