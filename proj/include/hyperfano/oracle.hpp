#pragma once

// Brute-force reference implementations. Deliberately naive: triples are read
// through Coloring::color_of one at a time, maps are enumerated in plain
// lexicographic order, and nothing is cached, so each routine can be audited
// by reading it.

#include "hyperfano/coloring.hpp"
#include "hyperfano/patterns.hpp"
#include "hyperfano/witness.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace hf {

struct OracleBudget {
    std::uint64_t max_subsets = 200'000'000; ///< enumeration nodes before giving up
    double timeout_seconds = 600.0;
};

/// Least injective map in lexicographic order whose edges all have color `col`.
/// A partial map is abandoned as soon as one of its fully mapped edges has the wrong color.
/// Throws BudgetExceeded.
std::optional<Witness> exhaustive_embed(const Coloring& c, const Pattern& p, Color col, const OracleBudget& budget = {});

/// The 30 distinct Fano line sets on the labels 0..6 (5040 labelings / 168 automorphisms).
const std::vector<std::array<Triple, 7>>& fano_line_sets_on_7();

/// Distinct monochromatic Fano planes (as edge sets) in color `col`.
std::uint64_t count_fano_copies(const Coloring& c, Color col, const OracleBudget& budget = {}, int threads = 1);

/// Is there a red tight path on n vertices? DFS over ordered vertex sequences.
bool exhaustive_tight_path(const Coloring& c, int n, const OracleBudget& budget = {});

enum class RamseyVerdict { Unavoidable, Avoidable, BudgetExceeded };
const char* to_string(RamseyVerdict v);

struct RamseyResult {
    RamseyVerdict verdict = RamseyVerdict::BudgetExceeded;
    std::optional<Coloring> certificate; ///< set when Avoidable
    std::uint64_t nodes = 0;
};

/// Does every coloring of K_N^(3) contain a red `red_pattern` or a blue
/// `blue_pattern`? DFS over triple colors in colex order (red first), checking
/// both patterns on [k+1] each time the triples of vertex k are complete.
RamseyResult ramsey_verify_tiny(const Pattern& red_pattern, const Pattern& blue_pattern, int N,
                                const OracleBudget& budget = {});

/// All C(|A|,t) * C(|B|,t) part pairs in lexicographic order.
std::optional<std::pair<VertexSet, VertexSet>> exhaustive_directed_ktt(const Digraph& d, VertexSet A, VertexSet B, int t);

} // namespace hf
