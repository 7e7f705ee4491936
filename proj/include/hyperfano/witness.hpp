#pragma once

#include "hyperfano/coloring.hpp"
#include "hyperfano/patterns.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace hf {

/// Certificate that `pattern` embeds monochromatically: pattern vertex i goes to host_map[i].
struct Witness {
    Pattern pattern;
    std::vector<Vertex> host_map;
    Color color = Color::Red;

    bool operator==(const Witness&) const = default;
};

/// Injective, in range, and every mapped edge has the witness color.
bool verify(const Coloring& host, const Witness& w);

/// Red tight path witness from a vertex sequence.
Witness tight_path_witness(const std::vector<Vertex>& seq);

/// WITNESS <color> <pattern-name>
/// map i -> v
void write_witness(std::ostream& os, const Witness& w);
std::string witness_to_string(const Witness& w);

/// Inverse of write_witness; stops after the last map line. Throws ParseError.
Witness read_witness(std::istream& is);
Witness witness_from_string(const std::string& text);

} // namespace hf
