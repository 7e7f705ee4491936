#pragma once

#include "hyperfano/coloring.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace hf {

// HG3C 1 text format:
//   HG3C 1
//   n=<N>
//   red=<R>
//   a b c        (R lines, a<b<c, strictly increasing colex order)
// Every listed triple is red, all others blue. Any deviation is a ParseError.

struct TripleList {
    int n_vertices = 0;
    std::vector<Triple> triples; ///< sorted ascending in colex order
};

void write_hg3c(std::ostream& os, const TripleList& list);
TripleList read_hg3c(std::istream& is);

void write_coloring(std::ostream& os, const Coloring& c);
Coloring read_coloring(std::istream& is);

std::string coloring_to_string(const Coloring& c);
Coloring coloring_from_string(const std::string& text);

Coloring load_coloring(const std::string& path);
void save_coloring(const std::string& path, const Coloring& c);

} // namespace hf
