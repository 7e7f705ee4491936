#include "hyperfano/witness.hpp"

#include "hyperfano/error.hpp"

#include <ostream>
#include <sstream>

namespace hf {

bool verify(const Coloring& host, const Witness& w)
{
    if (static_cast<int>(w.host_map.size()) != w.pattern.n_vertices) return false;
    VertexSet seen;
    for (Vertex v : w.host_map) {
        if (v < 0 || v >= host.n_vertices() || seen.contains(v)) return false;
        seen.insert(v);
    }
    for (const Triple& e : w.pattern.edges) {
        if (host.color_of(w.host_map[e.a], w.host_map[e.b], w.host_map[e.c]) != w.color) return false;
    }
    return true;
}

Witness tight_path_witness(const std::vector<Vertex>& seq)
{
    return Witness{tight_path(static_cast<int>(seq.size())), seq, Color::Red};
}

void write_witness(std::ostream& os, const Witness& w)
{
    os << "WITNESS " << to_string(w.color) << ' ' << w.pattern.name << '\n';
    for (std::size_t i = 0; i < w.host_map.size(); ++i) os << "map " << i << " -> " << w.host_map[i] << '\n';
}

std::string witness_to_string(const Witness& w)
{
    std::ostringstream os;
    write_witness(os, w);
    return os.str();
}

Witness read_witness(std::istream& is)
{
    std::string line;
    if (!std::getline(is, line)) throw ParseError("witness: empty input");
    std::istringstream head(line);
    std::string tag, color, name, extra;
    if (!(head >> tag >> color >> name) || tag != "WITNESS" || (head >> extra))
        throw ParseError("witness: expected 'WITNESS <color> <pattern>', got '" + line + "'");
    Witness w{pattern_by_name(name), {}, parse_color(color)};
    for (int i = 0; i < w.pattern.n_vertices; ++i) {
        if (!std::getline(is, line)) throw ParseError("witness: missing map line " + std::to_string(i));
        std::istringstream ls(line);
        std::string map_kw, arrow;
        long long idx = -1, v = -1;
        if (!(ls >> map_kw >> idx >> arrow >> v) || map_kw != "map" || arrow != "->" || idx != i || (ls >> extra))
            throw ParseError("witness: bad map line '" + line + "'");
        if (v < 0 || v >= kMaxVertices) throw ParseError("witness: vertex out of range in '" + line + "'");
        w.host_map.push_back(static_cast<Vertex>(v));
    }
    return w;
}

Witness witness_from_string(const std::string& text)
{
    std::istringstream is(text);
    return read_witness(is);
}

} // namespace hf
