#include "hyperfano/hg3c.hpp"

#include "hyperfano/error.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace hf {

namespace {

/// Plain decimal, no sign, no leading zeros (except "0").
std::uint64_t parse_decimal(std::string_view s, const std::string& ctx)
{
    if (s.empty() || (s.size() > 1 && s[0] == '0')) throw ParseError(ctx + ": bad number '" + std::string(s) + "'");
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError(ctx + ": bad number '" + std::string(s) + "'");
    return v;
}

std::uint64_t parse_keyed(const std::string& line, std::string_view key, int lineno)
{
    const std::string ctx = "line " + std::to_string(lineno);
    if (line.size() <= key.size() + 1 || line.compare(0, key.size(), key) != 0 || line[key.size()] != '=')
        throw ParseError(ctx + ": expected '" + std::string(key) + "=<decimal>'");
    return parse_decimal(std::string_view(line).substr(key.size() + 1), ctx);
}

} // namespace

void write_hg3c(std::ostream& os, const TripleList& list)
{
    os << "HG3C 1\n" << "n=" << list.n_vertices << "\n" << "red=" << list.triples.size() << "\n";
    for (const Triple& t : list.triples) os << t.a << ' ' << t.b << ' ' << t.c << '\n';
}

TripleList read_hg3c(std::istream& is)
{
    std::string line;
    int lineno = 0;
    auto next = [&](const char* what) {
        ++lineno;
        if (!std::getline(is, line)) throw ParseError("unexpected end of stream, expected " + std::string(what));
    };

    next("header");
    if (line != "HG3C 1") throw ParseError("magic mismatch: expected 'HG3C 1'");
    next("n=");
    const std::uint64_t n = parse_keyed(line, "n", lineno);
    if (n > static_cast<std::uint64_t>(kMaxVertices))
        throw ParseError("n=" + std::to_string(n) + " exceeds the supported maximum " + std::to_string(kMaxVertices));
    next("red=");
    const std::uint64_t r = parse_keyed(line, "red", lineno);
    if (r > binomial(static_cast<std::int64_t>(n), 3)) throw ParseError("red count exceeds C(n,3)");

    TripleList out;
    out.n_vertices = static_cast<int>(n);
    out.triples.reserve(r);
    std::uint64_t prev_rank = 0;
    for (std::uint64_t i = 0; i < r; ++i) {
        next("triple");
        const std::string ctx = "line " + std::to_string(lineno);
        std::array<std::uint64_t, 3> v{};
        std::string_view rest(line);
        for (int k = 0; k < 3; ++k) {
            const auto sp = rest.find(' ');
            const std::string_view tok = (k < 2) ? rest.substr(0, sp) : rest;
            if (k < 2 && sp == std::string_view::npos) throw ParseError(ctx + ": expected 'a b c'");
            v[k] = parse_decimal(tok, ctx);
            if (k < 2) rest = rest.substr(sp + 1);
        }
        if (v[0] == v[1] || v[1] == v[2] || v[0] == v[2]) throw ParseError(ctx + ": duplicate vertex in triple");
        if (v[2] >= n || v[1] >= n || v[0] >= n) throw ParseError(ctx + ": vertex out of range");
        if (!(v[0] < v[1] && v[1] < v[2])) throw ParseError(ctx + ": triple not sorted a<b<c");
        const Triple t{static_cast<Vertex>(v[0]), static_cast<Vertex>(v[1]), static_cast<Vertex>(v[2])};
        const std::uint64_t rank = colex_rank_unchecked(t.a, t.b, t.c);
        if (i > 0 && rank <= prev_rank) throw ParseError(ctx + ": triples not in strictly increasing colex order");
        prev_rank = rank;
        out.triples.push_back(t);
    }
    // only end-of-stream may follow
    if (is.peek() != std::char_traits<char>::eof()) throw ParseError("trailing content after " + std::to_string(r) + " triples");
    return out;
}

void write_coloring(std::ostream& os, const Coloring& c)
{
    TripleList list;
    list.n_vertices = c.n_vertices();
    for (TripleId id : c.red_triples()) list.triples.push_back(triple_unrank(id, c.n_vertices()));
    write_hg3c(os, list);
}

Coloring read_coloring(std::istream& is)
{
    const TripleList list = read_hg3c(is);
    std::vector<TripleId> red;
    red.reserve(list.triples.size());
    for (const Triple& t : list.triples) red.push_back(TripleId{colex_rank_unchecked(t.a, t.b, t.c)});
    return Coloring(list.n_vertices, red);
}

std::string coloring_to_string(const Coloring& c)
{
    std::ostringstream os;
    write_coloring(os, c);
    return os.str();
}

Coloring coloring_from_string(const std::string& text)
{
    std::istringstream is(text);
    return read_coloring(is);
}

Coloring load_coloring(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return read_coloring(in);
}

void save_coloring(const std::string& path, const Coloring& c)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidArgument("cannot write '" + path + "'");
    write_coloring(out, c);
}

} // namespace hf
