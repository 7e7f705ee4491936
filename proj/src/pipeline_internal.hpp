#pragma once

#include "hyperfano/pipeline.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

namespace hf::detail {

std::string fmt(double x);
inline std::string fmt(const std::string& s) { return s; }
inline std::string fmt(const char* s) { return s; }
inline std::string fmt(bool b) { return b ? "true" : "false"; }
inline std::string fmt(VertexSet s) { return s.to_string(); }
template <class T>
    requires std::is_integral_v<T>
std::string fmt(T x)
{
    return std::to_string(x);
}
std::string fmt(const std::vector<Vertex>& v);

/// Appends one stage line to a report; chain calls to add key=value pairs.
class Rec {
public:
    Rec(PipelineReport& r, std::string stage) : r_(r), i_(r.trace.size()) { r.trace.push_back({std::move(stage), {}}); }

    template <class T>
    Rec& operator()(const std::string& key, const T& value)
    {
        r_.trace[i_].values.emplace_back(key, fmt(value));
        return *this;
    }

private:
    PipelineReport& r_;
    std::size_t i_;
};

/// Truncates `seq` to n vertices and records a verified red tight path.
/// Throws std::logic_error if the path does not verify.
void finish_red(PipelineReport& r, const Coloring& c, std::vector<Vertex> seq, int n, const std::string& stage);
/// Records a verified blue Fano. Throws std::logic_error if it does not verify.
void finish_blue(PipelineReport& r, const Coloring& c, const Witness& w, const std::string& stage);
void fail(PipelineReport& r, const std::string& stage, const std::string& inequality);

/// Fano witness whose lines are gadget_fano_7(x, s1, s2, t1, t2, t3, t4).
Witness gadget_witness(Vertex x, Vertex s1, Vertex s2, Vertex t1, Vertex t2, Vertex t3, Vertex t4);

bool is_red_tight(const Coloring& c, const std::vector<Vertex>& seq);

/// Lexicographically least K4 in g.
std::optional<std::array<Vertex, 4>> find_k4(const Graph& g);

/// Pairs {x, y} inside X with {v, x, y} of color col (v outside X).
std::int64_t link_edges(const Coloring& c, Vertex v, VertexSet X, Color col);

/// Blue triples inside X containing v.
std::int64_t blue_degree_inside(const Coloring& c, Vertex v, VertexSet X);

std::int64_t blue_triples_inside(const Coloring& c, VertexSet X);

/// Lexicographically least blue triple inside X.
std::optional<std::array<Vertex, 3>> least_blue_triple(const Coloring& c, VertexSet X);

/// Blue triple abc inside X: look for a K4 in the common blue link of a, b, c
/// in Y. Returns the Fano witness when found.
std::optional<Witness> blue_triple_gadget(const Coloring& c, const std::array<Vertex, 3>& abc, VertexSet Y,
                                          std::int64_t* common_edges = nullptr);

/// Purifies X to an entirely red set: each blue triple either yields a blue
/// Fano through a K4 in Y or costs the vertex with most blue triples inside X.
struct PurifyResult {
    VertexSet kept;
    std::vector<Vertex> removed;
    std::optional<Witness> fano;
    std::int64_t min_common_edges = -1; ///< smallest common blue link seen, -1 if none
};
PurifyResult purify(const Coloring& c, VertexSet X, VertexSet Y);

void one_path_impl(PipelineReport& r, const Coloring& c, const BlobDecomposition& d, const BlobPath& p,
                   const PipelineParams& params, const std::string& prefix);
void two_path_impl(PipelineReport& r, const Coloring& c, const BlobDecomposition& d, const BlobPath& pa,
                   const BlobPath& pb, const PipelineParams& params);
void three_path_impl(PipelineReport& r, const Coloring& c, const BlobDecomposition& d, const BlobPath& pa,
                     const BlobPath& pb, const BlobPath& pc, const PipelineParams& params, bool allow_halving);

VertexSet path_vertices(const BlobDecomposition& d, const BlobPath& p);

} // namespace hf::detail
