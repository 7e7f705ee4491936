#include "pipeline_internal.hpp"

#include "hyperfano/construct.hpp"
#include "hyperfano/detect.hpp"
#include "hyperfano/error.hpp"

#include <cmath>

namespace hf {

using namespace detail;

namespace {

bool all_red(const Coloring& c, VertexSet s)
{
    const std::vector<Vertex> v = s.to_vector();
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            for (std::size_t k = j + 1; k < v.size(); ++k)
                if (c.color_of(v[i], v[j], v[k]) != Color::Red) return false;
    return true;
}

} // namespace

PipelineReport run_pipeline(const Coloring& c, const PipelineParams& params)
{
    PipelineReport r;
    r.params = resolve_params(params, c.n_vertices());
    const PipelineParams& p = r.params;
    const int n = p.target_n;
    const double nn = n;

    Rec(r, "input")("N", c.n_vertices())("target_n", n)("red", c.red_count())("blue", c.blue_count())(
        "N_vs_2n_minus_1", c.n_vertices() - (2 * n - 1));
    {
        Rec rec(r, "constants");
        if (n >= 16) {
            const BlobSize bs = m_of_n(nn, p.eps);
            rec("m_nominal_raw", fmt(bs.raw))("m_inequality_holds", bs.inequality_holds);
        } else {
            rec("m_nominal_raw", "undefined_below_16");
        }
        rec("m_used", p.m)("butterfly_threshold_nominal", 1000)("butterfly_threshold_used", p.butterfly_threshold)(
            "junk_bound_nominal", fmt(std::pow(nn, std::pow(p.eps, 4))))("t_standin", fmt(p.t_const))(
            "c_prime_standin", fmt(p.c_prime));
    }

    // blue Fano pre-pass
    try {
        SearchOptions so;
        so.threads = p.threads;
        so.node_budget = p.prepass_node_budget;
        const auto w = find_mono(c, fano_lines(), Color::Blue, so);
        Rec(r, "prepass")("blue_fano", w ? "found" : "none");
        if (w) {
            finish_blue(r, c, *w, "prepass");
            return r;
        }
    } catch (const BudgetExceeded&) {
        Rec(r, "prepass")("blue_fano", "budget_exhausted");
    }

    const BlobDecomposition d = extract_blobs(c, p.m);
    for (VertexSet b : d.blobs)
        if (!all_red(c, b)) throw std::logic_error("run_pipeline: extracted blob is not entirely red");
    Rec(r, "extract_blobs")("m", p.m)("blobs", d.blobs.size())("junk", d.junk.size())(
        "junk_bound_nominal", fmt(std::pow(nn, std::pow(p.eps, 4))));
    if (d.blobs.empty()) {
        fail(r, "extract_blobs", "a red K_" + std::to_string(p.m) + " exists outside the junk: none among " +
                                     std::to_string(c.n_vertices()) + " vertices");
        return r;
    }

    const BlobGraph g = build_blob_graph(c, d, p.butterfly_threshold);
    Rec(r, "blob_graph")("edges", g.edge_count())("threshold", p.butterfly_threshold)("threshold_nominal", 1000);

    if (auto k4 = check_complement_k4(g)) {
        const auto& q = *k4;
        Rec(r, "complement_k4")("found", true)("blobs", std::to_string(q[0]) + "," + std::to_string(q[1]) + "," +
                                                            std::to_string(q[2]) + "," + std::to_string(q[3]));
        fail(r, "complement_k4",
             "complement of the blob graph is K4-free: blobs " + std::to_string(q[0]) + "," + std::to_string(q[1]) +
                 "," + std::to_string(q[2]) + "," + std::to_string(q[3]) + " pairwise share fewer than " +
                 std::to_string(p.butterfly_threshold) + " disjoint red butterflies");
        return r;
    }
    Rec(r, "complement_k4")("found", false);

    std::vector<BlobPath> paths;
    try {
        paths = decompose_paths(g, p.exact_path_max_blobs);
    } catch (const NotFound& e) {
        fail(r, "paths", std::string("blob graph is covered by at most three longest paths: ") + e.what());
        return r;
    }
    {
        Rec rec(r, "paths");
        rec("count", paths.size());
        for (std::size_t i = 0; i < paths.size(); ++i) rec("path" + std::to_string(i + 1), paths[i].size());
    }

    if (paths.size() == 1) one_path_impl(r, c, d, paths[0], p, "one_path");
    else if (paths.size() == 2) two_path_impl(r, c, d, paths[0], paths[1], p);
    else three_path_impl(r, c, d, paths[0], paths[1], paths[2], p, true);
    return r;
}

} // namespace hf
