#include "pipeline_internal.hpp"

#include "hyperfano/detect.hpp"
#include "hyperfano/error.hpp"

#include <algorithm>
#include <cmath>

namespace hf {

using namespace detail;

namespace {

/// v1,w1 in X, v2,w2,x2 in Y, v3 in Z with v1w1v2, v1v2v3, v2v3w2, v3w2x2 red;
/// returns X-rest w1 v1 v2 v3 w2 x2 Y-rest, valid when X and Y are entirely red.
std::optional<std::vector<Vertex>> structure_path(const Coloring& c, VertexSet X, VertexSet Y, VertexSet Z)
{
    const VertexMask y = Y.mask(), z = Z.mask();
    for (Vertex v1 : X)
        for (Vertex w1 : X) {
            if (w1 == v1) continue;
            for (Vertex v2 : VertexSet(c.pair_mask(v1, w1, Color::Red) & y))
                for (Vertex v3 : VertexSet(c.pair_mask(v1, v2, Color::Red) & z))
                    for (Vertex w2 : VertexSet(c.pair_mask(v2, v3, Color::Red) & y)) {
                        const VertexMask x2s = c.pair_mask(v3, w2, Color::Red) & y & ~bit(v2);
                        if (!x2s) continue;
                        const Vertex x2 = std::countr_zero(x2s);
                        std::vector<Vertex> seq;
                        for (Vertex a : X)
                            if (a != v1 && a != w1) seq.push_back(a);
                        seq.insert(seq.end(), {w1, v1, v2, v3, w2, x2});
                        for (Vertex b : Y)
                            if (b != v2 && b != w2 && b != x2) seq.push_back(b);
                        return seq;
                    }
        }
    return std::nullopt;
}

/// Follows `ham` two vertices at a time, inserting after every second vertex
/// the least unused b in Y that keeps all three new triples red. When no b
/// fits the next path vertex is appended directly if that stays red.
std::vector<Vertex> interleave(const Coloring& c, const std::vector<Vertex>& ham, VertexSet Y)
{
    auto red = [&](Vertex a, Vertex b, Vertex x) { return c.color_of(a, b, x) == Color::Red; };
    std::vector<Vertex> seq;
    if (ham.size() < 2) return ham;
    seq = {ham[0], ham[1]};
    VertexSet free = Y;
    std::size_t k = 2;
    auto pick = [&](std::optional<Vertex> next, std::optional<Vertex> after) -> std::optional<Vertex> {
        const Vertex p = seq[seq.size() - 2], q = seq.back();
        for (Vertex b : VertexSet(c.pair_mask(p, q, Color::Red) & free.mask())) {
            if (next && !red(q, b, *next)) continue;
            if (next && after && !red(b, *next, *after)) continue;
            return b;
        }
        return std::nullopt;
    };
    while (k < ham.size()) {
        const std::optional<Vertex> after = k + 1 < ham.size() ? std::optional<Vertex>(ham[k + 1]) : std::nullopt;
        if (auto b = pick(ham[k], after)) {
            seq.push_back(*b);
            free.erase(*b);
            seq.push_back(ham[k]);
            if (after) seq.push_back(*after);
            k += 2;
            continue;
        }
        if (!red(seq[seq.size() - 2], seq.back(), ham[k])) break;
        seq.push_back(ham[k]);
        ++k;
    }
    if (k >= ham.size())
        if (auto b = pick(std::nullopt, std::nullopt)) seq.push_back(*b);
    return seq;
}

int min_degree_or_zero(const Graph& g) { return g.vertices.empty() ? 0 : g.min_degree(); }

} // namespace

namespace detail {

void three_path_impl(PipelineReport& r, const Coloring& c, const BlobDecomposition& d, const BlobPath& pa,
                     const BlobPath& pb, const BlobPath& pc, const PipelineParams& params, bool allow_halving)
{
    const int n = params.target_n;
    const double nn = n;
    const double slack = params.c_prime * nn * std::pow(params.m, -1.0 / params.t_const);
    const std::array<const BlobPath*, 3> paths{&pa, &pb, &pc};

    // blob edges between different paths
    int cross_edges = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            for (int x : *paths[i])
                for (int y : *paths[j])
                    if (static_cast<int>(max_disjoint_butterflies(c, d.blobs[x], d.blobs[y]).size()) >=
                        params.butterfly_threshold)
                        ++cross_edges;
    const int half = params.m / 2;
    const bool halve = cross_edges > 0 && allow_halving && half >= 3;
    Rec(r, "three_path.cross_edges")("edges", cross_edges)("halving", halve)("half_size", half);
    if (halve) {
        BlobDecomposition h;
        h.junk = d.junk;
        for (VertexSet blob : d.blobs) {
            const std::vector<Vertex> vs = blob.to_vector();
            h.blobs.push_back(VertexSet::from_vector({vs.begin(), vs.begin() + half}));
            h.blobs.push_back(VertexSet::from_vector({vs.begin() + half, vs.begin() + 2 * half}));
            for (std::size_t i = 2 * half; i < vs.size(); ++i) h.junk.insert(vs[i]);
        }
        const int threshold = std::max(1, params.butterfly_threshold / 10);
        const BlobGraph g = build_blob_graph(c, h, threshold);
        Rec(r, "three_path.halving")("blobs", h.blobs.size())("threshold_used", threshold)("threshold_nominal", 100)(
            "edges", g.edge_count());
        std::vector<BlobPath> ps;
        try {
            ps = decompose_paths(g, params.exact_path_max_blobs);
        } catch (const NotFound& e) {
            return fail(r, "three_path.halving", std::string("halved blob graph splits into at most three paths: ") + e.what());
        }
        Rec(r, "three_path.halving_paths")("paths", ps.size());
        if (ps.size() == 1) return one_path_impl(r, c, h, ps[0], params, "three_path.halving");
        if (ps.size() == 2) return two_path_impl(r, c, h, ps[0], ps[1], params);
        return three_path_impl(r, c, h, ps[0], ps[1], ps[2], params, false);
    }

    // walk each path
    std::array<VertexSet, 3> P;
    for (int i = 0; i < 3; ++i) {
        P[i] = path_vertices(d, *paths[i]);
        const BlobWalk w = walk_blob_path(c, d, *paths[i]);
        Rec(r, "three_path.walk")("path", i + 1)("size", P[i].size())("walk", w.seq.size());
        if (static_cast<int>(w.seq.size()) >= n) return finish_red(r, c, w.seq, n, "three_path.walk");
    }
    {
        Rec rec(r, "three_path.equal_size");
        rec("lower_nominal", fmt(2 * nn / 3 - slack))("upper_nominal", fmt(2 * nn / 3 + slack));
        for (int i = 0; i < 3; ++i) {
            const bool in_range = P[i].size() >= 2 * nn / 3 - slack && P[i].size() <= 2 * nn / 3 + slack;
            rec("P" + std::to_string(i + 1), P[i].size())("P" + std::to_string(i + 1) + "_in_range", in_range);
        }
    }

    // orient the blocks so that red directed counts along the cycle are small
    const std::int64_t fwd = directed_count(c, P[0], P[1], Color::Red) + directed_count(c, P[1], P[2], Color::Red) +
                             directed_count(c, P[2], P[0], Color::Red);
    const std::int64_t bwd = directed_count(c, P[0], P[2], Color::Red) + directed_count(c, P[2], P[1], Color::Red) +
                             directed_count(c, P[1], P[0], Color::Red);
    if (bwd < fwd) std::swap(P[1], P[2]);
    Rec(r, "three_path.orientation")("red_directed_forward", fwd)("red_directed_backward", bwd)(
        "order", bwd < fwd ? "1,3,2" : "1,2,3");

    // drop vertices whose blue link into the next block is thin, then purify
    std::array<VertexSet, 3> X;
    int thin = 0;
    for (int i = 0; i < 3; ++i) {
        const VertexSet next = P[(i + 1) % 3];
        const double need = params.density_cutoffs[2] * next.size() * (next.size() - 1) / 2.0;
        for (Vertex v : P[i]) {
            if (static_cast<double>(link_edges(c, v, next, Color::Blue)) >= need - 1e-9) X[i].insert(v);
            else ++thin;
        }
    }
    std::int64_t min_common = -1;
    int removed = 0;
    for (int i = 0; i < 3; ++i) {
        const PurifyResult pr = purify(c, X[i], X[(i + 1) % 3]);
        if (pr.fano) {
            Rec(r, "three_path.entirely_red")("block", i + 1)("removed", pr.removed.size());
            return finish_blue(r, c, *pr.fano, "three_path.entirely_red");
        }
        X[i] = pr.kept;
        removed += static_cast<int>(pr.removed.size());
        if (pr.min_common_edges >= 0 && (min_common < 0 || pr.min_common_edges < min_common))
            min_common = pr.min_common_edges;
    }
    // equal sizes are measured only; truncating to the smallest block here
    // throws away whole blocks that the degree filter below cannot win back
    const int common = std::min({X[0].size(), X[1].size(), X[2].size()});
    Rec(r, "three_path.entirely_red")("thin_link_removed", thin)("blue_triple_removed", removed)(
        "min_common_blue_link", min_common)("common_link_nominal_fraction", fmt(params.density_cutoffs[3]))(
        "equal_size", common)("junk_nominal", fmt(slack));

    // rainbow red structure: X-rest w1 v1 v2 v3 w2 x2 Y-rest
    const std::int64_t rainbow = (X[0].empty() || X[1].empty() || X[2].empty())
                                     ? 0
                                     : cross_count(c, X[0], X[1], X[2], Color::Red);
    int structure_len = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            const int k = 3 - i - j;
            if (auto seq = structure_path(c, X[i], X[j], X[k])) {
                if (!is_red_tight(c, *seq)) throw std::logic_error("three_path: structure path does not verify");
                structure_len = std::max(structure_len, static_cast<int>(seq->size()));
                if (static_cast<int>(seq->size()) >= n) {
                    Rec(r, "three_path.structure")("rainbow_red", rainbow)(
                        "rainbow_bound_nominal", fmt(7 * std::pow(nn, 3 - 1 / params.t_const)))("length", seq->size());
                    return finish_red(r, c, *seq, n, "three_path.structure");
                }
            }
        }
    Rec(r, "three_path.structure")("rainbow_red", rainbow)(
        "rainbow_bound_nominal", fmt(7 * std::pow(nn, 3 - 1 / params.t_const)))("best_length", structure_len);

    // degree filter, then hand every other vertex to the first block that takes it
    const double floor_deg = params.degree_floor * nn;
    std::array<VertexSet, 3> S;
    for (int i = 0; i < 3; ++i) {
        const Graph g = density_graph(c, X[i], X[(i + 1) % 3], params.density_cutoffs[0]);
        for (Vertex v : X[i])
            if (g.degree(v) >= floor_deg - 1e-9) S[i].insert(v);
    }
    std::array<VertexSet, 3> D = S;
    int reassigned = 0, left_over = 0;
    for (Vertex v : c.all_vertices() - S[0] - S[1] - S[2]) {
        bool placed = false;
        for (int i = 0; i < 3 && !placed; ++i) {
            if (S[(i + 1) % 3].empty()) continue; // density against nothing holds vacuously
            VertexSet with = S[i];
            with.insert(v);
            const Graph g = density_graph(c, with, S[(i + 1) % 3], params.density_cutoffs[1]);
            if (g.degree(v) >= floor_deg - 1e-9) {
                D[i].insert(v);
                placed = true;
            }
        }
        if (placed) ++reassigned;
        else ++left_over;
    }
    {
        Rec rec(r, "three_path.structure2");
        rec("degree_floor", fmt(floor_deg))("reassigned", reassigned)("unplaced", left_over);
        for (int i = 0; i < 3; ++i) {
            const Graph g = density_graph(c, D[i], D[(i + 1) % 3], params.density_cutoffs[1]);
            rec("P" + std::to_string(i + 1) + "_dagger", D[i].size())(
                "min_degree_" + std::to_string(i + 1), min_degree_or_zero(g));
        }
    }

    // interleaving walk, largest block first
    std::vector<std::pair<int, int>> order;
    std::array<int, 3> by_size{0, 1, 2};
    std::stable_sort(by_size.begin(), by_size.end(), [&](int a, int b) { return D[a].size() > D[b].size(); });
    for (int i : by_size) order.emplace_back(i, (i + 1) % 3);
    for (int i : by_size) order.emplace_back(i, (i + 2) % 3);
    int best = 0;
    int ham_failures = 0;
    for (const auto& [i, j] : order) {
        if (D[i].size() < 2 || D[j].empty()) continue;
        const Graph g = density_graph(c, D[i], D[j], params.density_cutoffs[1]);
        std::vector<Vertex> ham;
        try {
            ham = hamiltonian_path_dense(g);
        } catch (const NotFound&) {
            ++ham_failures;
            continue;
        }
        const std::vector<Vertex> seq = interleave(c, ham, D[j]);
        if (!is_red_tight(c, seq)) throw std::logic_error("three_path: interleaved walk does not verify");
        best = std::max(best, static_cast<int>(seq.size()));
        if (static_cast<int>(seq.size()) >= n) {
            Rec(r, "three_path.structure3")("blocks", std::to_string(i + 1) + "," + std::to_string(j + 1))(
                "hamiltonian", ham.size())("length", seq.size());
            return finish_red(r, c, seq, n, "three_path.structure3");
        }
    }
    Rec(r, "three_path.structure3")("best_length", best)("hamiltonian_failures", ham_failures)("n", n);
    fail(r, "three_path.structure3",
         "interleaved walk reaches n: best length " + std::to_string(best) + " < n=" + std::to_string(n));
}

void one_path_impl(PipelineReport& r, const Coloring& c, const BlobDecomposition& d, const BlobPath& p,
                   const PipelineParams& params, const std::string& prefix)
{
    const int n = params.target_n;
    const BlobWalk w = walk_blob_path(c, d, p);
    Rec(r, prefix + ".walk")("blobs", p.size())("walked_blobs", w.last - w.first + 1)("length", w.seq.size())("n", n);
    if (static_cast<int>(w.seq.size()) >= n) return finish_red(r, c, w.seq, n, prefix + ".walk");
    fail(r, prefix + ".walk",
         "walk along a single blob path reaches n: length " + std::to_string(w.seq.size()) + " < n=" +
             std::to_string(n));
}

} // namespace detail

PipelineReport three_path_branch(const Coloring& c, const BlobDecomposition& d, const BlobPath& path_a,
                                 const BlobPath& path_b, const BlobPath& path_c, const PipelineParams& params)
{
    PipelineReport r;
    r.params = resolve_params(params, c.n_vertices());
    three_path_impl(r, c, d, path_a, path_b, path_c, r.params, true);
    return r;
}

} // namespace hf
