#include "support.hpp"

#include "hyperfano/construct.hpp"
#include "hyperfano/detect.hpp"
#include "hyperfano/pipeline.hpp"

#include <doctest.h>

using namespace hf;
using hf::test::Rng;

namespace {

BlobGraph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges)
{
    BlobGraph g;
    g.n_blobs = n;
    g.adj.assign(n, std::vector<bool>(n, false));
    g.disjoint_butterflies.assign(n, std::vector<int>(n, 0));
    for (auto [i, j] : edges) {
        g.adj[i][j] = g.adj[j][i] = true;
        g.disjoint_butterflies[i][j] = g.disjoint_butterflies[j][i] = 1;
    }
    return g;
}

void add_clique(std::vector<std::pair<int, int>>& e, int lo, int hi)
{
    for (int i = lo; i < hi; ++i)
        for (int j = i + 1; j < hi; ++j) e.emplace_back(i, j);
}

bool is_path_in(const BlobGraph& g, const BlobPath& p)
{
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (!g.has_edge(p[i], p[i + 1])) return false;
    return true;
}

/// Red iff all three lie in one block, or two in block i and one in block i+1.
Coloring cyclic_blocks(int k)
{
    return Coloring::from_predicate(3 * k, [k](Vertex a, Vertex b, Vertex c) {
        int cnt[3] = {};
        ++cnt[a / k], ++cnt[b / k], ++cnt[c / k];
        for (int i = 0; i < 3; ++i)
            if (cnt[i] == 3 || (cnt[i] == 2 && cnt[(i + 1) % 3] == 1)) return true;
        return false;
    });
}

void check_sound(const Coloring& c, const PipelineReport& r)
{
    switch (r.outcome) {
    case PipelineOutcome::RedPath:
        REQUIRE(r.witness);
        CHECK(r.witness->color == Color::Red);
        CHECK(r.witness->pattern.n_vertices == r.params.target_n);
        CHECK(test::naive_check(c, r.witness->pattern, r.witness->host_map, Color::Red));
        break;
    case PipelineOutcome::BlueFano:
        REQUIRE(r.witness);
        CHECK(test::naive_check(c, fano_lines(), r.witness->host_map, Color::Blue));
        break;
    case PipelineOutcome::Failure:
        REQUIRE(r.failure);
        CHECK_FALSE(r.failure->stage.empty());
        CHECK_FALSE(r.failure->inequality.empty());
        break;
    }
}

bool trace_has_stage(const PipelineReport& r, const std::string& prefix)
{
    for (const StageRecord& s : r.trace)
        if (s.stage.rfind(prefix, 0) == 0) return true;
    return false;
}

} // namespace

TEST_CASE("resolve params")
{
    const PipelineParams p = resolve_params({}, 41);
    CHECK(p.target_n == 21);
    CHECK(p.m == 3);
    CHECK(p.butterfly_threshold == 1);
    CHECK(p.matching_cap >= 2);
}

TEST_CASE("extract blobs")
{
    const BlobDecomposition red = extract_blobs(Coloring::all(9, Color::Red), 3);
    CHECK(red.blobs.size() == 3);
    CHECK(red.junk.empty());
    const BlobDecomposition blue = extract_blobs(Coloring::all(9, Color::Blue), 3);
    CHECK(blue.blobs.empty());
    CHECK(blue.junk.size() == 9);

    // |A| = 6 holds two 3-blobs, |B| = 5 one plus two junk vertices
    const BlockColoring ex = extended_lower_bound(6);
    const BlobDecomposition d = extract_blobs(ex.coloring, 3);
    int in_a = 0, in_b = 0;
    for (VertexSet b : d.blobs) {
        CHECK(b.size() == 3);
        if ((b - ex.blocks.blocks[0]).empty()) ++in_a;
        if ((b - ex.blocks.blocks[1]).empty()) ++in_b;
    }
    CHECK(in_a == 2);
    CHECK(in_b == 1);
    CHECK(d.junk.size() == 2);
}

TEST_CASE("extracted blobs are red and disjoint")
{
    Rng rng(51);
    for (int round = 0; round < 40; ++round) {
        const int n = rng.range(6, 20);
        const Coloring c = test::random_coloring(rng, n, 0.5 + 0.5 * rng.unit());
        const int m = rng.range(3, 5);
        const BlobDecomposition d = extract_blobs(c, m);
        VertexSet seen = d.junk;
        for (VertexSet b : d.blobs) {
            CHECK(b.size() == m);
            CHECK_FALSE(seen.intersects(b));
            seen |= b;
            for (const Triple& t : test::colex_triples(n))
                if (b.contains(t.a) && b.contains(t.b) && b.contains(t.c)) CHECK(c.color_of(t) == Color::Red);
        }
        CHECK(seen == c.all_vertices());
        // no red m-clique survives in the junk
        CHECK_FALSE(find_red_clique(c, m, d.junk));
    }
}

TEST_CASE("blob graph")
{
    const Coloring red = Coloring::all(12, Color::Red);
    const BlobDecomposition d = extract_blobs(red, 3);
    const BlobGraph g = build_blob_graph(red, d, 1);
    CHECK(g.edge_count() == 6);
    CHECK(build_blob_graph(red, d, 2).edge_count() == 0); // at most one disjoint butterfly between 3-blobs

    const Coloring lb = lower_bound_coloring(7).coloring;
    const BlobDecomposition dl = extract_blobs(lb, 3);
    const BlobGraph gl = build_blob_graph(lb, dl, 1);
    for (int i = 0; i < gl.n_blobs; ++i)
        for (int j = 0; j < gl.n_blobs; ++j) {
            const bool same_block = (dl.blobs[i].front() < 6) == (dl.blobs[j].front() < 6);
            if (i != j && !same_block) CHECK_FALSE(gl.has_edge(i, j));
        }
}

TEST_CASE("complement K4")
{
    std::vector<std::pair<int, int>> all;
    add_clique(all, 0, 5);
    CHECK_FALSE(check_complement_k4(graph_from_edges(5, all)));
    const auto k4 = check_complement_k4(graph_from_edges(4, {}));
    REQUIRE(k4);
    CHECK(*k4 == std::array<int, 4>{0, 1, 2, 3});
    std::vector<std::pair<int, int>> two;
    add_clique(two, 0, 4);
    add_clique(two, 4, 9);
    CHECK_FALSE(check_complement_k4(graph_from_edges(9, two)));
}

TEST_CASE("path decomposition")
{
    const BlobGraph path = graph_from_edges(5, {{0, 3}, {3, 1}, {1, 4}, {4, 2}});
    const auto p1 = decompose_paths(path);
    REQUIRE(p1.size() == 1);
    CHECK(p1[0].size() == 5);
    CHECK(is_path_in(path, p1[0]));

    for (int parts : {2, 3}) {
        std::vector<std::pair<int, int>> e;
        const int sizes[3] = {4, 3, 5};
        int lo = 0;
        for (int i = 0; i < parts; ++i) {
            add_clique(e, lo, lo + sizes[i]);
            lo += sizes[i];
        }
        const BlobGraph g = graph_from_edges(lo, e);
        const auto ps = decompose_paths(g);
        CHECK(static_cast<int>(ps.size()) == parts);
        int covered = 0;
        for (const BlobPath& p : ps) {
            CHECK(is_path_in(g, p));
            covered += static_cast<int>(p.size());
        }
        CHECK(covered == lo);
    }
}

TEST_CASE("walks through blobs")
{
    const Coloring r5 = Coloring::all(5, Color::Red);
    const BlobDecomposition one{{VertexSet::range(0, 5)}, {}};
    CHECK(walk_blob_path(r5, one, {0}).seq.size() == 5);

    for (int m = 3; m <= 6; ++m) {
        const Coloring r = Coloring::all(2 * m, Color::Red);
        const BlobDecomposition two{{VertexSet::range(0, m), VertexSet::range(m, 2 * m)}, {}};
        const BlobWalk w = walk_blob_path(r, two, {0, 1});
        CHECK(static_cast<int>(w.seq.size()) >= 2 * m - 2);
        CHECK(verify(r, tight_path_witness(w.seq)));
    }
}

TEST_CASE("walk on a random blob chain verifies")
{
    Rng rng(52);
    for (int round = 0; round < 30; ++round) {
        const Coloring c = test::random_coloring(rng, rng.range(12, 24), 0.7 + 0.3 * rng.unit());
        const BlobDecomposition d = extract_blobs(c, 3);
        const BlobGraph g = build_blob_graph(c, d, 1);
        if (g.n_blobs == 0 || check_complement_k4(g)) continue;
        try {
            for (const BlobPath& p : decompose_paths(g)) {
                const BlobWalk w = walk_blob_path(c, d, p);
                if (w.seq.size() >= 3) CHECK(verify(c, tight_path_witness(w.seq)));
            }
        } catch (const std::exception&) {
            // uncovered leftovers are a legitimate stop
        }
    }
}

TEST_CASE("density graph")
{
    const VertexSet X{0, 1, 2, 3}, Y{4, 5, 6, 7};
    CHECK(density_graph(Coloring::all(8, Color::Red), X, Y, 0.9).edge_count() == 6);
    CHECK(density_graph(Coloring::all(8, Color::Blue), X, Y, 0.1).edge_count() == 0);

    // pair {0,1} red towards exactly two of four
    const Coloring half(8, {triple_rank(0, 1, 4, 8), triple_rank(0, 1, 5, 8)});
    CHECK(density_graph(half, X, Y, 0.5).has_edge(0, 1));
    CHECK_FALSE(density_graph(half, X, Y, 0.51).has_edge(0, 1));
    CHECK(density_graph(half, X, Y, 0.5).edge_count() == 1);
}

TEST_CASE("pipeline on trivial inputs")
{
    for (int n = 3; n <= 9; ++n) {
        const Coloring red = Coloring::all(2 * n - 1, Color::Red);
        const PipelineReport r = run_pipeline(red, {});
        CHECK(r.outcome == PipelineOutcome::RedPath);
        check_sound(red, r);
    }
    const Coloring blue = Coloring::all(13, Color::Blue);
    const PipelineReport b = run_pipeline(blue, {});
    CHECK(b.outcome == PipelineOutcome::BlueFano);
    check_sound(blue, b);
    CHECK(b.to_text().find("stage=prepass blue_fano=found") != std::string::npos);
}

TEST_CASE("pipeline on the extended lower bound")
{
    for (int n = 6; n <= 10; ++n) {
        const Coloring c = extended_lower_bound(n).coloring;
        PipelineParams p;
        p.target_n = n;
        const PipelineReport r = run_pipeline(c, p);
        CHECK(r.outcome == PipelineOutcome::RedPath);
        CHECK(trace_has_stage(r, "two_path"));
        check_sound(c, r);
        REQUIRE(r.witness);
        CHECK(r.witness->host_map.size() == static_cast<std::size_t>(n));
        CHECK(r.to_text() == run_pipeline(c, p).to_text());
    }
}

TEST_CASE("pipeline with a planted blue Fano across two blocks")
{
    for (int n = 6; n <= 9; ++n) {
        const BlockColoring ex = extended_lower_bound(n);
        // recolor a few in-block triples to blue so they can join cross-block lines
        std::vector<TripleId> red;
        const auto g = gadget_fano_7(0, 1, n, 2, n + 1, 3, n + 2);
        for (TripleId id : ex.coloring.red_triples()) {
            const Triple t = triple_unrank(id, ex.coloring.n_vertices());
            bool in_gadget = false;
            for (const Triple& e : g) in_gadget |= e == t;
            if (!in_gadget) red.push_back(id);
        }
        const Coloring c(ex.coloring.n_vertices(), red);
        REQUIRE(find_mono(c, fano_lines(), Color::Blue));
        PipelineParams p;
        p.target_n = n;
        const PipelineReport r = run_pipeline(c, p);
        CHECK(r.outcome != PipelineOutcome::Failure);
        check_sound(c, r);
    }
}

TEST_CASE("three-block colorings")
{
    for (int n : {6, 9}) {
        const Coloring full = sharpness_coloring(n).coloring;
        const Coloring c = full.induced(full.all_vertices() - VertexSet{full.n_vertices() - 1});
        PipelineParams p;
        p.target_n = n;
        const PipelineReport r = run_pipeline(c, p);
        check_sound(c, r);
        MESSAGE("three-block n=" << n << " outcome=" << std::string(to_string(r.outcome)));
    }

    // fully dense cyclic instance with blocks of 2n/3: the interleaving walk
    // takes all of P1 and every other slot from P2, |P1| + |P1|/2 = n vertices
    for (int k : {4, 6, 8}) {
        const Coloring c = cyclic_blocks(k);
        const BlobDecomposition d{{VertexSet::range(0, k), VertexSet::range(k, 2 * k), VertexSet::range(2 * k, 3 * k)}, {}};
        PipelineParams p;
        p.target_n = 3 * k / 2;
        p.m = k;
        const PipelineReport r = three_path_branch(c, d, {0}, {1}, {2}, p);
        check_sound(c, r);
        if (r.outcome != PipelineOutcome::RedPath) MESSAGE(r.to_text());
        CHECK(r.outcome == PipelineOutcome::RedPath);
        CHECK(trace_has_stage(r, "three_path.structure3"));
    }
}

TEST_CASE("pipeline soundness on random inputs")
{
    Rng rng(53);
    for (int round = 0; round < 30; ++round) {
        const int n = rng.range(5, 11);
        const Coloring c = test::random_coloring(rng, 2 * n - 1, 0.5 + 0.5 * rng.unit());
        PipelineParams p;
        p.target_n = n;
        const PipelineReport r = run_pipeline(c, p);
        check_sound(c, r);
        PipelineParams p4 = p;
        p4.threads = 4;
        const PipelineReport r4 = run_pipeline(c, p4);
        CHECK(r4.outcome == r.outcome);
        CHECK(r4.witness == r.witness);
    }
}
