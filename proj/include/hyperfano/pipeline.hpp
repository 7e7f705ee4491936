#pragma once

// Red tight path extraction on a two-colored K_N^(3). Every branch either
// returns a witness (re-verified before it leaves this module), or a Failure
// naming the stage and the inequality that did not hold at this size.

#include "hyperfano/coloring.hpp"
#include "hyperfano/witness.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hf {

/// Zero / negative entries mean "derive the default from N, target_n and m";
/// resolve_params fills them in.
struct PipelineParams {
    int target_n = 0;            ///< 0: (N + 1) / 2
    int m = 0;                   ///< 0: max(3, m_of_n(target_n, eps))
    int butterfly_threshold = 0; ///< 0: max(1, m / 4)
    int matching_cap = 0;        ///< 0: ceil(2 n^(eps^4)), logged against |M|
    double special_density = 0;  ///< 0: 0.2 eps^5, times C(n,2)
    int special_count_cutoff = 0;  ///< 0: ceil(n m^(-1/20))
    /// 0.99, 0.98, 29/30, 27/30, 0.9, 0.8
    std::array<double, 6> density_cutoffs{0.99, 0.98, 29.0 / 30.0, 27.0 / 30.0, 0.9, 0.8};
    double degree_floor = 0.39;
    double junk_blue_cap = 0; ///< 0: eps, times n^2
    double eps = 0.1;

    /// Stand-ins for unnamed absolute constants; only ever logged.
    double t_const = 2.0;
    double c_prime = 1.0;

    int exact_path_max_blobs = 16;
    std::uint64_t prepass_node_budget = 2'000'000; ///< per root image in the blue Fano pre-pass
    std::uint64_t extend_node_budget = 2'000'000;
    int threads = 1;
};

/// Fills defaults and validates. Throws InvalidArgument.
PipelineParams resolve_params(const PipelineParams& p, int n_vertices);

struct BlobDecomposition {
    std::vector<VertexSet> blobs;
    VertexSet junk;
};

struct BlobGraph {
    int n_blobs = 0;
    std::vector<std::vector<bool>> adj;
    std::vector<std::vector<int>> disjoint_butterflies; ///< measured counts, symmetric

    bool has_edge(int i, int j) const { return adj[i][j]; }
    int edge_count() const;
};

/// Repeatedly removes the lexicographically least red K_m from what is left.
BlobDecomposition extract_blobs(const Coloring& c, int m);

/// Edge iff the greedy disjoint butterfly count between the two blobs is >= threshold.
BlobGraph build_blob_graph(const Coloring& c, const BlobDecomposition& d, int threshold);

/// Lexicographically least 4 blobs that are pairwise non-adjacent.
std::optional<std::array<int, 4>> check_complement_k4(const BlobGraph& g);

using BlobPath = std::vector<int>;

/// Longest path, then longest in the rest, then a third. Exact (subset DP)
/// up to `exact_max_blobs`, greedy with 2-opt reversals above. Throws NotFound
/// when the complement has a K4 or blobs remain after three paths.
std::vector<BlobPath> decompose_paths(const BlobGraph& g, int exact_max_blobs = 16);

/// One blob's stretch inside a walk.
struct WalkSegment {
    int blob = 0;                ///< index into the decomposition
    int offset = 0;              ///< first position in BlobWalk::seq
    int length = 0;
    std::vector<Vertex> middle;  ///< vertices not used by a junction
    VertexSet junction;          ///< in-pair and out-pair vertices
};

struct BlobWalk {
    std::vector<Vertex> seq;
    std::vector<WalkSegment> segments;
    int first = 0; ///< run of path positions [first, last] that was walked
    int last = -1;
};

/// Red tight path through the blobs of `path` in order, crossing each junction
/// along an oriented butterfly x_o x_i y_i y_o. An inner blob whose in-pair and
/// out-pair are disjoint is walked in full; if they share one vertex (in.second
/// == out.first) only those three vertices are used. Junction choices are made
/// by dynamic programming; when some junction cannot be crossed the longest
/// contiguous run is returned. Empty walk for an empty path.
BlobWalk walk_blob_path(const Coloring& c, const BlobDecomposition& d, const BlobPath& path);

/// Graph on X, ab an edge iff |{y in Y : aby red}| >= ceil(x |Y|).
Graph density_graph(const Coloring& c, VertexSet X, VertexSet Y, double x);

struct StageRecord {
    std::string stage;
    std::vector<std::pair<std::string, std::string>> values;
};

struct PipelineFailure {
    std::string stage;
    std::string inequality;
};

enum class PipelineOutcome { RedPath, BlueFano, Failure };
const char* to_string(PipelineOutcome o);

struct PipelineReport {
    PipelineOutcome outcome = PipelineOutcome::Failure;
    std::optional<Witness> witness;
    std::optional<PipelineFailure> failure;
    std::vector<StageRecord> trace;
    PipelineParams params; ///< resolved

    /// Deterministic plain-text rendering.
    std::string to_text() const;
};

PipelineReport two_path_branch(const Coloring& c, const BlobDecomposition& d, const BlobPath& path_a,
                               const BlobPath& path_b, const PipelineParams& params);

PipelineReport three_path_branch(const Coloring& c, const BlobDecomposition& d, const BlobPath& path_a,
                                 const BlobPath& path_b, const BlobPath& path_c, const PipelineParams& params);

PipelineReport run_pipeline(const Coloring& c, const PipelineParams& params = {});

} // namespace hf
