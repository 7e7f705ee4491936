#include "pipeline_internal.hpp"

#include "hyperfano/construct.hpp"
#include "hyperfano/detect.hpp"
#include "hyperfano/error.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <stdexcept>

namespace hf {

using namespace detail;

PipelineParams resolve_params(const PipelineParams& p, int n_vertices)
{
    PipelineParams r = p;
    if (!(r.eps > 0 && r.eps < 1)) throw InvalidArgument("pipeline: eps must lie in (0,1)");
    if (r.target_n == 0) r.target_n = (n_vertices + 1) / 2;
    if (r.target_n < 3) throw InvalidArgument("pipeline: target_n must be >= 3");
    const double n = r.target_n;
    if (r.m == 0) r.m = r.target_n >= 16 ? m_of_n(n, r.eps).m : 3;
    if (r.m < 3) throw InvalidArgument("pipeline: m must be >= 3");
    if (r.butterfly_threshold == 0) r.butterfly_threshold = std::max(1, r.m / 4);
    if (r.butterfly_threshold < 1) throw InvalidArgument("pipeline: butterfly threshold must be >= 1");
    if (r.matching_cap == 0) r.matching_cap = std::max(1, static_cast<int>(std::ceil(2 * std::pow(n, std::pow(r.eps, 4)))));
    if (r.matching_cap < 1) throw InvalidArgument("pipeline: matching cap must be >= 1");
    if (r.special_density == 0) r.special_density = 0.2 * std::pow(r.eps, 5);
    if (r.special_count_cutoff == 0)
        r.special_count_cutoff = std::max(1, static_cast<int>(std::ceil(n * std::pow(r.m, -1.0 / 20))));
    if (r.special_count_cutoff < 1) throw InvalidArgument("pipeline: special count cutoff must be >= 1");
    if (r.junk_blue_cap == 0) r.junk_blue_cap = r.eps;

    auto unit = [](double x, const char* what) {
        if (!(x > 0 && x < 1)) throw InvalidArgument(std::string("pipeline: ") + what + " must lie in (0,1)");
    };
    unit(r.special_density, "special_density");
    unit(r.junk_blue_cap, "junk_blue_cap");
    unit(r.degree_floor, "degree_floor");
    for (double x : r.density_cutoffs) unit(x, "density cutoff");
    if (!(r.t_const > 0) || !(r.c_prime > 0)) throw InvalidArgument("pipeline: constant stand-ins must be positive");
    if (r.exact_path_max_blobs < 0 || r.exact_path_max_blobs > 20)
        throw InvalidArgument("pipeline: exact_path_max_blobs must be in 0..20");
    if (r.threads < 1) throw InvalidArgument("pipeline: threads must be >= 1");
    return r;
}

// --- blobs -------------------------------------------------------------------

BlobDecomposition extract_blobs(const Coloring& c, int m)
{
    if (m < 3) throw InvalidArgument("extract_blobs: m must be >= 3");
    BlobDecomposition d;
    VertexSet rest = c.all_vertices();
    while (rest.size() >= m) {
        const auto blob = find_red_clique(c, m, rest);
        if (!blob) break;
        d.blobs.push_back(*blob);
        rest -= *blob;
    }
    d.junk = rest;
    return d;
}

int BlobGraph::edge_count() const
{
    int e = 0;
    for (int i = 0; i < n_blobs; ++i)
        for (int j = i + 1; j < n_blobs; ++j) e += adj[i][j] ? 1 : 0;
    return e;
}

BlobGraph build_blob_graph(const Coloring& c, const BlobDecomposition& d, int threshold)
{
    if (threshold < 1) throw InvalidArgument("build_blob_graph: threshold must be >= 1");
    BlobGraph g;
    g.n_blobs = static_cast<int>(d.blobs.size());
    g.adj.assign(g.n_blobs, std::vector<bool>(g.n_blobs, false));
    g.disjoint_butterflies.assign(g.n_blobs, std::vector<int>(g.n_blobs, 0));
    for (int i = 0; i < g.n_blobs; ++i)
        for (int j = i + 1; j < g.n_blobs; ++j) {
            const int k = static_cast<int>(max_disjoint_butterflies(c, d.blobs[i], d.blobs[j]).size());
            g.disjoint_butterflies[i][j] = g.disjoint_butterflies[j][i] = k;
            g.adj[i][j] = g.adj[j][i] = k >= threshold;
        }
    return g;
}

std::optional<std::array<int, 4>> check_complement_k4(const BlobGraph& g)
{
    const int n = g.n_blobs;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (g.adj[a][b]) continue;
            for (int x = b + 1; x < n; ++x) {
                if (g.adj[a][x] || g.adj[b][x]) continue;
                for (int y = x + 1; y < n; ++y)
                    if (!g.adj[a][y] && !g.adj[b][y] && !g.adj[x][y]) return std::array<int, 4>{a, b, x, y};
            }
        }
    return std::nullopt;
}

// --- longest paths -----------------------------------------------------------

namespace {

/// Subset dynamic program: reach[mask] has bit e when some path covers
/// exactly `mask` and ends at alive[e].
BlobPath longest_path_exact(const BlobGraph& g, const std::vector<int>& alive)
{
    const int k = static_cast<int>(alive.size());
    if (k == 0) return {};
    const std::size_t full = std::size_t{1} << k;
    std::vector<std::uint32_t> reach(full, 0);
    for (int i = 0; i < k; ++i) reach[std::size_t{1} << i] = 1U << i;
    std::size_t best = 1;
    for (std::size_t mask = 1; mask < full; ++mask) {
        if (!reach[mask]) continue;
        if (std::popcount(mask) > std::popcount(best)) best = mask;
        for (int e = 0; e < k; ++e) {
            if (!((reach[mask] >> e) & 1U)) continue;
            for (int f = 0; f < k; ++f)
                if (!((mask >> f) & 1U) && g.adj[alive[e]][alive[f]]) reach[mask | (std::size_t{1} << f)] |= 1U << f;
        }
    }
    BlobPath rev;
    std::size_t mask = best;
    int end = std::countr_zero(reach[mask]);
    while (true) {
        rev.push_back(alive[end]);
        const std::size_t prev = mask & ~(std::size_t{1} << end);
        if (!prev) break;
        int next = -1;
        for (int e = 0; e < k && next < 0; ++e)
            if (((reach[prev] >> e) & 1U) && g.adj[alive[e]][alive[end]]) next = e;
        mask = prev;
        end = next;
    }
    return BlobPath(rev.rbegin(), rev.rend());
}

/// Greedy extension from every start; when both ends are stuck, a 2-opt
/// reversal of a suffix (path[i] adjacent to the tail) exposes a new tail.
BlobPath longest_path_greedy(const BlobGraph& g, const std::vector<int>& alive)
{
    BlobPath best;
    std::vector<bool> in_alive(g.n_blobs, false);
    for (int v : alive) in_alive[v] = true;
    for (int s : alive) {
        BlobPath path{s};
        std::vector<bool> on(g.n_blobs, false);
        on[s] = true;
        const int rotation_limit = static_cast<int>(alive.size() * alive.size());
        int rotations = 0;
        auto free_neighbor = [&](int v) {
            for (int u : alive)
                if (!on[u] && g.adj[v][u]) return u;
            return -1;
        };
        while (true) {
            if (int u = free_neighbor(path.back()); u >= 0) {
                path.push_back(u);
                on[u] = true;
                continue;
            }
            if (int u = free_neighbor(path.front()); u >= 0) {
                path.insert(path.begin(), u);
                on[u] = true;
                continue;
            }
            bool moved = false;
            const int k = static_cast<int>(path.size());
            for (int i = 0; i + 2 < k && !moved && rotations < rotation_limit; ++i) {
                if (!g.adj[path.back()][path[i]]) continue;
                if (free_neighbor(path[i + 1]) < 0) continue;
                std::reverse(path.begin() + i + 1, path.end());
                ++rotations;
                moved = true;
            }
            if (!moved) break;
        }
        if (path.size() > best.size()) best = path;
    }
    return best;
}

} // namespace

std::vector<BlobPath> decompose_paths(const BlobGraph& g, int exact_max_blobs)
{
    if (auto k4 = check_complement_k4(g))
        throw NotFound("decompose_paths: complement of the blob graph contains K4 on blobs " +
                       std::to_string((*k4)[0]) + "," + std::to_string((*k4)[1]) + "," + std::to_string((*k4)[2]) +
                       "," + std::to_string((*k4)[3]));
    std::vector<BlobPath> out;
    std::vector<int> alive(g.n_blobs);
    for (int i = 0; i < g.n_blobs; ++i) alive[i] = i;
    while (!alive.empty()) {
        if (out.size() == 3)
            throw NotFound("decompose_paths: " + std::to_string(alive.size()) + " blobs left after three paths");
        BlobPath p = static_cast<int>(alive.size()) <= exact_max_blobs ? longest_path_exact(g, alive)
                                                                        : longest_path_greedy(g, alive);
        std::vector<int> rest;
        for (int v : alive)
            if (std::find(p.begin(), p.end(), v) == p.end()) rest.push_back(v);
        alive = std::move(rest);
        out.push_back(std::move(p));
    }
    return out;
}

// --- walking a blob path -------------------------------------------------------

namespace {

/// x_o x_i y_i y_o, a red tight path from blob X into blob Y.
struct Crossing {
    Vertex xo, xi, yi, yo;
};

std::vector<Crossing> crossings(const Coloring& c, VertexSet X, VertexSet Y)
{
    std::vector<Crossing> out;
    for (Vertex xo : X)
        for (Vertex xi : X) {
            if (xi == xo) continue;
            const VertexMask yis = c.pair_mask(xo, xi, Color::Red) & Y.mask();
            for (Vertex yi : VertexSet(yis))
                for (Vertex yo : VertexSet(c.pair_mask(xi, yi, Color::Red) & Y.mask() & ~bit(yi)))
                    out.push_back(Crossing{xo, xi, yi, yo});
        }
    return out;
}

using Pair = std::pair<Vertex, Vertex>;

/// Length of an inner segment entered by `in` and left by `out`; 0 if impossible.
int inner_length(int blob_size, Pair in, Pair out)
{
    const bool disjoint = in.first != out.first && in.first != out.second && in.second != out.first &&
                          in.second != out.second;
    if (disjoint) return blob_size;
    if (in.second == out.first && in.first != out.second) return 3;
    return 0;
}

struct DpNode {
    int value = 0;
    int crossing = -1; ///< index into the crossing list of the junction that entered this blob
    Pair prev{-1, -1}; ///< in-pair state of the previous blob
};

} // namespace

BlobWalk walk_blob_path(const Coloring& c, const BlobDecomposition& d, const BlobPath& path)
{
    BlobWalk walk;
    const int k = static_cast<int>(path.size());
    if (k == 0) return walk;
    std::vector<VertexSet> Y(k);
    for (int p = 0; p < k; ++p) Y[p] = d.blobs.at(path[p]);
    std::vector<std::vector<Crossing>> J(k > 0 ? k - 1 : 0);
    for (int p = 0; p + 1 < k; ++p) J[p] = crossings(c, Y[p], Y[p + 1]);

    // layers[p]: in-pair of Y[p] -> best node, for the run starting at s
    int best_total = -1, best_s = 0, best_e = 0;
    std::vector<std::map<Pair, DpNode>> best_layers;
    for (int s = 0; s < k; ++s) {
        std::vector<std::map<Pair, DpNode>> layers(k);
        if (Y[s].size() > best_total) {
            best_total = Y[s].size();
            best_s = best_e = s;
            best_layers = layers;
        }
        for (int p = s + 1; p < k; ++p) {
            const auto& jx = J[p - 1];
            auto& cur = layers[p];
            for (int b = 0; b < static_cast<int>(jx.size()); ++b) {
                const Crossing& x = jx[b];
                const Pair in{x.yi, x.yo};
                if (p - 1 == s) {
                    const int value = Y[s].size();
                    auto it = cur.find(in);
                    if (it == cur.end() || value > it->second.value) cur[in] = DpNode{value, b, {-1, -1}};
                    continue;
                }
                for (const auto& [prev_in, node] : layers[p - 1]) {
                    const int len = inner_length(Y[p - 1].size(), prev_in, Pair{x.xo, x.xi});
                    if (len == 0) continue;
                    const int value = node.value + len;
                    auto it = cur.find(in);
                    if (it == cur.end() || value > it->second.value) cur[in] = DpNode{value, b, prev_in};
                }
            }
            if (cur.empty()) break;
            int top = -1;
            for (const auto& [in, node] : cur) top = std::max(top, node.value);
            if (top + Y[p].size() > best_total) {
                best_total = top + Y[p].size();
                best_s = s;
                best_e = p;
                best_layers = layers;
            }
        }
    }

    // Recover the crossing used at each junction of the winning run.
    std::vector<const Crossing*> used(k, nullptr); // used[p]: crossing from Y[p] into Y[p+1]
    if (best_e > best_s) {
        Pair state{-1, -1};
        int top = -1;
        for (const auto& [in, node] : best_layers[best_e])
            if (node.value > top) {
                top = node.value;
                state = in;
            }
        for (int p = best_e; p > best_s; --p) {
            const DpNode& node = best_layers[p].at(state);
            used[p - 1] = &J[p - 1][node.crossing];
            state = node.prev;
        }
    }

    walk.first = best_s;
    walk.last = best_e;
    for (int p = best_s; p <= best_e; ++p) {
        WalkSegment seg;
        seg.blob = path[p];
        seg.offset = static_cast<int>(walk.seq.size());
        std::vector<Vertex> head, tail;
        if (p > best_s) {
            head = {used[p - 1]->yi, used[p - 1]->yo};
        }
        if (p < best_e) {
            tail = {used[p]->xo, used[p]->xi};
        }
        if (!head.empty() && !tail.empty() && head[1] == tail[0]) {
            seg.junction = VertexSet{head[0], head[1], tail[1]};
            walk.seq.insert(walk.seq.end(), {head[0], head[1], tail[1]});
        } else {
            for (Vertex v : head) seg.junction.insert(v);
            for (Vertex v : tail) seg.junction.insert(v);
            seg.middle = (Y[p] - seg.junction).to_vector();
            walk.seq.insert(walk.seq.end(), head.begin(), head.end());
            walk.seq.insert(walk.seq.end(), seg.middle.begin(), seg.middle.end());
            walk.seq.insert(walk.seq.end(), tail.begin(), tail.end());
        }
        seg.length = static_cast<int>(walk.seq.size()) - seg.offset;
        walk.segments.push_back(std::move(seg));
    }
    if (static_cast<int>(walk.seq.size()) != best_total || !is_red_tight(c, walk.seq))
        throw std::logic_error("walk_blob_path: internal walk does not verify");
    return walk;
}

Graph density_graph(const Coloring& c, VertexSet X, VertexSet Y, double x)
{
    if (X.intersects(Y)) throw InvalidArgument("density_graph: X and Y overlap");
    if (!(x > 0 && x < 1)) throw InvalidArgument("density_graph: x must lie in (0,1)");
    Graph g;
    g.vertices = X;
    const int need = static_cast<int>(std::ceil(x * Y.size() - 1e-9));
    for (Vertex a : X)
        for (Vertex b : X) {
            if (b <= a) continue;
            if (std::popcount(c.pair_mask(a, b, Color::Red) & Y.mask()) >= need) g.add_edge(a, b);
        }
    return g;
}

// --- report ------------------------------------------------------------------

const char* to_string(PipelineOutcome o)
{
    switch (o) {
    case PipelineOutcome::RedPath: return "RED_PATH";
    case PipelineOutcome::BlueFano: return "BLUE_FANO";
    case PipelineOutcome::Failure: return "FAILURE";
    }
    return "?";
}

std::string PipelineReport::to_text() const
{
    std::ostringstream os;
    os << "outcome=" << to_string(outcome) << '\n';
    const PipelineParams& p = params;
    os << "params target_n=" << p.target_n << " m=" << p.m << " butterfly_threshold=" << p.butterfly_threshold
       << " matching_cap=" << p.matching_cap << " special_density=" << fmt(p.special_density)
       << " special_count_cutoff=" << p.special_count_cutoff << " density_cutoffs=";
    for (std::size_t i = 0; i < p.density_cutoffs.size(); ++i) os << (i ? "," : "") << fmt(p.density_cutoffs[i]);
    os << " degree_floor=" << fmt(p.degree_floor) << " junk_blue_cap=" << fmt(p.junk_blue_cap)
       << " eps=" << fmt(p.eps) << " t_const=" << fmt(p.t_const) << " c_prime=" << fmt(p.c_prime) << '\n';
    for (const StageRecord& s : trace) {
        os << "stage=" << s.stage;
        for (const auto& [k, v] : s.values) os << ' ' << k << '=' << v;
        os << '\n';
    }
    if (failure) {
        os << "failure_stage=" << failure->stage << '\n';
        os << "failure_inequality=" << failure->inequality << '\n';
    }
    if (witness) write_witness(os, *witness);
    return os.str();
}

// --- helpers -----------------------------------------------------------------

namespace detail {

std::string fmt(double x)
{
    std::ostringstream os;
    os << std::setprecision(6) << x;
    return os.str();
}

std::string fmt(const std::vector<Vertex>& v)
{
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out + "]";
}

bool is_red_tight(const Coloring& c, const std::vector<Vertex>& seq)
{
    VertexSet seen;
    for (Vertex v : seq) {
        if (v < 0 || v >= c.n_vertices() || seen.contains(v)) return false;
        seen.insert(v);
    }
    for (std::size_t i = 0; i + 2 < seq.size(); ++i)
        if (c.color_of(seq[i], seq[i + 1], seq[i + 2]) != Color::Red) return false;
    return true;
}

void finish_red(PipelineReport& r, const Coloring& c, std::vector<Vertex> seq, int n, const std::string& stage)
{
    if (static_cast<int>(seq.size()) < n) throw std::logic_error("finish_red: path shorter than target");
    seq.resize(static_cast<std::size_t>(n));
    Witness w = tight_path_witness(seq);
    if (!verify(c, w)) throw std::logic_error("finish_red: red tight path from " + stage + " does not verify");
    r.outcome = PipelineOutcome::RedPath;
    r.witness = std::move(w);
    Rec(r, "outcome")("kind", "RED_PATH")("found_by", stage)("length", n);
}

void finish_blue(PipelineReport& r, const Coloring& c, const Witness& w, const std::string& stage)
{
    if (!verify(c, w) || w.color != Color::Blue)
        throw std::logic_error("finish_blue: blue Fano from " + stage + " does not verify");
    r.outcome = PipelineOutcome::BlueFano;
    r.witness = w;
    Rec(r, "outcome")("kind", "BLUE_FANO")("found_by", stage);
}

void fail(PipelineReport& r, const std::string& stage, const std::string& inequality)
{
    r.outcome = PipelineOutcome::Failure;
    r.failure = PipelineFailure{stage, inequality};
    Rec(r, "outcome")("kind", "FAILURE")("stage", stage);
}

Witness gadget_witness(Vertex x, Vertex s1, Vertex s2, Vertex t1, Vertex t2, Vertex t3, Vertex t4)
{
    // canonical lines 012 034 056 135 146 236 245 land on the gadget's lines
    return Witness{fano_lines(), {x, s1, s2, t1, t2, t4, t3}, Color::Blue};
}

std::optional<std::array<Vertex, 4>> find_k4(const Graph& g)
{
    const VertexMask V = g.vertices.mask();
    for (Vertex a : g.vertices)
        for (Vertex b : VertexSet(g.adj[a] & V & ~prefix_mask(a + 1)))
            for (Vertex x : VertexSet(g.adj[a] & g.adj[b] & V & ~prefix_mask(b + 1))) {
                const VertexMask ys = g.adj[a] & g.adj[b] & g.adj[x] & V & ~prefix_mask(x + 1);
                if (ys) return std::array<Vertex, 4>{a, b, x, static_cast<Vertex>(std::countr_zero(ys))};
            }
    return std::nullopt;
}

std::int64_t link_edges(const Coloring& c, Vertex v, VertexSet X, Color col)
{
    std::int64_t e = 0;
    for (Vertex x : X)
        if (x != v) e += std::popcount(c.pair_mask(v, x, col) & X.mask() & ~prefix_mask(x + 1));
    return e;
}

std::int64_t blue_degree_inside(const Coloring& c, Vertex v, VertexSet X)
{
    return link_edges(c, v, X - VertexSet{v}, Color::Blue);
}

std::int64_t blue_triples_inside(const Coloring& c, VertexSet X)
{
    std::int64_t k = 0;
    for (Vertex a : X)
        for (Vertex b : X - VertexSet(prefix_mask(a + 1)))
            k += std::popcount(c.pair_mask(a, b, Color::Blue) & X.mask() & ~prefix_mask(b + 1));
    return k;
}

std::optional<std::array<Vertex, 3>> least_blue_triple(const Coloring& c, VertexSet X)
{
    for (Vertex a : X)
        for (Vertex b : X - VertexSet(prefix_mask(a + 1))) {
            const VertexMask cs = c.pair_mask(a, b, Color::Blue) & X.mask() & ~prefix_mask(b + 1);
            if (cs) return std::array<Vertex, 3>{a, b, static_cast<Vertex>(std::countr_zero(cs))};
        }
    return std::nullopt;
}

std::optional<Witness> blue_triple_gadget(const Coloring& c, const std::array<Vertex, 3>& abc, VertexSet Y,
                                          std::int64_t* common_edges)
{
    Graph g;
    g.vertices = Y;
    for (Vertex x : Y)
        for (Vertex y : Y - VertexSet(prefix_mask(x + 1))) {
            bool all_blue = true;
            for (Vertex v : abc) all_blue = all_blue && c.color_of(v, x, y) == Color::Blue;
            if (all_blue) g.add_edge(x, y);
        }
    if (common_edges) *common_edges = g.edge_count();
    const auto k4 = find_k4(g);
    if (!k4) return std::nullopt;
    const auto& t = *k4;
    return gadget_witness(abc[0], abc[1], abc[2], t[0], t[1], t[2], t[3]);
}

PurifyResult purify(const Coloring& c, VertexSet X, VertexSet Y)
{
    PurifyResult out;
    out.kept = X;
    while (auto t = least_blue_triple(c, out.kept)) {
        std::int64_t common = 0;
        if (auto w = blue_triple_gadget(c, *t, Y, &common)) {
            out.fano = std::move(w);
            return out;
        }
        if (out.min_common_edges < 0 || common < out.min_common_edges) out.min_common_edges = common;
        Vertex worst = (*t)[0];
        std::int64_t worst_deg = -1;
        for (Vertex v : *t) {
            const std::int64_t deg = blue_degree_inside(c, v, out.kept);
            if (deg > worst_deg) {
                worst_deg = deg;
                worst = v;
            }
        }
        out.kept.erase(worst);
        out.removed.push_back(worst);
    }
    return out;
}

VertexSet path_vertices(const BlobDecomposition& d, const BlobPath& p)
{
    VertexSet s;
    for (int b : p) s |= d.blobs.at(b);
    return s;
}

} // namespace detail

} // namespace hf
