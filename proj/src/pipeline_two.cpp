#include "pipeline_internal.hpp"

#include "hyperfano/detect.hpp"
#include "hyperfano/error.hpp"

#include <algorithm>
#include <cmath>

namespace hf {

using namespace detail;

namespace {

/// Largest matching in the bipartite graph adj (left i -> right j), by
/// augmenting paths tried in index order.
std::vector<std::pair<int, int>> max_matching(const std::vector<std::vector<bool>>& adj, int right)
{
    const int left = static_cast<int>(adj.size());
    std::vector<int> match_right(right, -1);
    std::vector<bool> seen;
    auto augment = [&](auto&& self, int i) -> bool {
        for (int j = 0; j < right; ++j) {
            if (!adj[i][j] || seen[j]) continue;
            seen[j] = true;
            if (match_right[j] < 0 || self(self, match_right[j])) {
                match_right[j] = i;
                return true;
            }
        }
        return false;
    };
    for (int i = 0; i < left; ++i) {
        seen.assign(right, false);
        augment(augment, i);
    }
    std::vector<std::pair<int, int>> out;
    for (int j = 0; j < right; ++j)
        if (match_right[j] >= 0) out.emplace_back(match_right[j], j);
    std::sort(out.begin(), out.end());
    return out;
}

/// Rebuilds a walk with apex vertices spliced between x and y of their triple
/// triangles: ... in-pair w x v y z (rest of middle) out-pair ...
std::vector<Vertex> absorb(const BlobWalk& walk, const std::vector<std::pair<int, TripleTriangle>>& by_segment)
{
    std::vector<Vertex> seq;
    for (int s = 0; s < static_cast<int>(walk.segments.size()); ++s) {
        const WalkSegment& seg = walk.segments[s];
        auto it = std::find_if(by_segment.begin(), by_segment.end(), [s](const auto& e) { return e.first == s; });
        const auto begin = walk.seq.begin() + seg.offset;
        const auto end = begin + seg.length;
        if (it == by_segment.end()) {
            seq.insert(seq.end(), begin, end);
            continue;
        }
        const TripleTriangle& t = it->second;
        const VertexSet quad{t.w, t.x, t.y, t.z};
        // the junction vertices keep their places at both ends
        const auto mid = std::find(begin, end, seg.middle.front());
        const std::vector<Vertex> head(begin, mid);
        const std::vector<Vertex> tail(mid + static_cast<std::ptrdiff_t>(seg.middle.size()), end);
        seq.insert(seq.end(), head.begin(), head.end());
        seq.insert(seq.end(), {t.w, t.x, t.v, t.y, t.z});
        for (Vertex v : seg.middle)
            if (!quad.contains(v)) seq.push_back(v);
        seq.insert(seq.end(), tail.begin(), tail.end());
    }
    return seq;
}

struct Specials {
    std::vector<Vertex> in_a; ///< vertices of A with a dense red link into B
    std::vector<Vertex> in_b;
};

/// Walk absorbing special vertices of S into X (open, reachable and good tuples),
/// then extend by a depth-first search inside X.
void embedd_walk(PipelineReport& r, const Coloring& c, VertexSet X, const std::vector<Vertex>& S,
                 const PipelineParams& params, const std::string& side)
{
    const int n = params.target_n;
    const double nn = n;
    const double open_nominal = nn * nn * std::pow(params.m, -0.25);
    const double good_nominal = std::pow(params.eps, 100) * nn * nn;
    const std::int64_t open_cutoff = static_cast<std::int64_t>(std::floor(open_nominal));
    const std::int64_t good_cutoff = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(good_nominal)));
    auto red = [&](Vertex a, Vertex b, Vertex x) { return c.color_of(a, b, x) == Color::Red; };

    const std::vector<Vertex> xs = X.to_vector();
    auto unreachable_from = [&](Vertex a, Vertex b) {
        std::int64_t bad = 0;
        for (Vertex cc : xs)
            for (Vertex dd : xs) {
                if (cc == dd || cc == a || cc == b || dd == a || dd == b) continue;
                if (!(red(a, b, cc) && red(b, cc, dd))) ++bad;
            }
        return bad;
    };
    std::vector<std::vector<bool>> open(c.n_vertices(), std::vector<bool>(c.n_vertices(), false));
    std::int64_t open_count = 0;
    for (Vertex a : xs)
        for (Vertex b : xs)
            if (a != b && unreachable_from(a, b) <= open_cutoff) {
                open[a][b] = true;
                ++open_count;
            }

    auto via_count = [&](Vertex a, Vertex b, Vertex v) {
        std::int64_t k = 0;
        if (!red(a, b, v)) return k;
        for (Vertex cc : xs) {
            if (cc == a || cc == b || !red(b, v, cc)) continue;
            for (Vertex dd : xs)
                if (dd != a && dd != b && dd != cc && red(v, cc, dd)) ++k;
        }
        return k;
    };

    std::vector<Vertex> seq;
    VertexSet used;
    int absorbed = 0;
    std::int64_t min_good = -1;
    for (Vertex v : S) {
        std::int64_t good_size = 0;
        bool placed = false;
        for (Vertex a : xs) {
            for (Vertex b : xs) {
                if (a == b || used.contains(a) || used.contains(b)) continue;
                if (via_count(a, b, v) < good_cutoff) continue;
                ++good_size;
                if (placed) continue;
                if (!seq.empty()) {
                    const Vertex p = seq[seq.size() - 2], q = seq.back();
                    if (!(red(p, q, a) && red(q, a, b))) continue;
                }
                // an open, unused continuation reachable via v
                for (Vertex cc : xs) {
                    if (placed) break;
                    if (cc == a || cc == b || used.contains(cc) || !red(b, v, cc)) continue;
                    for (Vertex dd : xs) {
                        if (dd == a || dd == b || dd == cc || used.contains(dd)) continue;
                        if (!red(v, cc, dd) || !open[cc][dd]) continue;
                        seq.insert(seq.end(), {a, b, v, cc, dd});
                        used |= VertexSet{a, b, cc, dd};
                        ++absorbed;
                        placed = true;
                        break;
                    }
                }
            }
        }
        if (min_good < 0 || good_size < min_good) min_good = good_size;
        if (!placed) break;
    }

    Rec rec(r, "two_path.embedd");
    rec("side", side)("open_tuples", open_count)("open_cutoff_nominal", fmt(open_nominal))("open_cutoff_used", open_cutoff)
        ("good_cutoff_nominal", fmt(good_nominal))("good_cutoff_used", good_cutoff)("min_good_size", min_good)
        ("specials", S.size())("absorbed", absorbed)("prefix_length", seq.size());
    if (seq.empty()) {
        fail(r, "two_path.embedd", "some special vertex has a good tuple leading to an open tuple: none found among " +
                                       std::to_string(S.size()) + " special vertices");
        return;
    }
    SearchStats stats;
    const auto path = extend_red_tight_path(c, seq, X - used, n, params.extend_node_budget, &stats);
    Rec(r, "two_path.embedd_extend")("target", n)("found", path.has_value());
    if (path) {
        finish_red(r, c, *path, n, "two_path.embedd");
        return;
    }
    fail(r, "two_path.embedd",
         "walk through open tuples reaches n=" + std::to_string(n) + " vertices: prefix of " +
             std::to_string(seq.size()) + " does not extend inside |X|=" + std::to_string(X.size()));
}

/// Blue Fano through a junk vertex v with a blue pair {a, b} on side P and
/// blue link edges pq, rs on side Q, as in gadget_fano_7(a, v, b, p, s, r, q).
std::optional<Witness> junk_gadget(const Coloring& c, Vertex v, VertexSet P, VertexSet Q)
{
    const VertexMask q = Q.mask();
    for (Vertex a : P)
        for (Vertex b : VertexSet(c.pair_mask(a, v, Color::Blue) & P.mask() & ~prefix_mask(a + 1)))
            for (Vertex p : Q)
                for (Vertex s : VertexSet(c.pair_mask(a, p, Color::Blue) & q))
                    for (Vertex qq : VertexSet(c.pair_mask(v, p, Color::Blue) & c.pair_mask(b, s, Color::Blue) & q)) {
                        if (qq == s) continue;
                        const VertexMask rs = c.pair_mask(v, s, Color::Blue) & c.pair_mask(a, qq, Color::Blue) &
                                              c.pair_mask(b, p, Color::Blue) & q & ~bit(qq) & ~bit(p);
                        if (rs) return gadget_witness(a, v, b, p, s, static_cast<Vertex>(std::countr_zero(rs)), qq);
                    }
    return std::nullopt;
}

/// good* walk: v_1..v_k from J inserted as a_i b_i v_i, then the rest of X.
std::vector<Vertex> good_star_walk(const Coloring& c, VertexSet X, const std::vector<Vertex>& J, double cutoff_frac,
                                   std::int64_t& good_star_picks, std::int64_t& skipped)
{
    auto red = [&](Vertex a, Vertex b, Vertex x) { return c.color_of(a, b, x) == Color::Red; };
    const std::vector<Vertex> xs = X.to_vector();
    const double pairs = static_cast<double>(xs.size()) * static_cast<double>(xs.size() > 0 ? xs.size() - 1 : 0);
    const std::int64_t cutoff = static_cast<std::int64_t>(std::ceil(cutoff_frac * pairs - 1e-9));
    std::vector<Vertex> seq;
    VertexSet used;
    auto follow_ups = [&](Vertex b, Vertex v) {
        std::int64_t k = 0;
        for (Vertex cc : xs) {
            if (used.contains(cc) || cc == b || !red(b, v, cc)) continue;
            for (Vertex dd : xs)
                if (!used.contains(dd) && dd != b && dd != cc && red(v, cc, dd)) ++k;
        }
        return k;
    };
    for (Vertex v : J) {
        std::optional<std::pair<Vertex, Vertex>> pick, fallback;
        for (Vertex a : xs) {
            for (Vertex b : xs) {
                if (a == b || used.contains(a) || used.contains(b) || !red(a, b, v)) continue;
                if (!seq.empty()) {
                    const Vertex p = seq[seq.size() - 2], q = seq.back();
                    if (!(red(p, q, a) && red(q, a, b))) continue;
                }
                used |= VertexSet{a, b};
                const std::int64_t k = follow_ups(b, v);
                used -= VertexSet{a, b};
                if (k >= cutoff && k > 0) {
                    pick = std::make_pair(a, b);
                    break;
                }
                if (k > 0 && !fallback) fallback = std::make_pair(a, b);
            }
            if (pick) break;
        }
        if (pick) ++good_star_picks;
        else pick = fallback;
        if (!pick) {
            ++skipped;
            continue;
        }
        seq.insert(seq.end(), {pick->first, pick->second, v});
        used |= VertexSet{pick->first, pick->second};
    }
    std::vector<Vertex> rest = (X - used).to_vector();
    if (seq.size() >= 2 && !rest.empty()) {
        const Vertex p = seq[seq.size() - 2], q = seq.back();
        std::optional<std::pair<Vertex, Vertex>> cd;
        for (Vertex cc : rest) {
            for (Vertex dd : rest)
                if (dd != cc && red(p, q, cc) && red(q, cc, dd)) {
                    cd = std::make_pair(cc, dd);
                    break;
                }
            if (cd) break;
        }
        if (!cd) return seq;
        seq.push_back(cd->first);
        seq.push_back(cd->second);
        for (Vertex x : rest)
            if (x != cd->first && x != cd->second) seq.push_back(x);
    } else if (seq.empty()) {
        seq = rest;
    }
    return seq;
}

} // namespace

namespace detail {

void two_path_impl(PipelineReport& r, const Coloring& c, const BlobDecomposition& d, const BlobPath& pa,
                   const BlobPath& pb, const PipelineParams& params)
{
    const int n = params.target_n;
    const double nn = n;

    // walk both paths
    const BlobWalk wa = walk_blob_path(c, d, pa);
    const BlobWalk wb = walk_blob_path(c, d, pb);
    const VertexSet P1 = path_vertices(d, pa), P2 = path_vertices(d, pb);
    Rec(r, "two_path.walk")("P1", P1.size())("P2", P2.size())("walk1", wa.seq.size())("walk2", wb.seq.size())(
        "nominal_lower", fmt(nn - std::pow(nn, std::pow(params.eps, 4))))("n", n);
    if (static_cast<int>(wa.seq.size()) >= n) return finish_red(r, c, wa.seq, n, "two_path.walk");
    if (static_cast<int>(wb.seq.size()) >= n) return finish_red(r, c, wb.seq, n, "two_path.walk");

    // triple triangle matching between the blobs of the two paths
    std::vector<std::vector<bool>> g2(pa.size(), std::vector<bool>(pb.size(), false));
    int g2_edges = 0;
    for (std::size_t i = 0; i < pa.size(); ++i)
        for (std::size_t j = 0; j < pb.size(); ++j)
            if (find_triple_triangle(c, d.blobs[pa[i]], d.blobs[pb[j]])) {
                g2[i][j] = true;
                ++g2_edges;
            }
    const auto M = max_matching(g2, static_cast<int>(pb.size()));

    // direction counts: quadruple inside a walked segment of one path, apex in the partner blob
    auto segment_of = [](const BlobWalk& w, int blob) {
        for (int s = 0; s < static_cast<int>(w.segments.size()); ++s)
            if (w.segments[s].blob == blob) return s;
        return -1;
    };
    std::vector<std::pair<int, TripleTriangle>> into_a, into_b;
    for (const auto& [i, j] : M) {
        const int sa = segment_of(wa, pa[i]);
        if (sa >= 0)
            if (auto t = find_triple_triangle_directed(c, VertexSet::from_vector(wa.segments[sa].middle), d.blobs[pb[j]]))
                into_a.emplace_back(sa, *t);
        const int sb = segment_of(wb, pb[j]);
        if (sb >= 0)
            if (auto t = find_triple_triangle_directed(c, VertexSet::from_vector(wb.segments[sb].middle), d.blobs[pa[i]]))
                into_b.emplace_back(sb, *t);
    }
    const bool use_a = into_a.size() >= into_b.size();
    const auto& chosen = use_a ? into_a : into_b;
    const BlobWalk& w = use_a ? wa : wb;
    const int pre = static_cast<int>(w.seq.size());
    const int absorbed = static_cast<int>(chosen.size());
    std::vector<Vertex> grown = absorbed > 0 ? absorb(w, chosen) : w.seq;
    if (static_cast<int>(grown.size()) != pre + absorbed || !is_red_tight(c, grown))
        throw std::logic_error("two_path: absorption produced an invalid path");
    Rec(r, "two_path.matching")("g2_edges", g2_edges)("matching", M.size())("matching_cap", params.matching_cap)(
        "matching_cap_nominal", fmt(2 * std::pow(nn, std::pow(params.eps, 4))))("into_P1", into_a.size())(
        "into_P2", into_b.size())("direction", use_a ? "P1" : "P2")("pre_length", pre)("absorbed", absorbed)(
        "post_length", grown.size());
    if (static_cast<int>(grown.size()) >= n) return finish_red(r, c, grown, n, "two_path.matching");

    // matched blobs go to junk
    std::vector<bool> drop_a(pa.size(), false), drop_b(pb.size(), false);
    for (const auto& [i, j] : M) drop_a[i] = drop_b[j] = true;
    VertexSet A, B;
    for (std::size_t i = 0; i < pa.size(); ++i)
        if (!drop_a[i]) A |= d.blobs[pa[i]];
    for (std::size_t j = 0; j < pb.size(); ++j)
        if (!drop_b[j]) B |= d.blobs[pb[j]];
    VertexSet Jp = c.all_vertices() - A - B;
    const double blue_nominal = 500.0 * nn * nn * nn / params.m;
    Rec(r, "two_path.decomp")("A", A.size())("B", B.size())("junk", Jp.size())(
        "blue_in_A", blue_triples_inside(c, A))("blue_in_B", blue_triples_inside(c, B))(
        "blue_bound_nominal", fmt(blue_nominal));

    // special vertices
    const double special_threshold = params.special_density * nn * (nn - 1) / 2;
    Specials sp;
    for (Vertex v : A)
        if (static_cast<double>(link_edges(c, v, B, Color::Red)) >= special_threshold) sp.in_a.push_back(v);
    for (Vertex v : B)
        if (static_cast<double>(link_edges(c, v, A, Color::Red)) >= special_threshold) sp.in_b.push_back(v);
    Rec(r, "two_path.special")("threshold_edges", fmt(special_threshold))(
        "threshold_nominal", fmt(0.2 * std::pow(params.eps, 5) * nn * (nn - 1) / 2))("special_in_A", sp.in_a.size())(
        "special_in_B", sp.in_b.size())("count_cutoff", params.special_count_cutoff)(
        "count_cutoff_nominal", fmt(nn * std::pow(params.m, -1.0 / 20)));
    if (static_cast<int>(sp.in_b.size()) >= params.special_count_cutoff)
        return embedd_walk(r, c, A, sp.in_b, params, "B_into_A");
    if (static_cast<int>(sp.in_a.size()) >= params.special_count_cutoff)
        return embedd_walk(r, c, B, sp.in_a, params, "A_into_B");

    // purify the cores
    VertexSet A1 = A, B1 = B;
    for (Vertex v : sp.in_a) A1.erase(v);
    for (Vertex v : sp.in_b) B1.erase(v);
    const PurifyResult pa_res = purify(c, A1, B1);
    if (pa_res.fano) {
        Rec(r, "two_path.purify")("side", "A")("removed", pa_res.removed.size());
        return finish_blue(r, c, *pa_res.fano, "two_path.purify");
    }
    const PurifyResult pb_res = purify(c, B1, pa_res.kept);
    if (pb_res.fano) {
        Rec(r, "two_path.purify")("side", "B")("removed", pb_res.removed.size());
        return finish_blue(r, c, *pb_res.fano, "two_path.purify");
    }
    const VertexSet Ap = pa_res.kept, Bp = pb_res.kept;
    const VertexSet Jpp = c.all_vertices() - Ap - Bp;
    Rec(r, "two_path.purify")("A_prime", Ap.size())("B_prime", Bp.size())("junk", Jpp.size())(
        "removed_A", pa_res.removed.size())("removed_B", pb_res.removed.size())(
        "min_common_blue_link_A", pa_res.min_common_edges)("min_common_blue_link_B", pb_res.min_common_edges)(
        "size_lower_nominal", fmt(nn - params.eps * nn));

    // split the junk by blue degree
    const double cap = params.junk_blue_cap * nn * nn;
    std::vector<Vertex> J1, J2, stuck;
    for (Vertex v : Jpp) {
        const std::int64_t ba = link_edges(c, v, Ap, Color::Blue);
        const std::int64_t bb = link_edges(c, v, Bp, Color::Blue);
        const bool fits_a = static_cast<double>(ba) <= cap, fits_b = static_cast<double>(bb) <= cap;
        if (fits_a && (!fits_b || ba <= bb)) {
            J1.push_back(v);
        } else if (fits_b) {
            J2.push_back(v);
        } else {
            if (auto fano = junk_gadget(c, v, Bp, Ap)) {
                Rec(r, "two_path.adding_junk")("vertex", v)("blue_into_A", ba)("blue_into_B", bb)("gadget", true);
                return finish_blue(r, c, *fano, "two_path.adding_junk");
            }
            if (auto fano = junk_gadget(c, v, Ap, Bp)) {
                Rec(r, "two_path.adding_junk")("vertex", v)("blue_into_A", ba)("blue_into_B", bb)("gadget", true);
                return finish_blue(r, c, *fano, "two_path.adding_junk");
            }
            stuck.push_back(v);
        }
    }
    Rec(r, "two_path.adding_junk")("cap_edges", fmt(cap))("J1", J1.size())("J2", J2.size())("unsplit", stuck.size());

    // good* walk on the larger side
    const int a_star = Ap.size() + static_cast<int>(J1.size());
    const int b_star = Bp.size() + static_cast<int>(J2.size());
    const bool on_a = a_star >= b_star;
    const int size_star = on_a ? a_star : b_star;
    if (size_star < n) {
        Rec(r, "two_path.adding_junk2")("A_star", a_star)("B_star", b_star)("n", n);
        return fail(r, "two_path.adding_junk2",
                    "max(|A*|,|B*|) >= n: |A*|=" + std::to_string(a_star) + " |B*|=" + std::to_string(b_star) +
                        " n=" + std::to_string(n) + " (unsplit junk " + std::to_string(stuck.size()) + ")");
    }
    std::int64_t picks = 0, skipped = 0;
    const std::vector<Vertex> seq =
        good_star_walk(c, on_a ? Ap : Bp, on_a ? J1 : J2, params.density_cutoffs[4], picks, skipped);
    if (!is_red_tight(c, seq)) throw std::logic_error("two_path: good* walk produced an invalid path");
    Rec(r, "two_path.adding_junk2")("side", on_a ? "A" : "B")("A_star", a_star)("B_star", b_star)(
        "good_star_picks", picks)("skipped_junk", skipped)("length", seq.size())("n", n);
    if (static_cast<int>(seq.size()) >= n) return finish_red(r, c, seq, n, "two_path.adding_junk2");
    fail(r, "two_path.adding_junk2",
         "good* walk covers |X*| >= n: walk length " + std::to_string(seq.size()) + " < n=" + std::to_string(n));
}

} // namespace detail

PipelineReport two_path_branch(const Coloring& c, const BlobDecomposition& d, const BlobPath& path_a,
                               const BlobPath& path_b, const PipelineParams& params)
{
    PipelineReport r;
    r.params = resolve_params(params, c.n_vertices());
    two_path_impl(r, c, d, path_a, path_b, r.params);
    return r;
}

} // namespace hf
