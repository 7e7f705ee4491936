#include "hyperfano/oracle.hpp"

#include "hyperfano/error.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

namespace hf {

namespace {

/// Node counter with a wall-clock limit, checked every 4096 ticks.
class Meter {
public:
    explicit Meter(const OracleBudget& b) : budget_(b), start_(std::chrono::steady_clock::now()) {}

    void tick()
    {
        if (++nodes_ > budget_.max_subsets) throw BudgetExceeded("oracle node budget exceeded");
        if ((nodes_ & 4095U) == 0) {
            const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start_;
            if (dt.count() > budget_.timeout_seconds) throw BudgetExceeded("oracle timeout");
        }
    }
    std::uint64_t nodes() const { return nodes_; }

private:
    OracleBudget budget_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t nodes_ = 0;
};

struct NaiveEmbed {
    const Coloring& c;
    const Pattern& p;
    Color col;
    Meter& meter;
    std::vector<Vertex> map;
    std::vector<bool> used;

    bool mapped_edges_ok(int last) const
    {
        for (const Triple& e : p.edges) {
            if (std::max({e.a, e.b, e.c}) != last) continue;
            if (c.color_of(map[e.a], map[e.b], map[e.c]) != col) return false;
        }
        return true;
    }

    bool go(int i)
    {
        if (i == p.n_vertices) return true;
        for (Vertex v = 0; v < c.n_vertices(); ++v) {
            if (used[v]) continue;
            meter.tick();
            map[i] = v;
            used[v] = true;
            if (mapped_edges_ok(i) && go(i + 1)) return true;
            used[v] = false;
        }
        return false;
    }
};

} // namespace

std::optional<Witness> exhaustive_embed(const Coloring& c, const Pattern& p, Color col, const OracleBudget& budget)
{
    validate(p);
    if (p.n_vertices > 12) throw InvalidArgument("exhaustive_embed: pattern larger than 12 vertices");
    if (p.n_vertices > c.n_vertices()) return std::nullopt;
    Meter meter(budget);
    NaiveEmbed e{c, p, col, meter, std::vector<Vertex>(p.n_vertices, -1), std::vector<bool>(c.n_vertices(), false)};
    if (!e.go(0)) return std::nullopt;
    return Witness{p, e.map, col};
}

const std::vector<std::array<Triple, 7>>& fano_line_sets_on_7()
{
    static const std::vector<std::array<Triple, 7>> sets = [] {
        const Pattern f = fano_lines();
        std::array<Vertex, 7> perm{};
        std::iota(perm.begin(), perm.end(), 0);
        std::set<std::array<std::uint64_t, 7>> seen;
        std::vector<std::array<Triple, 7>> out;
        do {
            std::array<Triple, 7> lines{};
            for (int i = 0; i < 7; ++i) {
                const Triple& e = f.edges[i];
                lines[i] = Triple::of(perm[e.a], perm[e.b], perm[e.c]);
            }
            std::sort(lines.begin(), lines.end(), [](const Triple& x, const Triple& y) {
                return colex_rank_unchecked(x.a, x.b, x.c) < colex_rank_unchecked(y.a, y.b, y.c);
            });
            std::array<std::uint64_t, 7> key{};
            for (int i = 0; i < 7; ++i) key[i] = colex_rank_unchecked(lines[i].a, lines[i].b, lines[i].c);
            if (seen.insert(key).second) out.push_back(lines);
        } while (std::next_permutation(perm.begin(), perm.end()));
        return out;
    }();
    return sets;
}

std::uint64_t count_fano_copies(const Coloring& c, Color col, const OracleBudget& budget, int threads)
{
    const int n = c.n_vertices();
    if (n < 7) return 0;
    const auto& line_sets = fano_line_sets_on_7();

    // Each worker owns the 7-subsets whose least vertex it draws from a shared counter.
    auto count_from = [&](Vertex first, Meter& meter) {
        std::uint64_t total = 0;
        std::array<Vertex, 7> s{first, 0, 0, 0, 0, 0, 0};
        // remaining six chosen from (first, n) in lexicographic order
        std::array<int, 6> idx{};
        const int pool = n - first - 1;
        if (pool < 6) return total;
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            meter.tick();
            for (int k = 0; k < 6; ++k) s[k + 1] = first + 1 + idx[k];
            for (const auto& lines : line_sets) {
                bool mono = true;
                for (const Triple& e : lines) {
                    if (c.color_of(s[e.a], s[e.b], s[e.c]) != col) {
                        mono = false;
                        break;
                    }
                }
                if (mono) ++total;
            }
            int k = 5;
            while (k >= 0 && idx[k] == pool - 6 + k) --k;
            if (k < 0) break;
            ++idx[k];
            for (int j = k + 1; j < 6; ++j) idx[j] = idx[j - 1] + 1;
        }
        return total;
    };

    std::atomic<int> next{0};
    std::atomic<std::uint64_t> total{0};
    std::mutex err_mu;
    std::exception_ptr err;
    auto worker = [&] {
        try {
            Meter meter(budget);
            for (int first = next++; first < n; first = next++) total += count_from(first, meter);
        } catch (...) {
            std::lock_guard lock(err_mu);
            if (!err) err = std::current_exception();
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (err) std::rethrow_exception(err);
    return total.load();
}

namespace {

bool tight_dfs(const Coloring& c, int n, std::vector<Vertex>& seq, std::vector<bool>& used, Meter& meter)
{
    if (static_cast<int>(seq.size()) == n) return true;
    for (Vertex v = 0; v < c.n_vertices(); ++v) {
        if (used[v]) continue;
        meter.tick();
        const std::size_t k = seq.size();
        if (k >= 2 && c.color_of(seq[k - 2], seq[k - 1], v) != Color::Red) continue;
        seq.push_back(v);
        used[v] = true;
        if (tight_dfs(c, n, seq, used, meter)) return true;
        used[v] = false;
        seq.pop_back();
    }
    return false;
}

} // namespace

bool exhaustive_tight_path(const Coloring& c, int n, const OracleBudget& budget)
{
    if (n < 1) throw InvalidArgument("exhaustive_tight_path: n must be positive");
    if (n > c.n_vertices()) return false;
    Meter meter(budget);
    std::vector<Vertex> seq;
    std::vector<bool> used(c.n_vertices(), false);
    return tight_dfs(c, n, seq, used, meter);
}

const char* to_string(RamseyVerdict v)
{
    switch (v) {
    case RamseyVerdict::Unavoidable: return "UNAVOIDABLE";
    case RamseyVerdict::Avoidable: return "AVOIDABLE";
    case RamseyVerdict::BudgetExceeded: return "BUDGET_EXCEEDED";
    }
    return "?";
}

namespace {

struct RamseyDfs {
    const Pattern& red_pattern;
    const Pattern& blue_pattern;
    int n;
    Meter& meter;
    std::vector<TripleId> red; ///< red ranks among those assigned so far
    std::optional<Coloring> certificate;

    /// Does the coloring of [k] built so far already contain either pattern?
    bool forced(int k)
    {
        const Coloring partial(k, red);
        const OracleBudget inner{~std::uint64_t{0}, 1e18};
        if (red_pattern.n_vertices <= k && exhaustive_embed(partial, red_pattern, Color::Red, inner)) return true;
        if (blue_pattern.n_vertices <= k && exhaustive_embed(partial, blue_pattern, Color::Blue, inner)) return true;
        return false;
    }

    /// Returns true if an avoiding coloring extends the current assignment.
    bool go(std::uint64_t rank)
    {
        meter.tick();
        // the triples of [k] are exactly ranks < C(k,3)
        for (int k = 3; k <= n; ++k)
            if (binomial(k, 3) == rank && forced(k)) return false;
        if (rank == binomial(n, 3)) {
            certificate = Coloring(n, red);
            return true;
        }
        red.push_back(TripleId{rank});
        if (go(rank + 1)) return true;
        red.pop_back();
        return go(rank + 1);
    }
};

} // namespace

RamseyResult ramsey_verify_tiny(const Pattern& red_pattern, const Pattern& blue_pattern, int N,
                                const OracleBudget& budget)
{
    validate(red_pattern);
    validate(blue_pattern);
    if (N < 3 || N > 12) throw InvalidArgument("ramsey_verify_tiny: N must be in 3..12");
    Meter meter(budget);
    RamseyDfs dfs{red_pattern, blue_pattern, N, meter, {}, std::nullopt};
    RamseyResult out;
    try {
        const bool avoidable = dfs.go(0);
        out.verdict = avoidable ? RamseyVerdict::Avoidable : RamseyVerdict::Unavoidable;
        out.certificate = dfs.certificate;
    } catch (const BudgetExceeded&) {
        out.verdict = RamseyVerdict::BudgetExceeded;
    }
    out.nodes = meter.nodes();
    return out;
}

std::optional<std::pair<VertexSet, VertexSet>> exhaustive_directed_ktt(const Digraph& d, VertexSet A, VertexSet B, int t)
{
    if (t < 1) throw InvalidArgument("exhaustive_directed_ktt: t must be >= 1");
    const std::vector<Vertex> av = A.to_vector(), bv = B.to_vector();
    if (static_cast<int>(av.size()) < t || static_cast<int>(bv.size()) < t) return std::nullopt;

    auto subsets = [t](const std::vector<Vertex>& from) {
        std::vector<VertexSet> out;
        std::vector<bool> pick(from.size(), false);
        std::fill(pick.begin(), pick.begin() + t, true);
        do {
            VertexSet s;
            for (std::size_t i = 0; i < from.size(); ++i)
                if (pick[i]) s.insert(from[i]);
            out.push_back(s);
        } while (std::prev_permutation(pick.begin(), pick.end()));
        return out;
    };
    for (VertexSet S : subsets(av))
        for (VertexSet T : subsets(bv)) {
            bool complete = true;
            for (Vertex s : S)
                for (Vertex x : T) complete = complete && d.has_arc(s, x);
            if (complete) return std::make_pair(S, T);
        }
    return std::nullopt;
}

} // namespace hf
