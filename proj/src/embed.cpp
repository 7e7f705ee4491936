#include "hyperfano/detect.hpp"

#include "hyperfano/error.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <string>
#include <thread>
#include <unordered_set>

namespace hf {

namespace {

struct Constraint {
    int target; ///< later pattern vertex constrained
    int j;      ///< the two earlier vertices it shares an edge with
    int l;
};

/// Static analysis of the pattern in assignment order 0..k-1.
struct Plan {
    int k = 0;
    /// enabled[i]: constraints whose two earlier vertices are both <= i, with max == i
    std::vector<std::vector<Constraint>> enabled;
    /// frontier[i]: vertices <= i sharing an edge with some vertex > i
    std::vector<std::vector<int>> frontier;
    explicit Plan(const Pattern& p) : k(p.n_vertices), enabled(k), frontier(k)
    {
        for (const Triple& e : p.edges) {
            const std::array<int, 3> v{e.a, e.b, e.c};
            // the latest vertex is constrained by the two earlier ones
            enabled[v[1]].push_back(Constraint{v[2], v[0], v[1]});
        }
        for (int i = 0; i < k; ++i) {
            for (int u = 0; u <= i; ++u) {
                const bool touches_later = std::any_of(p.edges.begin(), p.edges.end(), [&](const Triple& e) {
                    const bool has_u = e.a == u || e.b == u || e.c == u;
                    return has_u && e.c > i;
                });
                if (touches_later) frontier[i].push_back(u);
            }
        }
    }
};

constexpr std::size_t kMaxFrontierForCache = 4;
constexpr std::size_t kMaxCacheEntries = std::size_t{1} << 24;

class Engine {
public:
    struct OutOfBudget {};

    Engine(const Coloring& host, const Plan& plan, Color col, std::uint64_t budget)
        : host_(host), plan_(plan), col_(col), budget_(budget), map_(static_cast<std::size_t>(plan.k), -1),
          dom_(static_cast<std::size_t>(plan.k + 1) * static_cast<std::size_t>(plan.k), host.all_vertices().mask())
    {
    }

    /// Search with pattern vertex 0 fixed to `first`. Throws OutOfBudget.
    bool run(int first)
    {
        if (plan_.k > host_.n_vertices()) return false;
        return assign(0, bit(first) & row(-1)[0]);
    }

    const std::vector<Vertex>& map() const { return map_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    VertexMask* row(int depth) { return &dom_[static_cast<std::size_t>(depth + 1) * static_cast<std::size_t>(plan_.k)]; }

    bool assign(int i, VertexMask candidates)
    {
        VertexMask* prev = row(i - 1);
        VertexMask* cur = row(i);
        while (candidates) {
            const Vertex v = std::countr_zero(candidates);
            candidates &= candidates - 1;
            if (++nodes_ > budget_ && budget_ != 0) throw OutOfBudget{};
            map_[i] = v;
            used_ |= bit(v);

            bool ok = true;
            std::copy(prev, prev + plan_.k, cur);
            for (const Constraint& c : plan_.enabled[i]) cur[c.target] &= host_.pair_mask(map_[c.j], map_[c.l], col_);
            for (int u = i + 1; u < plan_.k && ok; ++u) ok = (cur[u] & ~used_) != 0;

            if (ok) {
                if (i + 1 == plan_.k) return true;
                const bool cacheable = plan_.frontier[i].size() <= kMaxFrontierForCache;
                std::string key;
                if (cacheable) {
                    key = make_key(i);
                    if (dead_.count(key)) ok = false;
                }
                if (ok) {
                    if (assign(i + 1, cur[i + 1] & ~used_)) return true;
                    if (cacheable && dead_.size() < kMaxCacheEntries) dead_.insert(std::move(key));
                }
            }
            used_ &= ~bit(v);
        }
        map_[i] = -1;
        return false;
    }

    std::string make_key(int depth) const
    {
        std::string key(9 + plan_.frontier[depth].size(), '\0');
        for (int b = 0; b < 8; ++b) key[b] = static_cast<char>((used_ >> (8 * b)) & 0xFF);
        key[8] = static_cast<char>(depth);
        std::size_t pos = 9;
        for (int u : plan_.frontier[depth]) key[pos++] = static_cast<char>(map_[u]);
        return key;
    }

    const Coloring& host_;
    const Plan& plan_;
    Color col_;
    std::uint64_t budget_;
    std::vector<Vertex> map_;
    std::vector<VertexMask> dom_;
    VertexMask used_ = 0;
    std::uint64_t nodes_ = 0;
    std::unordered_set<std::string> dead_;
};

} // namespace

std::optional<Witness> find_mono(const Coloring& host, const Pattern& p, Color col, const SearchOptions& opts,
                                 SearchStats* stats)
{
    validate(p);
    const Plan plan(p);
    const int n = host.n_vertices();
    if (p.n_vertices > n) return std::nullopt;

    // One subtree per image of pattern vertex 0, each with its own budget, so
    // the outcome is the same for every thread count: the least successful
    // image wins unless a smaller image ran out of budget first.
    std::atomic<int> next{0};
    std::atomic<int> best{n};
    std::atomic<int> least_exhausted{n};
    std::mutex mu;
    std::vector<Vertex> best_map;
    std::uint64_t total_nodes = 0;
    auto worker = [&] {
        std::uint64_t local_nodes = 0;
        for (int first = next++; first < n; first = next++) {
            if (first > best.load() || first > least_exhausted.load()) break;
            Engine e(host, plan, col, opts.node_budget);
            bool found = false;
            try {
                found = e.run(first);
            } catch (const Engine::OutOfBudget&) {
                std::lock_guard lock(mu);
                if (first < least_exhausted.load()) least_exhausted = first;
            }
            local_nodes += e.nodes();
            if (found) {
                std::lock_guard lock(mu);
                if (first < best.load()) {
                    best = first;
                    best_map = e.map();
                }
            }
        }
        std::lock_guard lock(mu);
        total_nodes += local_nodes;
    };
    if (opts.threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < opts.threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (stats) stats->nodes += total_nodes;
    if (least_exhausted.load() < best.load())
        throw BudgetExceeded("find_mono: node budget exhausted under root image " + std::to_string(least_exhausted.load()));
    if (best.load() >= n) return std::nullopt;
    return Witness{p, best_map, col};
}

} // namespace hf
