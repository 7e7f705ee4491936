#include "hyperfano/detect.hpp"

#include "hyperfano/error.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace hf {

namespace {

/// (used set, second-to-last, last) packed for hashing.
struct PathState {
    VertexMask used;
    std::uint16_t tail;

    bool operator==(const PathState&) const = default;
};

struct PathStateHash {
    std::size_t operator()(const PathState& s) const noexcept
    {
        std::uint64_t h = s.used * 0x9E3779B97F4A7C15ULL;
        h ^= (static_cast<std::uint64_t>(s.tail) + 0x7F4A7C15ULL) * 0xC2B2AE3D27D4EB4FULL;
        return static_cast<std::size_t>(h ^ (h >> 31));
    }
};

PathState state_of(VertexMask used, Vertex p, Vertex q)
{
    return PathState{used, static_cast<std::uint16_t>(p * kMaxVertices + q)};
}

/// Exact longest extension with memo; aborts once the cap is reached.
class LongestSearch {
public:
    LongestSearch(const Coloring& host, int cap, std::uint64_t budget) : host_(host), cap_(cap), budget_(budget) {}

    void run()
    {
        const int n = host_.n_vertices();
        for (Vertex p = 0; p < n && !done(); ++p)
            for (Vertex q = 0; q < n && !done(); ++q) {
                if (p == q || host_.pair_mask(p, q, Color::Red) == 0) continue;
                path_ = {p, q};
                extend(bit(p) | bit(q));
            }
    }

    int best_length() const { return best_len_; }
    const std::vector<Vertex>& best_path() const { return best_path_; }
    std::uint64_t nodes() const { return nodes_; }
    bool budget_hit() const { return budget_hit_; }

private:
    bool done() const { return best_len_ >= cap_ || budget_hit_; }

    /// Longest number of vertices addable after the current path.
    int extend(VertexMask used)
    {
        ++nodes_;
        if (budget_ && nodes_ > budget_) {
            budget_hit_ = true;
            return 0;
        }
        const int len = static_cast<int>(path_.size());
        if (len > best_len_) {
            best_len_ = len;
            best_path_ = path_;
        }
        if (len >= cap_) return 0;

        const Vertex p = path_[len - 2], q = path_[len - 1];
        const PathState key = state_of(used, p, q);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        int best = 0;
        VertexMask cands = host_.pair_mask(p, q, Color::Red) & ~used;
        while (cands && !done()) {
            const Vertex r = std::countr_zero(cands);
            cands &= cands - 1;
            path_.push_back(r);
            best = std::max(best, 1 + extend(used | bit(r)));
            path_.pop_back();
        }
        if (!done()) memo_.emplace(key, best);
        return best;
    }

    const Coloring& host_;
    int cap_;
    std::uint64_t budget_;
    std::vector<Vertex> path_;
    std::vector<Vertex> best_path_;
    int best_len_ = 2;
    std::uint64_t nodes_ = 0;
    bool budget_hit_ = false;
    std::unordered_map<PathState, int, PathStateHash> memo_;
};

/// Decides whether some extension of the current path reaches `target`.
class ReachSearch {
public:
    ReachSearch(const Coloring& host, VertexSet pool, int target, std::uint64_t budget)
        : host_(host), pool_(pool.mask()), target_(target), budget_(budget)
    {
    }

    bool from(std::vector<Vertex> prefix)
    {
        path_ = std::move(prefix);
        VertexMask used = 0;
        for (Vertex v : path_) used |= bit(v);
        return extend(used);
    }

    const std::vector<Vertex>& path() const { return path_; }
    std::uint64_t nodes() const { return nodes_; }
    bool budget_hit() const { return budget_hit_; }

private:
    bool extend(VertexMask used)
    {
        ++nodes_;
        if (budget_ && nodes_ > budget_) {
            budget_hit_ = true;
            return false;
        }
        const int len = static_cast<int>(path_.size());
        if (len >= target_) return true;
        const VertexMask free = pool_ & ~used;
        if (len + std::popcount(free) < target_) return false;

        const Vertex p = path_[len - 2], q = path_[len - 1];
        const PathState key = state_of(used, p, q);
        if (dead_.count(key)) return false;

        VertexMask cands = host_.pair_mask(p, q, Color::Red) & free;
        while (cands) {
            const Vertex r = std::countr_zero(cands);
            cands &= cands - 1;
            path_.push_back(r);
            if (extend(used | bit(r))) return true;
            path_.pop_back();
            if (budget_hit_) return false;
        }
        dead_.insert(key);
        return false;
    }

    const Coloring& host_;
    VertexMask pool_;
    int target_;
    std::uint64_t budget_;
    std::vector<Vertex> path_;
    std::uint64_t nodes_ = 0;
    bool budget_hit_ = false;
    std::unordered_set<PathState, PathStateHash> dead_;
};

/// Does any red tight path on `target` vertices exist? Tries every start pair.
std::optional<std::vector<Vertex>> any_path_of_length(const Coloring& host, int target, std::uint64_t budget,
                                                      std::uint64_t& nodes, bool& budget_hit)
{
    const int n = host.n_vertices();
    // one failure cache shared across start pairs: states do not depend on the start
    ReachSearch search(host, host.all_vertices(), target, budget);
    for (Vertex p = 0; p < n; ++p)
        for (Vertex q = 0; q < n; ++q) {
            if (p == q || host.pair_mask(p, q, Color::Red) == 0) continue;
            if (search.from({p, q})) {
                nodes += search.nodes();
                return search.path();
            }
            if (search.budget_hit()) {
                nodes += search.nodes();
                budget_hit = true;
                return std::nullopt;
            }
        }
    nodes += search.nodes();
    return std::nullopt;
}

} // namespace

TightPathResult longest_red_tight_path(const Coloring& host, int cap, const TightPathOptions& opts)
{
    const int n = host.n_vertices();
    if (cap > n) throw InvalidArgument("longest_red_tight_path: cap " + std::to_string(cap) + " exceeds N");
    TightPathResult result;
    result.length = std::min(cap, 2);
    if (cap < 3 || host.red_count() == 0) return result;

    if (n <= opts.exact_max_n) {
        LongestSearch search(host, cap, opts.node_budget);
        search.run();
        result.nodes = search.nodes();
        result.exact = !search.budget_hit();
        result.length = search.best_length();
        if (result.length >= 3) result.witness = tight_path_witness(search.best_path());
        return result;
    }

    // Ladder: raise the target while a path of that length exists.
    std::vector<Vertex> best;
    int target = 3;
    while (target <= cap) {
        bool budget_hit = false;
        const std::uint64_t remaining = opts.node_budget == 0 ? 0 : (opts.node_budget > result.nodes ? opts.node_budget - result.nodes : 1);
        auto found = any_path_of_length(host, target, remaining, result.nodes, budget_hit);
        if (budget_hit) {
            result.exact = false;
            break;
        }
        if (!found) break;
        best = *found;
        target = static_cast<int>(best.size()) + 1;
    }
    result.length = best.empty() ? 2 : static_cast<int>(best.size());
    if (!best.empty()) result.witness = tight_path_witness(best);
    return result;
}

std::optional<std::vector<Vertex>> extend_red_tight_path(const Coloring& host, const std::vector<Vertex>& prefix,
                                                         VertexSet pool, int target, std::uint64_t node_budget,
                                                         SearchStats* stats)
{
    if (prefix.size() < 2) throw InvalidArgument("extend_red_tight_path: prefix needs two vertices");
    for (std::size_t i = 0; i + 2 < prefix.size(); ++i)
        if (host.color_of(prefix[i], prefix[i + 1], prefix[i + 2]) != Color::Red)
            throw InvalidArgument("extend_red_tight_path: prefix is not a red tight path");
    ReachSearch search(host, pool, target, node_budget);
    const bool ok = search.from(prefix);
    if (stats) stats->nodes += search.nodes();
    if (!ok) return std::nullopt;
    return search.path();
}

} // namespace hf
