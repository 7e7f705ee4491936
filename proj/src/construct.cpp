#include "hyperfano/construct.hpp"

#include "hyperfano/error.hpp"

#include <algorithm>

namespace hf {

namespace {

BlockColoring two_block(int n_a, int n_b)
{
    const int n = n_a + n_b;
    if (n > kMaxVertices) throw InvalidArgument("two-block coloring too large for N <= 64");
    BlockColoring out{Coloring::from_predicate(n,
                                               [n_a](Vertex a, Vertex, Vertex c) {
                                                   const bool in_a = c < n_a;
                                                   const bool in_b = a >= n_a;
                                                   return in_a || in_b;
                                               }),
                      {{VertexSet::range(0, n_a), VertexSet::range(n_a, n)}}};
    return out;
}

} // namespace

BlockColoring lower_bound_coloring(int n)
{
    if (n < 3) throw InvalidArgument("lower_bound_coloring needs n >= 3");
    return two_block(n - 1, n - 1);
}

BlockColoring extended_lower_bound(int n)
{
    if (n < 3) throw InvalidArgument("extended_lower_bound needs n >= 3");
    return two_block(n, n - 1);
}

BlockColoring sharpness_coloring(int n)
{
    if (n < 6 || n % 3 != 0) throw InvalidArgument("sharpness_coloring needs n >= 6 divisible by 3");
    const int k = 2 * n / 3;
    const int N = 2 * n;
    if (N > kMaxVertices) throw InvalidArgument("sharpness_coloring too large for N <= 64");
    auto block = [k](Vertex v) { return v / k; };
    auto is_red = [&](Vertex x, Vertex y, Vertex z) {
        int count[3] = {0, 0, 0};
        ++count[block(x)], ++count[block(y)], ++count[block(z)];
        for (int b = 0; b < 3; ++b) {
            if (count[b] < 2) continue;
            // third vertex in the same block or the next one cyclically
            if (count[b] == 3 || count[(b + 1) % 3] == 1) return true;
        }
        return false;
    };
    return BlockColoring{Coloring::from_predicate(N, is_red),
                         {{VertexSet::range(0, k), VertexSet::range(k, 2 * k), VertexSet::range(2 * k, N)}}};
}

std::array<Triple, 7> gadget_fano_7(Vertex x, Vertex s1, Vertex s2, Vertex t1, Vertex t2, Vertex t3, Vertex t4)
{
    const VertexSet all{x, s1, s2, t1, t2, t3, t4};
    if (all.size() != 7) throw InvalidArgument("gadget_fano_7 needs seven distinct vertices");
    return {Triple::of(x, s1, s2),  Triple::of(x, t1, t2),  Triple::of(x, t3, t4), Triple::of(s1, t1, t4),
            Triple::of(s1, t2, t3), Triple::of(s2, t1, t3), Triple::of(s2, t2, t4)};
}

double cfs_bound_log2(int s, int t, double C, double log_base)
{
    if (s < 4 || t < 2 || !(C > 0)) throw InvalidArgument("cfs_bound needs s >= 4, t >= 2, C > 0");
    if (!(log_base > 1)) throw InvalidArgument("cfs_bound: log base must exceed 1");
    return C * std::pow(static_cast<double>(t), s - 2) * std::log(static_cast<double>(t)) / std::log(log_base);
}

double cfs_bound(int s, int t, double C, double log_base)
{
    return std::exp2(cfs_bound_log2(s, t, C, log_base));
}

BlobSize m_of_n(double n, double eps)
{
    if (!(n >= 3)) throw InvalidArgument("m_of_n needs n >= 3");
    if (!(eps > 0 && eps < 1)) throw InvalidArgument("m_of_n needs 0 < eps < 1");
    const double lnn = std::log(n);
    const double lnlnn = std::log(lnn);
    if (!(lnlnn > 0)) throw InvalidArgument("m_of_n: ln ln n <= 0");
    BlobSize out;
    out.raw = eps * std::pow(lnn / lnlnn, 0.2);
    out.m = std::max(3, static_cast<int>(std::ceil(out.raw)));
    const double m = out.m;
    out.inequality_holds = std::pow(m, 5) * std::log(m) <= std::pow(eps, 5) / 5.0 * lnn;
    return out;
}

} // namespace hf
