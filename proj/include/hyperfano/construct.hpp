#pragma once

#include "hyperfano/coloring.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace hf {

/// Ordered disjoint blocks covering [N].
struct BlockSpec {
    std::vector<VertexSet> blocks;
};

struct BlockColoring {
    Coloring coloring;
    BlockSpec blocks;
};

/// N = 2n-2, A = {0..n-2}, B = {n-1..2n-3}; red iff inside one block.
BlockColoring lower_bound_coloring(int n);

/// Same rule on N = 2n-1 with |A| = n, |B| = n-1.
BlockColoring extended_lower_bound(int n);

/// N = 2n with three blocks of 2n/3 (n divisible by 3, n >= 6). {x,y,z} is red
/// iff two vertices lie in A and the third in A u B, or two in B and the third
/// in B u C, or two in C and the third in C u A.
BlockColoring sharpness_coloring(int n);

/// {x s1 s2, x t1 t2, x t3 t4, s1 t1 t4, s1 t2 t3, s2 t1 t3, s2 t2 t4}: a Fano
/// plane on any seven distinct vertices.
std::array<Triple, 7> gadget_fano_7(Vertex x, Vertex s1, Vertex s2, Vertex t1, Vertex t2, Vertex t3, Vertex t4);

/// 2^(C * t^(s-2) * log t), the logarithm taken to `log_base` (natural by
/// default). An upper-bound formula, not a Ramsey value; +inf on overflow.
double cfs_bound(int s, int t, double C, double log_base = std::exp(1.0));
/// The exponent C * t^(s-2) * log t, i.e. log2 of cfs_bound.
double cfs_bound_log2(int s, int t, double C, double log_base = std::exp(1.0));

struct BlobSize {
    int m = 3;
    double raw = 0.0;           ///< eps * (ln n / ln ln n)^(1/5) before rounding
    bool inequality_holds = false; ///< m^5 ln m <= (eps^5 / 5) ln n
};

/// ceil(eps * (ln n / ln ln n)^(1/5)), clamped below at 3.
BlobSize m_of_n(double n, double eps);

} // namespace hf
