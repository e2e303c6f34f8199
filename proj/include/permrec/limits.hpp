#pragma once

#include <cstddef>

namespace permrec {

/// Size budgets for searches over factorial-size vertex sets.
struct SearchLimits {
    /// Visited sets are dense rank-indexed bitmaps up to this degree and
    /// hashed sets of packed codes above it.
    int dense_max_degree = 8;
    /// Largest ball (or bidirectional search frontier total) ever materialized.
    std::size_t max_ball_size = 20'000'000;
    /// Largest degree for which whole-graph traversals are allowed.
    int max_whole_graph_degree = 8;
};

} // namespace permrec
