#pragma once

#include <cstdint>
#include <vector>

#include "bbpmcs/weight.hpp"

namespace bbpmcs {

// Complete weight table of a bipartite graph; -inf entries mark forbidden
// pairs.
struct BipartiteWeights {
    int left = 0, right = 0;
    std::vector<Weight> w;  // row-major left x right

    BipartiteWeights(int l, int r) : left(l), right(r), w(static_cast<size_t>(l) * r) {}
    Weight& at(int i, int j) { return w[static_cast<size_t>(i) * right + j]; }
    Weight at(int i, int j) const { return w[static_cast<size_t>(i) * right + j]; }
};

// Maximum total weight over all matchings (not necessarily perfect or of
// maximum cardinality) avoiding -inf edges. The empty matching is always
// feasible, so the result is >= 0. Hungarian method, O(max(l,r)^3).
std::int64_t max_weight_matching(const BipartiteWeights& bw);

// Same contract by exhaustive enumeration. pre: both sides <= 8.
std::int64_t enumerate_matchings_oracle(const BipartiteWeights& bw);

}  // namespace bbpmcs
