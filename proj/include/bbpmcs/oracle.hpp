#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bbpmcs/graph.hpp"

namespace bbpmcs {

// Outcome of a budgeted brute-force search. When the budget runs out the
// search reports that explicitly instead of an unproven number.
struct OracleResult {
    bool budget_exceeded = false;
    int size = 0;  // meaningful only when !budget_exceeded
};

inline constexpr std::int64_t kDefaultOracleBudget = 10'000'000;

// Exact size of a maximum common connected induced subgraph, by
// branch-and-bound over injective partial mappings. Budget counts
// search-tree node expansions.
OracleResult mcs_brute(const Graph& g, const Graph& h,
                       std::int64_t budget = kDefaultOracleBudget);

// Same, restricted to block-and-bridge-preserving mappings.
// pre: g, h connected and non-empty.
OracleResult bbp_mcs_brute(const Graph& g, const Graph& h,
                           std::int64_t budget = kDefaultOracleBudget);

// mapping: pairs (vertex of g, vertex of h).
// pre: mapping is a common connected induced subgraph isomorphism (checked;
// violations raise PreconditionError). True iff it is block-and-bridge
// preserving: vertices in different blocks of the common subgraph never
// share a block of g or of h, and every common-subgraph bridge is a bridge
// in both inputs.
bool is_bbp(const Graph& g, const Graph& h, const std::vector<std::pair<int, int>>& mapping);

}  // namespace bbpmcs
