#include "bbpmcs/matching.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>

namespace bbpmcs {

std::int64_t max_weight_matching(const BipartiteWeights& bw) {
    // All useful weights are >= 0, so a forbidden or padding pair behaves
    // exactly like an unmatched one when priced at 0: solve the square
    // assignment problem on max(w, 0) and read off the total.
    int n = std::max(bw.left, bw.right);
    if (n == 0) return 0;
    auto cost = [&](int i, int j) -> std::int64_t {  // minimization
        if (i >= bw.left || j >= bw.right) return 0;
        Weight x = bw.at(i, j);
        if (x.is_neg_inf() || x.value() <= 0) return 0;
        return -x.value();
    };

    // Standard potentials-based Hungarian algorithm on a 1-indexed square.
    const std::int64_t INF = std::numeric_limits<std::int64_t>::max() / 4;
    std::vector<std::int64_t> u(n + 1, 0), v(n + 1, 0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<std::int64_t> minv(n + 1, INF);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            int i0 = p[j0], j1 = -1;
            std::int64_t delta = INF;
            for (int j = 1; j <= n; ++j)
                if (!used[j]) {
                    std::int64_t cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                    if (cur < minv[j]) {
                        minv[j] = cur;
                        way[j] = j0;
                    }
                    if (minv[j] < delta) {
                        delta = minv[j];
                        j1 = j;
                    }
                }
            for (int j = 0; j <= n; ++j)
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }
    std::int64_t total = 0;
    for (int j = 1; j <= n; ++j) total += cost(p[j] - 1, j - 1);
    return std::max<std::int64_t>(0, -total);
}

std::int64_t enumerate_matchings_oracle(const BipartiteWeights& bw) {
    if (bw.left > 8 || bw.right > 8)
        throw std::invalid_argument("enumerate_matchings_oracle: sides must be <= 8");
    std::int64_t best = 0;
    // Recurse over left rows; each is unmatched or paired with a free column.
    std::vector<char> used(bw.right, 0);
    std::int64_t cur = 0;
    auto rec = [&](auto&& self, int i) -> void {
        if (i == bw.left) {
            best = std::max(best, cur);
            return;
        }
        self(self, i + 1);  // leave row i unmatched
        for (int j = 0; j < bw.right; ++j) {
            Weight x = bw.at(i, j);
            if (used[j] || x.is_neg_inf()) continue;
            used[j] = 1;
            cur += x.value();
            self(self, i + 1);
            cur -= x.value();
            used[j] = 0;
        }
    };
    rec(rec, 0);
    return best;
}

}  // namespace bbpmcs
