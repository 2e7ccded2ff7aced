#ifndef BGRACE_MATCHING_HPP
#define BGRACE_MATCHING_HPP

#include <algorithm>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "bgrace/numeric.hpp"

namespace bgrace {

// Minimum-cost perfect matching between two equal-size point multisets
// (Hungarian algorithm with potentials, O(n^3)), returning for each a[i] the
// index of its partner in b. Cost is Euclidean distance.
inline std::vector<int> optimal_pairing(std::span<const cplx> a, std::span<const cplx> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("optimal_pairing: size mismatch");
    const int n = static_cast<int>(a.size());
    if (n == 0) return {};

    const double inf = std::numeric_limits<double>::infinity();
    // 1-indexed potentials; way[j] remembers the augmenting path.
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<int> match(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        match[0] = i;
        int j0 = 0;
        std::vector<double> minv(n + 1, inf);
        std::vector<bool> used(n + 1, false);
        do {
            used[j0] = true;
            const int i0 = match[j0];
            double delta = inf;
            int j1 = 0;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = std::abs(a[i0 - 1] - b[j - 1]) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[match[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (match[j0] != 0);
        do {
            const int j1 = way[j0];
            match[j0] = match[j1];
            j0 = j1;
        } while (j0);
    }

    std::vector<int> pair(n, -1);
    for (int j = 1; j <= n; ++j)
        if (match[j] != 0) pair[match[j] - 1] = j - 1;
    return pair;
}

// Largest matched distance under the minimum-cost pairing. The usual "do
// these multisets agree within tol" yardstick.
inline double pairing_max_distance(std::span<const cplx> a, std::span<const cplx> b) {
    const std::vector<int> pair = optimal_pairing(a, b);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, std::abs(a[i] - b[pair[i]]));
    return worst;
}

// Distance between two unordered pairs: the better of the two pairings,
// measured by the larger leg.
inline double unordered_pair_distance(cplx a1, cplx a2, cplx b1, cplx b2) {
    const double d1 = std::max(std::abs(a1 - b1), std::abs(a2 - b2));
    const double d2 = std::max(std::abs(a1 - b2), std::abs(a2 - b1));
    return std::min(d1, d2);
}

}  // namespace bgrace

#endif  // BGRACE_MATCHING_HPP
