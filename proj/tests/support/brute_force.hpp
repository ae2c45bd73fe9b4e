#pragma once

// Test-only reference routines. Each one recomputes a quantity from first
// principles without going through the planner's own code path.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "kp/grid.hpp"

namespace kp::testing {

using Cells = std::set<std::pair<int, int>>;

inline Cells cells_of(const BlockSet& b) {
    Cells out;
    for (GridCoord v : b.occupied())
        out.insert({v.i, v.j});
    return out;
}

/// Walks the ray cell by cell with plain integer arithmetic.
inline bool ray_clear_by_walk(const Cells& occ, int rows, int cols, int i, int j, int di, int dj) {
    for (int t = 1;; ++t) {
        const int a = i + t * di;
        const int b = j + t * dj;
        if (a < 0 || b < 0 || a >= rows || b >= cols)
            return true;
        if (occ.contains({a, b}))
            return false;
    }
}

/// Pick test restated from the clearance rule: two opposite sides free.
inline bool pickable_by_clearance(const Cells& occ, int i, int j) {
    const bool up = occ.contains({i - 1, j});
    const bool down = occ.contains({i + 1, j});
    const bool left = occ.contains({i, j - 1});
    const bool right = occ.contains({i, j + 1});
    const int deg = up + down + left + right;
    if (deg <= 1)
        return true;
    if (deg == 2)
        return (!left && !right) || (!up && !down);
    return false;
}

inline int count_faces(const Cells& occ) {
    int n = 0;
    for (auto [i, j] : occ)
        if (occ.contains({i + 1, j}) && occ.contains({i, j + 1}) && occ.contains({i + 1, j + 1}))
            ++n;
    return n;
}

/// Cleanup that removes a uniformly random pickable cell at each step.
inline Cells clean_random_order(Cells occ, std::mt19937_64& rng) {
    for (;;) {
        std::vector<std::pair<int, int>> pickable;
        for (auto [i, j] : occ)
            if (pickable_by_clearance(occ, i, j))
                pickable.push_back({i, j});
        if (pickable.empty())
            return occ;
        occ.erase(pickable[rng() % pickable.size()]);
    }
}

/// Maximum matching size by exhaustive branching on the lowest vertex.
inline int brute_max_matching(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [a, b] : edges) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::function<int(int)> go = [&](int v) -> int {
        while (v < n && used[static_cast<std::size_t>(v)])
            ++v;
        if (v >= n)
            return 0;
        used[static_cast<std::size_t>(v)] = true;
        int best = go(v + 1);
        for (int u : adj[static_cast<std::size_t>(v)]) {
            if (used[static_cast<std::size_t>(u)])
                continue;
            used[static_cast<std::size_t>(u)] = true;
            best = std::max(best, 1 + go(v + 1));
            used[static_cast<std::size_t>(u)] = false;
        }
        used[static_cast<std::size_t>(v)] = false;
        return best;
    };
    return go(0);
}

/// Minimum exact cover of a face set by singletons and grid-adjacent pairs,
/// by exhaustive branching on the smallest uncovered face.
inline int brute_min_exact_cover(const std::set<std::pair<int, int>>& faces) {
    std::function<int(std::set<std::pair<int, int>>)> go = [&](std::set<std::pair<int, int>> rest) -> int {
        if (rest.empty())
            return 0;
        const auto f = *rest.begin();
        rest.erase(rest.begin());
        int best = 1 + go(rest);
        for (auto g : {std::pair{f.first, f.second + 1}, std::pair{f.first + 1, f.second}}) {
            if (rest.contains(g)) {
                auto next = rest;
                next.erase(g);
                best = std::min(best, 1 + go(next));
            }
        }
        return best;
    };
    return go(faces);
}

/// Minimum knocks with picks and knocks as separate, freely ordered moves
/// (no eager cleanup). Hull must have at most 32 cells.
inline int non_eager_min_knocks(const BlockSet& b) {
    const int rows = b.hull().rows;
    const int cols = b.hull().cols;
    std::uint32_t start = 0;
    for (GridCoord v : b.occupied())
        start |= 1U << (v.i * cols + v.j);
    std::map<std::uint32_t, int> memo;
    constexpr int kInf = std::numeric_limits<int>::max() / 2;
    std::function<int(std::uint32_t)> go = [&](std::uint32_t s) -> int {
        if (s == 0)
            return 0;
        if (auto it = memo.find(s); it != memo.end())
            return it->second;
        Cells occ;
        for (int k = 0; k < rows * cols; ++k)
            if (s >> k & 1U)
                occ.insert({k / cols, k % cols});
        int best = kInf;
        for (auto [i, j] : occ) {
            const std::uint32_t next = s & ~(1U << (i * cols + j));
            if (pickable_by_clearance(occ, i, j))
                best = std::min(best, go(next));
            const bool knockable = ray_clear_by_walk(occ, rows, cols, i, j, -1, 0) ||
                                   ray_clear_by_walk(occ, rows, cols, i, j, 1, 0) ||
                                   ray_clear_by_walk(occ, rows, cols, i, j, 0, -1) ||
                                   ray_clear_by_walk(occ, rows, cols, i, j, 0, 1);
            if (knockable)
                best = std::min(best, 1 + go(next));
        }
        memo[s] = best;
        return best;
    };
    return go(start);
}

/// Each hull cell kept independently with probability `density`.
inline BlockSet random_instance(std::mt19937_64& rng, GridHull hull, double density) {
    std::bernoulli_distribution keep(density);
    BlockSet b(hull);
    for (int i = 0; i < hull.rows; ++i)
        for (int j = 0; j < hull.cols; ++j)
            if (keep(rng))
                b.insert({i, j});
    return b;
}

inline GridHull random_hull(std::mt19937_64& rng, int max_rows, int max_cols) {
    return GridHull(1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_rows)),
                    1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_cols)));
}

}  // namespace kp::testing
