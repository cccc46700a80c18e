#pragma once

#include <cstdint>

#include "diskcover/core.hpp"

namespace diskcover {
namespace detail {

inline double tour_length(const std::vector<Point>& pts, const std::vector<std::size_t>& order) {
    if (order.size() < 2) return 0.0;
    double len = 0.0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const Point& a = pts[order[i]];
        const Point& b = pts[order[(i + 1) % order.size()]];
        len += std::hypot(b.x - a.x, b.y - a.y);
    }
    return len;
}

// Exact closed tour by bitmask DP over subsets anchored at city 0.
inline std::vector<std::size_t> tsp_held_karp(const std::vector<Point>& pts) {
    const std::size_t n = pts.size();
    std::vector<double> d(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            d[i * n + j] = std::hypot(pts[i].x - pts[j].x, pts[i].y - pts[j].y);

    const std::uint32_t full = (1u << n) - 1;
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dp((full + 1) * n, inf);
    std::vector<std::uint8_t> par((full + 1) * n, 0);
    dp[(1u << 0) * n + 0] = 0.0;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if (!(mask & 1u)) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (!(mask & (1u << j))) continue;
            const double cur = dp[mask * n + j];
            if (cur == inf) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (mask & (1u << k)) continue;
                const std::uint32_t next = mask | (1u << k);
                if (cur + d[j * n + k] < dp[next * n + k]) {
                    dp[next * n + k] = cur + d[j * n + k];
                    par[next * n + k] = static_cast<std::uint8_t>(j);
                }
            }
        }
    }
    std::size_t end = 0;
    double best = inf;
    for (std::size_t j = 0; j < n; ++j) {
        const double v = dp[full * n + j] + d[j * n + 0];
        if (v < best) {
            best = v;
            end = j;
        }
    }
    std::vector<std::size_t> order;
    std::uint32_t mask = full;
    for (std::size_t j = end; order.size() < n;) {
        order.push_back(j);
        const std::size_t p = par[mask * n + j];
        mask &= ~(1u << j);
        j = p;
    }
    std::reverse(order.begin(), order.end());
    return order;  // starts at 0
}

inline std::vector<std::size_t> tsp_nn_two_opt(const std::vector<Point>& pts) {
    const std::size_t n = pts.size();
    std::vector<std::size_t> order;
    order.reserve(n);
    std::vector<bool> used(n, false);
    std::size_t cur = 0;
    order.push_back(0);
    used[0] = true;
    for (std::size_t step = 1; step < n; ++step) {
        std::size_t pick = n;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j]) continue;
            const double v = std::hypot(pts[j].x - pts[cur].x, pts[j].y - pts[cur].y);
            if (v < best) {
                best = v;
                pick = j;
            }
        }
        order.push_back(pick);
        used[pick] = true;
        cur = pick;
    }
    auto dist = [&](std::size_t a, std::size_t b) {
        return std::hypot(pts[order[a]].x - pts[order[b]].x, pts[order[a]].y - pts[order[b]].y);
    };
    bool improved = true;
    while (improved) {
        improved = false;
        for (std::size_t i = 0; i + 1 < n && !improved; ++i) {
            for (std::size_t j = i + 2; j < n && !improved; ++j) {
                const std::size_t in = i + 1, jn = (j + 1) % n;
                if (jn == i) continue;
                const double before = dist(i, in) + dist(j, jn);
                const double after = dist(i, j) + dist(in, jn);
                if (after < before - 1e-12) {
                    std::reverse(order.begin() + static_cast<std::ptrdiff_t>(in),
                                 order.begin() + static_cast<std::ptrdiff_t>(j) + 1);
                    improved = true;
                }
            }
        }
    }
    return order;
}

// Closed tour over the points: exact for n <= 12, otherwise a deterministic
// nearest-neighbor start improved by first-improvement 2-opt.
inline std::vector<std::size_t> solve_tsp(const std::vector<Point>& pts) {
    if (pts.size() <= 1) return std::vector<std::size_t>(pts.size(), 0);
    if (pts.size() <= 3) {
        std::vector<std::size_t> order(pts.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        return order;
    }
    if (pts.size() <= 12) return tsp_held_karp(pts);
    return tsp_nn_two_opt(pts);
}

}  // namespace detail
}  // namespace diskcover
