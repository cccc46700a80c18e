#pragma once

#include <cstdint>
#include <functional>
#include <tuple>

#include "diskcover/pinned.hpp"

namespace diskcover {

// Exact cover by axis-centered disks via recursion on the leftmost uncovered
// client over all pinned circles enclosing it. Reference oracle; n <= 12.
inline Cover oracle_line_exact(const std::vector<Point>& clients_in, const Metric& m,
                               const CostModel& f) {
    const std::vector<Point> clients = normalize_clients(clients_in);
    const std::size_t n = clients.size();
    if (n > 12) throw SizeLimitError("oracle_line_exact limited to 12 clients");
    Cover cov;
    if (n == 0) return cov;

    const std::vector<Disk> pins = pinned_circles(clients, m);
    std::vector<std::uint32_t> covers(pins.size(), 0);
    for (std::size_t p = 0; p < pins.size(); ++p)
        for (std::size_t i = 0; i < n; ++i)
            if (disk_contains(pins[p], clients[i])) covers[p] |= 1u << i;

    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> memo(full + 1, -1.0);
    std::vector<std::int32_t> choice(full + 1, -1);
    std::function<double(std::uint32_t)> rec = [&](std::uint32_t mask) -> double {
        if (mask == full) return 0.0;
        if (memo[mask] >= 0.0) return memo[mask];
        std::uint32_t q = 0;
        while (mask & (1u << q)) ++q;
        double best = inf;
        for (std::size_t p = 0; p < pins.size(); ++p) {
            if (!(covers[p] & (1u << q))) continue;
            const double v = f(pins[p].radius) + rec(mask | covers[p]);
            if (v < best) { best = v; choice[mask] = static_cast<std::int32_t>(p); }
        }
        memo[mask] = best;
        return best;
    };
    cov.cost = rec(0);
    for (std::uint32_t mask = 0; mask != full;) {
        const std::int32_t p = choice[mask];
        cov.disks.push_back(pins[p]);
        mask |= covers[p];
    }
    return cov;
}

// Exact minimum sum of radii (linear cost). An optimal cover exists whose disks
// are pinned, pairwise disjoint, and have no client above them, so each disk
// covers a contiguous x-run of clients and a prefix DP applies.
inline Cover dp_linear(const std::vector<Point>& clients_in, const Metric& m) {
    const std::vector<Point> clients = normalize_clients(clients_in);
    const std::size_t n = clients.size();
    Cover cov;
    if (n == 0) return cov;

    const std::vector<Disk> pins = pinned_circles(clients, m);
    struct Run { std::size_t lo; double radius; std::size_t pin; };
    std::vector<std::vector<Run>> ending_at(n);
    for (std::size_t p = 0; p < pins.size(); ++p) {
        if (!points_above_circle_empty(clients, pins[p])) continue;
        std::size_t lo = n, hi = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (!disk_contains(pins[p], clients[i])) continue;
            if (lo == n) lo = i;
            hi = i;
        }
        if (lo == n) continue;
        ending_at[hi].push_back(Run{lo, pins[p].radius, p});
    }

    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> best(n + 1, inf);
    std::vector<std::pair<std::size_t, std::size_t>> from(n + 1);  // (lo, pin)
    best[0] = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (const Run& run : ending_at[i]) {
            if (best[run.lo] + run.radius < best[i + 1]) {
                best[i + 1] = best[run.lo] + run.radius;
                from[i + 1] = {run.lo, run.pin};
            }
        }
    }
    cov.cost = best[n];
    for (std::size_t i = n; i > 0; i = from[i].first) cov.disks.push_back(pins[from[i].second]);
    std::reverse(cov.disks.begin(), cov.disks.end());
    return cov;
}

// Exact cover for any non-decreasing power cost. An optimal cover exists in
// which no disk contains another's apex; ordering disks by apex the strip
// between the apex lines of consecutive chosen disks must be owned by one of
// them, which region_b_empty checks. Degenerate end disks of radius zero act
// as chain terminals. Handles squares (Linf apex = upper right corner) too.
inline Cover dp_superlinear(const std::vector<Point>& clients_in, const Metric& m,
                            const CostModel& f) {
    const std::vector<Point> clients = normalize_clients(clients_in);
    const std::size_t n = clients.size();
    Cover cov;
    if (n == 0) return cov;

    std::vector<Disk> pins = pinned_circles(clients, m);
    std::sort(pins.begin(), pins.end(), [](const Disk& a, const Disk& b) {
        return apex_x(a) < apex_x(b) || (apex_x(a) == apex_x(b) && a.radius < b.radius);
    });
    double xmin = clients.front().x, xmax = clients.back().x, ymax = 0.0;
    for (const Point& q : clients) ymax = std::max(ymax, q.y);
    const double pad = (xmax - xmin) + ymax + 1.0;
    std::vector<Disk> node;
    node.push_back(Disk{{xmin - pad, 0.0}, 0.0, m});
    node.insert(node.end(), pins.begin(), pins.end());
    node.push_back(Disk{{xmax + pad, 0.0}, 0.0, m});
    const std::size_t P = node.size();

    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> cost(P, inf);
    std::vector<std::size_t> parent(P, P);
    cost[0] = 0.0;
    for (std::size_t j = 1; j < P; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (cost[i] == inf) continue;
            const Disk& A = node[i];
            const Disk& C = node[j];
            const double edge = cost[i] + f(A.radius);
            if (edge >= cost[j]) continue;
            // Mutual apex exclusion orders real pins; sentinels only delimit the
            // client-free regions and may sit inside a wide first or last disk.
            if (i > 0 && j + 1 < P) {
                const Point apex_a = disk_apex(A), apex_c = disk_apex(C);
                if (distance(C.center, apex_a, m) < C.radius - 1e-9) continue;
                if (distance(A.center, apex_c, m) < A.radius - 1e-9) continue;
            }
            if (!region_b_empty(clients, A, C)) continue;
            cost[j] = edge;
            parent[j] = i;
        }
    }
    cov.cost = cost[P - 1];
    for (std::size_t j = parent[P - 1]; j != 0 && j != P; j = parent[j]) cov.disks.push_back(node[j]);
    std::reverse(cov.disks.begin(), cov.disks.end());
    return cov;
}

// Exact cover by axis-centered squares under any power cost.
inline Cover dp_squares(const std::vector<Point>& clients, const CostModel& f) {
    return dp_superlinear(clients, Metric::linf(), f);
}

// Square greedy: process clients by decreasing distance from the line (ties:
// smaller x first); each still-uncovered client gets the square of its own
// height centered at its projection.
inline Cover sg_cover(const std::vector<Point>& clients_in, const CostModel& f) {
    std::vector<Point> pts;
    pts.reserve(clients_in.size());
    for (const Point& q : clients_in) pts.push_back({q.x, std::fabs(q.y)});
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
        return a.y > b.y || (a.y == b.y && a.x < b.x);
    });
    Cover cov;
    for (const Point& q : pts) {
        bool hit = false;
        for (const Disk& d : cov.disks)
            if (disk_contains(d, q)) { hit = true; break; }
        if (!hit) cov.disks.push_back(Disk{{q.x, 0.0}, q.y, Metric::linf()});
    }
    cov.cost = cover_cost(cov.disks, f);
    return cov;
}

// Square greedy with growth: as sg_cover, but when extending an existing
// square (holding its far vertical edge fixed) costs less edge length than the
// client's own square would add, grow instead of placing. Two candidates with
// equal extension: the left square grows; within one square, rightward growth
// wins ties.
inline Cover sgg_cover(const std::vector<Point>& clients_in, const CostModel& f) {
    std::vector<Point> pts;
    pts.reserve(clients_in.size());
    for (const Point& q : clients_in) pts.push_back({q.x, std::fabs(q.y)});
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
        return a.y > b.y || (a.y == b.y && a.x < b.x);
    });

    std::vector<std::pair<double, double>> sq;  // [left, right] on the axis
    auto contains = [&](const std::pair<double, double>& s, const Point& q) {
        const double half = (s.second - s.first) / 2.0;
        return q.x >= s.first - 1e-9 && q.x <= s.second + 1e-9 && q.y <= half + 1e-9;
    };
    for (const Point& q : pts) {
        bool hit = false;
        for (const auto& s : sq)
            if (contains(s, q)) { hit = true; break; }
        if (hit) continue;
        double best_e = std::numeric_limits<double>::infinity();
        std::size_t best_j = 0;
        int best_dir = 0;  // +1 grow right edge, -1 grow left edge
        auto offer = [&](double e, std::size_t j, int dir) {
            // Ties: leftmost square first, then rightward growth.
            const auto key = std::make_tuple(e, sq[j].first, dir < 0 ? 1 : 0);
            const auto cur = std::make_tuple(best_e, best_dir == 0 ? 0.0 : sq[best_j].first,
                                             best_dir < 0 ? 1 : 0);
            if (best_dir == 0 || key < cur) { best_e = e; best_j = j; best_dir = dir; }
        };
        for (std::size_t j = 0; j < sq.size(); ++j) {
            const auto [l, r] = sq[j];
            if (q.x >= l) offer(std::max(q.x, l + 2.0 * q.y) - r, j, +1);
            if (q.x <= r) offer(l - std::min(q.x, r - 2.0 * q.y), j, -1);
        }
        if (best_e < 2.0 * q.y) {
            auto& [l, r] = sq[best_j];
            if (best_dir > 0) r = std::max(q.x, l + 2.0 * q.y);
            else l = std::min(q.x, r - 2.0 * q.y);
        } else {
            sq.push_back({q.x - q.y, q.x + q.y});
        }
    }

    Cover cov;
    for (const auto& [l, r] : sq)
        cov.disks.push_back(Disk{{(l + r) / 2.0, 0.0}, (r - l) / 2.0, Metric::linf()});
    cov.cost = cover_cost(cov.disks, f);
    return cov;
}

}  // namespace diskcover
