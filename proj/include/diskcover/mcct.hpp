#pragma once

#include <cstdint>
#include <functional>
#include <utility>

#include "diskcover/enclosing.hpp"
#include "diskcover/tsp.hpp"

namespace diskcover {

// Closed tour through disk centers plus the disks themselves; the objective
// is tour_length + c_weight * sum of radii (linear cost throughout).
struct CoveringTour {
    std::vector<Point> tour;
    std::vector<Disk> disks;
    double tour_length = 0.0;
    double cover_cost = 0.0;
    double total_cost = 0.0;
    double c_weight = 0.0;
};

struct GridSpec {
    double spacing = 1.0;
    Point origin{0.0, 0.0};
};

namespace detail {

inline CoveringTour make_covering_tour(std::vector<Point> tour, std::vector<Disk> disks, double c) {
    CoveringTour t;
    t.c_weight = c;
    std::vector<std::size_t> order(tour.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    t.tour_length = tour_length(tour, order);
    for (const Disk& d : disks) t.cover_cost += d.radius;
    t.total_cost = t.tour_length + c * t.cover_cost;
    t.tour = std::move(tour);
    t.disks = std::move(disks);
    return t;
}

}  // namespace detail

// Broadcast from the center of the smallest enclosing disk; optimal whenever
// the per-radius weight is at most 4.
inline CoveringTour circumcenter_solution(const std::vector<Point>& clients, double c) {
    if (clients.empty()) throw std::invalid_argument("clients must be non-empty");
    if (!(c > 0.0)) throw std::invalid_argument("c must be positive");
    const Disk sed = smallest_enclosing_disk(clients, Metric::l2());
    return detail::make_covering_tour({sed.center}, {sed}, c);
}

// For a triangle containing its own circumcenter, the closed trip through the
// vertices is at least four circumradii long. Returns (perimeter, circumradius).
inline std::pair<double, double> tour_lower_bound_check(const Point& p, const Point& q, const Point& r) {
    const double d = 2.0 * (p.x * (q.y - r.y) + q.x * (r.y - p.y) + r.x * (p.y - q.y));
    double scale = 0.0;
    for (const Point& v : {p, q, r}) scale = std::max({scale, std::fabs(v.x), std::fabs(v.y)});
    scale = std::max(scale, 1.0);
    if (std::fabs(d) <= 1e-14 * scale * scale)
        throw std::invalid_argument("degenerate triangle has no circumcenter");
    const double p2 = p.x * p.x + p.y * p.y, q2 = q.x * q.x + q.y * q.y, r2 = r.x * r.x + r.y * r.y;
    const Point o{(p2 * (q.y - r.y) + q2 * (r.y - p.y) + r2 * (p.y - q.y)) / d,
                  (p2 * (r.x - q.x) + q2 * (p.x - r.x) + r2 * (q.x - p.x)) / d};

    auto cross = [](const Point& a, const Point& b, const Point& z) {
        return (b.x - a.x) * (z.y - a.y) - (b.y - a.y) * (z.x - a.x);
    };
    const double orient = cross(p, q, r);
    const double tol = 1e-9 * scale * scale;
    const bool inside = orient * cross(p, q, o) >= -tol && orient * cross(q, r, o) >= -tol &&
                        orient * cross(r, p, o) >= -tol;
    if (!inside) throw std::invalid_argument("triangle does not contain its circumcenter");

    const double perimeter = std::hypot(q.x - p.x, q.y - p.y) + std::hypot(r.x - q.x, r.y - q.y) +
                             std::hypot(p.x - r.x, p.y - r.y);
    return {perimeter, std::hypot(p.x - o.x, p.y - o.y)};
}

// Move every tour vertex (and disk center) to its nearest grid point, growing
// each radius by spacing*sqrt(2) so no client escapes its disk.
inline CoveringTour snap_to_grid(const CoveringTour& t, const GridSpec& grid) {
    if (!(grid.spacing > 0.0)) throw std::invalid_argument("grid spacing must be positive");
    auto snap = [&](const Point& q) {
        return Point{grid.origin.x + std::round((q.x - grid.origin.x) / grid.spacing) * grid.spacing,
                     grid.origin.y + std::round((q.y - grid.origin.y) / grid.spacing) * grid.spacing};
    };
    std::vector<Point> tour;
    tour.reserve(t.tour.size());
    for (const Point& q : t.tour) tour.push_back(snap(q));
    std::vector<Disk> disks;
    disks.reserve(t.disks.size());
    const double grow = grid.spacing * std::sqrt(2.0);
    for (const Disk& d : t.disks) disks.push_back(Disk{snap(d.center), d.radius + grow, d.metric});
    return detail::make_covering_tour(std::move(tour), std::move(disks), t.c_weight);
}

// Epsilon form of the grid rounding: spacing epsilon*diam(clients)/(8n). With
// that spacing the added cost stays within a (1+epsilon) factor.
inline CoveringTour snap_to_grid(const CoveringTour& t, const std::vector<Point>& clients,
                                 double epsilon) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
    double diam = 0.0;
    for (std::size_t i = 0; i < clients.size(); ++i)
        for (std::size_t j = i + 1; j < clients.size(); ++j)
            diam = std::max(diam, std::hypot(clients[j].x - clients[i].x, clients[j].y - clients[i].y));
    const double spacing = epsilon * diam / (8.0 * static_cast<double>(std::max<std::size_t>(clients.size(), 1)));
    if (!(spacing > 0.0)) return t;  // all clients coincide; nothing to round
    return snap_to_grid(t, GridSpec{spacing, {0.0, 0.0}});
}

// Heuristic: best of broadcasting from the enclosing-disk center, touring all
// clients with zero radii, and every intermediate agglomerative clustering
// (repeatedly merging the two disks whose joint enclosing disk adds the least
// total radius), each toured over its disk centers.
inline CoveringTour cluster_and_tour(const std::vector<Point>& clients, double c, double epsilon) {
    (void)epsilon;  // reserved: candidates are scale-free, no rounding needed
    if (clients.empty()) throw std::invalid_argument("clients must be non-empty");
    if (!(c > 0.0)) throw std::invalid_argument("c must be positive");

    CoveringTour best = circumcenter_solution(clients, c);
    auto offer = [&](CoveringTour cand) {
        if (cand.total_cost < best.total_cost) best = std::move(cand);
    };

    auto tour_of = [&](const std::vector<Disk>& disks) {
        std::vector<Point> centers;
        centers.reserve(disks.size());
        for (const Disk& d : disks) centers.push_back(d.center);
        const std::vector<std::size_t> order = detail::solve_tsp(centers);
        std::vector<Point> tour;
        tour.reserve(order.size());
        for (std::size_t i : order) tour.push_back(centers[i]);
        std::vector<Disk> arranged;
        arranged.reserve(order.size());
        for (std::size_t i : order) arranged.push_back(disks[i]);
        return detail::make_covering_tour(std::move(tour), std::move(arranged), c);
    };

    std::vector<Disk> disks;
    disks.reserve(clients.size());
    for (const Point& q : clients) disks.push_back(Disk{q, 0.0, Metric::l2()});
    offer(tour_of(disks));  // zero-radius tour over all clients

    auto merged_disk = [](const Disk& a, const Disk& b) {
        const double d = std::hypot(b.center.x - a.center.x, b.center.y - a.center.y);
        if (d + b.radius <= a.radius) return a;
        if (d + a.radius <= b.radius) return b;
        const double r = (d + a.radius + b.radius) / 2.0;
        const double t = (r - a.radius) / d;
        return Disk{{a.center.x + (b.center.x - a.center.x) * t,
                     a.center.y + (b.center.y - a.center.y) * t},
                    r, Metric::l2()};
    };
    while (disks.size() > 1) {
        double best_inc = std::numeric_limits<double>::infinity();
        std::size_t bi = 0, bj = 1;
        Disk bm = disks[0];
        for (std::size_t i = 0; i < disks.size(); ++i) {
            for (std::size_t j = i + 1; j < disks.size(); ++j) {
                const Disk mrg = merged_disk(disks[i], disks[j]);
                const double inc = mrg.radius - disks[i].radius - disks[j].radius;
                if (inc < best_inc) {
                    best_inc = inc;
                    bi = i;
                    bj = j;
                    bm = mrg;
                }
            }
        }
        disks[bi] = bm;
        disks.erase(disks.begin() + static_cast<std::ptrdiff_t>(bj));
        offer(tour_of(disks));
    }
    return best;
}

// Exhaustive optimum over a discretized space: disk centers on grid points
// near the clients, radii from the center-client distance sets, disks capped
// at max_disks, exact tour over the chosen centers. Branch and bound on the
// lowest-index uncovered client.
inline CoveringTour exact_small_mcct(const std::vector<Point>& clients, double c,
                                     const GridSpec& grid, std::size_t max_disks) {
    if (clients.empty()) throw std::invalid_argument("clients must be non-empty");
    if (!(c > 0.0)) throw std::invalid_argument("c must be positive");
    if (!(grid.spacing > 0.0)) throw std::invalid_argument("grid spacing must be positive");
    if (max_disks < 1 || max_disks > 5) throw SizeLimitError("exact_small_mcct allows at most 5 disks");
    const std::size_t n = clients.size();
    if (n > 64) throw SizeLimitError("exact_small_mcct limited to 64 clients");

    double xmin = clients[0].x, xmax = xmin, ymin = clients[0].y, ymax = ymin;
    for (const Point& q : clients) {
        xmin = std::min(xmin, q.x);
        xmax = std::max(xmax, q.x);
        ymin = std::min(ymin, q.y);
        ymax = std::max(ymax, q.y);
    }
    const long ix0 = static_cast<long>(std::floor((xmin - grid.origin.x) / grid.spacing));
    const long ix1 = static_cast<long>(std::ceil((xmax - grid.origin.x) / grid.spacing));
    const long iy0 = static_cast<long>(std::floor((ymin - grid.origin.y) / grid.spacing));
    const long iy1 = static_cast<long>(std::ceil((ymax - grid.origin.y) / grid.spacing));
    std::vector<Point> centers;
    for (long ix = ix0; ix <= ix1; ++ix)
        for (long iy = iy0; iy <= iy1; ++iy)
            centers.push_back({grid.origin.x + static_cast<double>(ix) * grid.spacing,
                               grid.origin.y + static_cast<double>(iy) * grid.spacing});
    if (centers.size() > 40) throw SizeLimitError("exact_small_mcct grid exceeds 40 candidate centers");

    // Radius options per center with the client mask each one covers.
    std::vector<std::vector<double>> radii(centers.size());
    std::vector<std::vector<std::uint64_t>> masks(centers.size());
    for (std::size_t g = 0; g < centers.size(); ++g) {
        std::vector<double> d(n);
        for (std::size_t i = 0; i < n; ++i)
            d[i] = std::hypot(clients[i].x - centers[g].x, clients[i].y - centers[g].y);
        std::vector<double> opts = d;
        std::sort(opts.begin(), opts.end());
        opts.erase(std::unique(opts.begin(), opts.end()), opts.end());
        radii[g] = opts;
        masks[g].resize(opts.size());
        for (std::size_t t = 0; t < opts.size(); ++t) {
            std::uint64_t mk = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (d[i] <= opts[t] + 1e-12) mk |= std::uint64_t{1} << i;
            masks[g][t] = mk;
        }
    }
    const std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);

    // Feasible incumbent: best single disk covering everything.
    double best_total = std::numeric_limits<double>::infinity();
    std::vector<std::pair<std::size_t, double>> best_choice;
    for (std::size_t g = 0; g < centers.size(); ++g) {
        const double r = radii[g].back();
        if (c * r < best_total) {
            best_total = c * r;
            best_choice = {{g, r}};
        }
    }

    std::vector<std::pair<std::size_t, double>> chosen;
    std::vector<Point> used;
    auto exact_tour = [&](const std::vector<Point>& pts) {
        const std::vector<std::size_t> order = detail::solve_tsp(pts);
        return detail::tour_length(pts, order);
    };
    std::function<void(std::uint64_t, double)> rec = [&](std::uint64_t covered, double sum_r) {
        const double base = exact_tour(used);
        if (base + c * sum_r >= best_total - 1e-12) return;
        if (covered == full) {
            best_total = base + c * sum_r;
            best_choice = chosen;
            return;
        }
        if (chosen.size() == max_disks) return;
        std::size_t q = 0;
        while (covered & (std::uint64_t{1} << q)) ++q;
        for (std::size_t g = 0; g < centers.size(); ++g) {
            bool taken = false;
            for (const auto& [cg, cr] : chosen)
                if (cg == g) taken = true;
            if (taken) continue;
            const double need = std::hypot(clients[q].x - centers[g].x, clients[q].y - centers[g].y);
            const auto it = std::lower_bound(radii[g].begin(), radii[g].end(), need - 1e-12);
            for (std::size_t t = static_cast<std::size_t>(it - radii[g].begin()); t < radii[g].size(); ++t) {
                const double r = radii[g][t];
                if (base + c * (sum_r + r) >= best_total - 1e-12) break;
                chosen.push_back({g, r});
                used.push_back(centers[g]);
                rec(covered | masks[g][t], sum_r + r);
                used.pop_back();
                chosen.pop_back();
            }
        }
    };
    rec(0, 0.0);

    std::vector<Point> pts;
    std::vector<Disk> disks;
    for (const auto& [g, r] : best_choice) {
        pts.push_back(centers[g]);
        disks.push_back(Disk{centers[g], r, Metric::l2()});
    }
    const std::vector<std::size_t> order = detail::solve_tsp(pts);
    std::vector<Point> tour;
    std::vector<Disk> arranged;
    for (std::size_t i : order) {
        tour.push_back(pts[i]);
        arranged.push_back(disks[i]);
    }
    return detail::make_covering_tour(std::move(tour), std::move(arranged), c);
}

}  // namespace diskcover
