#pragma once

#include "diskcover/core.hpp"

namespace diskcover {
namespace detail {

inline Disk disk_two(const Point& a, const Point& b) {
    Point c{(a.x + b.x) / 2.0, (a.y + b.y) / 2.0};
    return Disk{c, std::hypot(a.x - b.x, a.y - b.y) / 2.0, Metric::l2()};
}

inline Disk disk_three(const Point& a, const Point& b, const Point& c) {
    const double bx = b.x - a.x, by = b.y - a.y;
    const double cx = c.x - a.x, cy = c.y - a.y;
    const double d = 2.0 * (bx * cy - by * cx);
    const double scale = std::fabs(bx) + std::fabs(by) + std::fabs(cx) + std::fabs(cy);
    if (std::fabs(d) <= 1e-14 * scale * scale) {
        Disk best = disk_two(a, b);
        for (const Disk& alt : {disk_two(a, c), disk_two(b, c)})
            if (alt.radius > best.radius) best = alt;
        return best;
    }
    const double b2 = bx * bx + by * by, c2 = cx * cx + cy * cy;
    Point ctr{a.x + (cy * b2 - by * c2) / d, a.y + (bx * c2 - cx * b2) / d};
    return Disk{ctr, std::hypot(ctr.x - a.x, ctr.y - a.y), Metric::l2()};
}

inline bool in_disk(const Disk& d, const Point& q) {
    const double dx = q.x - d.center.x, dy = q.y - d.center.y;
    return dx * dx + dy * dy <= d.radius * d.radius * (1.0 + 1e-12) + 1e-24;
}

// Welzl's randomized incremental construction with a deterministic shuffle.
inline Disk welzl(std::vector<Point> pts) {
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    auto next = [&state]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (std::size_t i = pts.size(); i > 1; --i) std::swap(pts[i - 1], pts[next() % i]);

    Disk d{pts[0], 0.0, Metric::l2()};
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (in_disk(d, pts[i])) continue;
        d = Disk{pts[i], 0.0, Metric::l2()};
        for (std::size_t j = 0; j < i; ++j) {
            if (in_disk(d, pts[j])) continue;
            d = disk_two(pts[i], pts[j]);
            for (std::size_t k = 0; k < j; ++k) {
                if (in_disk(d, pts[k])) continue;
                d = disk_three(pts[i], pts[j], pts[k]);
            }
        }
    }
    return d;
}

// Convex pattern search for the center minimizing the largest Lp distance.
inline Disk enclosing_lp(const std::vector<Point>& pts, const Metric& m) {
    auto worst = [&](const Point& c) {
        double r = 0.0;
        for (const Point& q : pts) r = std::max(r, distance(c, q, m));
        return r;
    };
    double xmin = pts[0].x, xmax = pts[0].x, ymin = pts[0].y, ymax = pts[0].y;
    Point c{0.0, 0.0};
    for (const Point& q : pts) {
        c.x += q.x / pts.size();
        c.y += q.y / pts.size();
        xmin = std::min(xmin, q.x); xmax = std::max(xmax, q.x);
        ymin = std::min(ymin, q.y); ymax = std::max(ymax, q.y);
    }
    double span = std::max(xmax - xmin, ymax - ymin) / 2.0 + 1e-12;
    double best = worst(c);
    while (span > 1e-11 * (1.0 + std::fabs(xmax) + std::fabs(ymax))) {
        for (int dx = -2; dx <= 2; ++dx) {
            for (int dy = -2; dy <= 2; ++dy) {
                Point t{c.x + span * dx / 2.0, c.y + span * dy / 2.0};
                const double v = worst(t);
                if (v < best) { best = v; c = t; }
            }
        }
        span *= 0.55;
    }
    return Disk{c, best, m};
}

}  // namespace detail

// Smallest disk of the metric containing every point. Exact for p in {1, 2, inf},
// numeric convex minimization otherwise. Center choice is canonical (bounding-box
// midpoint) where the optimum is not unique.
inline Disk smallest_enclosing_disk(const std::vector<Point>& pts, const Metric& m) {
    if (pts.empty()) throw std::invalid_argument("smallest_enclosing_disk of empty set");
    if (pts.size() == 1) return Disk{pts[0], 0.0, m};
    if (m.kind == Metric::Kind::L2) {
        Disk d = detail::welzl(pts);
        double r = 0.0;
        for (const Point& q : pts) r = std::max(r, distance(d.center, q, m));
        d.radius = r;
        return d;
    }
    if (m.kind == Metric::Kind::LINF || m.kind == Metric::Kind::L1) {
        const bool diag = m.kind == Metric::Kind::L1;
        double umin = 0, umax = 0, vmin = 0, vmax = 0;
        bool first = true;
        for (const Point& q : pts) {
            const double u = diag ? q.x + q.y : q.x;
            const double v = diag ? q.x - q.y : q.y;
            if (first) { umin = umax = u; vmin = vmax = v; first = false; }
            umin = std::min(umin, u); umax = std::max(umax, u);
            vmin = std::min(vmin, v); vmax = std::max(vmax, v);
        }
        const double cu = (umin + umax) / 2.0, cv = (vmin + vmax) / 2.0;
        const double r = std::max(umax - umin, vmax - vmin) / 2.0;
        if (diag) return Disk{{(cu + cv) / 2.0, (cu - cv) / 2.0}, r, m};
        return Disk{{cu, cv}, r, m};
    }
    return detail::enclosing_lp(pts, m);
}

}  // namespace diskcover
