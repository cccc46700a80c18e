#pragma once

#include "diskcover/core.hpp"

namespace diskcover {

// Reflect clients to the upper half-plane, sort by x, and for clients sharing an
// x-coordinate keep only the highest one (any axis-centered disk enclosing it
// encloses the rest of the column).
inline std::vector<Point> normalize_clients(std::vector<Point> pts) {
    for (Point& q : pts) q.y = std::fabs(q.y);
    std::stable_sort(pts.begin(), pts.end(),
                     [](const Point& a, const Point& b) { return a.x < b.x; });
    std::vector<Point> out;
    for (const Point& q : pts) {
        if (!out.empty() && out.back().x == q.x) {
            if (q.y > out.back().y) out.back() = q;
        } else {
            out.push_back(q);
        }
    }
    return out;
}

namespace detail {

// Leftmost smallest axis-centered Linf square with both points of a pair on its
// boundary. Candidates: both on opposite vertical edges, left point on the top
// edge, or right point on the top edge.
inline Disk pinned_pair_square(const Point& l, const Point& q, const Metric& m) {
    const double span = q.x - l.x;
    double best_r = std::numeric_limits<double>::infinity();
    double best_c = 0.0;
    auto consider = [&](double c, double r, bool valid) {
        if (!valid) return;
        if (r < best_r || (r == best_r && c < best_c)) { best_r = r; best_c = c; }
    };
    consider((l.x + q.x) / 2.0, span / 2.0, l.y <= span / 2.0 && q.y <= span / 2.0);
    consider(q.x - l.y, l.y, q.y <= l.y && span <= 2.0 * l.y);
    consider(l.x + q.y, q.y, l.y <= q.y && span <= 2.0 * q.y);
    return Disk{{best_c, 0.0}, best_r, m};
}

// Signed difference of axis-center distances, zero where an axis-centered circle
// passes through both points.
inline double pair_gap(double c, const Point& a, const Point& b, const Metric& m) {
    return distance({c, 0.0}, a, m) - distance({c, 0.0}, b, m);
}

inline void refine_root(double lo, double hi, const Point& a, const Point& b, const Metric& m,
                        std::vector<double>& roots) {
    double flo = pair_gap(lo, a, b, m);
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = pair_gap(mid, a, b, m);
        if (fm == 0.0) { lo = hi = mid; break; }
        if ((flo < 0.0) == (fm < 0.0)) { lo = mid; flo = fm; }
        else hi = mid;
        if (hi - lo <= 1e-12 * (1.0 + std::fabs(lo) + std::fabs(hi))) break;
    }
    roots.push_back(0.5 * (lo + hi));
}

// All axis centers whose circle passes through both points, for finite p. The
// gap function changes sign from x_a-x_b to x_b-x_a; a sampled scan catches
// every simple crossing and bisection refines each to ~1e-12.
inline std::vector<double> pair_centers_finite(const Point& a, const Point& b, const Metric& m) {
    std::vector<double> roots;
    if (m.kind == Metric::Kind::L2) {
        const double den = 2.0 * (b.x - a.x);
        roots.push_back((b.x * b.x + b.y * b.y - a.x * a.x - a.y * a.y) / den);
        return roots;
    }
    if (m.kind == Metric::Kind::L1) {
        // Piecewise linear: the gap is constant outside [a.x, b.x], so roots live
        // on the middle piece or on a constant-zero plateau edge. No root means
        // one point rides strictly inside every circle through the other.
        if (a.x + a.y == b.x + b.y) roots.push_back(a.x);
        const double c = (a.x + b.x + b.y - a.y) / 2.0;
        if (c >= a.x && c <= b.x) roots.push_back(c);
        if (b.x - a.x == b.y - a.y) roots.push_back(b.x);
        return roots;
    }
    const double pad = (b.x - a.x) + a.y + b.y + 1.0;
    const double lo = a.x - pad, hi = b.x + pad;
    const int K = 256;
    double prev_c = lo, prev_f = pair_gap(lo, a, b, m);
    for (int k = 1; k <= K; ++k) {
        const double c = lo + (hi - lo) * k / K;
        const double f = pair_gap(c, a, b, m);
        if (f == 0.0) roots.push_back(c);
        else if ((prev_f < 0.0) != (f < 0.0)) refine_root(prev_c, c, a, b, m, roots);
        prev_c = c;
        prev_f = f;
    }
    return roots;
}

}  // namespace detail

// All pinned circles of a normalized client set: for each client the leftmost
// smallest axis-centered circle through it, and for each pair the leftmost
// smallest axis-centered circle enclosing both. At most n + n(n-1)/2 disks.
inline std::vector<Disk> pinned_circles(const std::vector<Point>& clients, const Metric& m) {
    std::vector<Disk> out;
    for (const Point& q : clients) {
        if (q.y < 0.0) throw std::invalid_argument("pinned_circles expects clients above the axis");
        if (m.is_inf()) out.push_back(Disk{{q.x - q.y, 0.0}, q.y, m});
        else out.push_back(Disk{{q.x, 0.0}, q.y, m});
    }
    const std::size_t n = clients.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Point a = clients[i], b = clients[j];
            if (a.x > b.x) std::swap(a, b);
            if (a.x == b.x) continue;
            if (m.is_inf()) {
                out.push_back(detail::pinned_pair_square(a, b, m));
                continue;
            }
            double best_r = std::numeric_limits<double>::infinity();
            double best_c = 0.0;
            for (double c : detail::pair_centers_finite(a, b, m)) {
                const double r = std::max(distance({c, 0.0}, a, m), distance({c, 0.0}, b, m));
                if (r < best_r - 1e-15 || (r < best_r + 1e-15 && c < best_c)) {
                    best_r = r;
                    best_c = c;
                }
            }
            if (std::isfinite(best_r)) out.push_back(Disk{{best_c, 0.0}, best_r, m});
        }
    }
    std::sort(out.begin(), out.end(), [](const Disk& a, const Disk& b) {
        return a.center.x < b.center.x || (a.center.x == b.center.x && a.radius < b.radius);
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Disk& a, const Disk& b) {
                              return a.center.x == b.center.x && a.radius == b.radius;
                          }),
              out.end());
    return out;
}

// True iff no client sits strictly above the upper boundary of d within its
// x-extent. Clients below the arc are inside; clients beyond the extent do not
// count as above.
inline bool points_above_circle_empty(const std::vector<Point>& clients, const Disk& d,
                                      double tol = 1e-9) {
    for (const Point& q : clients) {
        if (std::fabs(q.x - d.center.x) > d.radius) continue;
        if (distance(d.center, q, d.metric) > d.radius + tol) return false;
    }
    return true;
}

inline double apex_x(const Disk& d) { return disk_apex(d).x; }

// True iff no client lies in the region bounded by the axis, disks a and c, and
// the vertical lines through their apices (a's apex line on the left).
inline bool region_b_empty(const std::vector<Point>& clients, const Disk& a, const Disk& c,
                           double tol = 1e-9) {
    const double left = apex_x(a), right = apex_x(c);
    for (const Point& q : clients) {
        if (q.x < left - 1e-12 || q.x >= right - 1e-12) continue;
        if (distance(a.center, q, a.metric) <= a.radius + tol) continue;
        if (distance(c.center, q, c.metric) <= c.radius + tol) continue;
        return false;
    }
    return true;
}

}  // namespace diskcover
