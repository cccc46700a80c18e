#pragma once

#include <numbers>
#include <utility>

#include "diskcover/line_cover.hpp"

namespace diskcover {

struct LineSearchResult {
    Line line;
    Cover cover;
    double epsilon = 0.0;  // guarantee parameter, 0 for exact-on-line
};

namespace detail {

inline bool euclidean(const Metric& m) {
    return m.kind == Metric::Kind::L2 || (m.kind == Metric::Kind::LP && m.p == 2.0);
}

inline void require_euclidean(const Metric& m, const char* op) {
    if (!euclidean(m))
        throw std::invalid_argument(std::string(op) + " searches over rotated lines and needs p=2");
}

// Solve the cover problem restricted to centers on ell, in ell's own frame,
// and map the disks back to plane coordinates.
inline Cover solve_on_line(const std::vector<Point>& clients, const Line& ell, const Metric& m,
                           const CostModel& f, bool fast) {
    std::vector<Point> frame(clients.size());
    for (std::size_t i = 0; i < clients.size(); ++i) frame[i] = to_line_frame(ell, clients[i]);
    Cover cov;
    if (fast) {
        cov = (f.alpha == 1.0) ? sgg_cover(frame, f) : sg_cover(frame, f);
        // Replace each square by the smallest metric ball around its center
        // that contains it, so the result is a cover in the requested metric.
        const double blow = m.is_inf() ? 1.0 : std::pow(2.0, 1.0 / m.p);
        for (Disk& d : cov.disks) {
            d.radius *= blow;
            d.metric = m;
        }
        cov.cost = cover_cost(cov.disks, f);
    } else {
        cov = (f.alpha == 1.0) ? dp_linear(frame, m) : dp_superlinear(frame, m, f);
    }
    for (Disk& d : cov.disks) d.center = from_line_frame(ell, {d.center.x, 0.0});
    return cov;
}

inline std::size_t next_pow2(double x) {
    std::size_t k = 1;
    while (static_cast<double>(k) < x) k <<= 1;
    return k;
}

inline LineSearchResult point_line_result(const Point& q, const Metric& m, double eps) {
    LineSearchResult res;
    res.line = Line::horizontal(q.y);
    res.line.anchor = q;
    res.cover.disks.push_back(Disk{q, 0.0, m});
    res.cover.cost = 0.0;
    res.epsilon = eps;
    return res;
}

}  // namespace detail

// Best horizontal placement line. Candidate offsets form a uniform grid over
// the clients' vertical extent whose size is a power of two at least the
// analytic strip count, so grids for smaller epsilon refine larger ones and
// the returned cost is monotone in epsilon.
inline LineSearchResult fptas_horizontal(const std::vector<Point>& clients, const Metric& m,
                                         const CostModel& f, double epsilon) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
    LineSearchResult res;
    res.epsilon = epsilon;
    if (clients.empty()) {
        res.line = Line::horizontal(0.0);
        return res;
    }
    double ymin = clients.front().y, ymax = ymin;
    for (const Point& q : clients) {
        ymin = std::min(ymin, q.y);
        ymax = std::max(ymax, q.y);
    }
    const double d = ymax - ymin;
    const double n = static_cast<double>(clients.size());

    auto solve = [&](double t) {
        std::vector<Point> shifted(clients.size());
        for (std::size_t i = 0; i < clients.size(); ++i) shifted[i] = {clients[i].x, clients[i].y - t};
        Cover cov = (f.alpha == 1.0) ? dp_linear(shifted, m) : dp_superlinear(shifted, m, f);
        for (Disk& dd : cov.disks) dd.center.y = t;
        return cov;
    };

    if (d == 0.0) {
        res.line = Line::horizontal(ymin);
        res.cover = solve(ymin);
        res.epsilon = 0.0;
        return res;
    }

    double strips;
    if (f.alpha == 1.0) {
        strips = std::ceil(2.0 * n / epsilon);
    } else {
        const double delta = epsilon * d / (f.alpha * std::exp2(2.0 * f.alpha - 1.0) * n);
        strips = std::ceil(d / delta);
    }
    const std::size_t K = detail::next_pow2(strips);
    if (K > (std::size_t{1} << 26)) throw SizeLimitError("fptas_horizontal: epsilon too small");

    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i <= K; ++i) {
        const double t = ymin + d * static_cast<double>(i) / static_cast<double>(K);
        Cover cov = solve(t);
        if (cov.cost < best) {
            best = cov.cost;
            res.cover = std::move(cov);
            res.line = Line::horizontal(t);
        }
    }
    return res;
}

// Rotate a line-centered cover around a pivot on its line so the line passes
// through the angularly nearest client, doubling every radius. Coverage is
// preserved and the cost scales by exactly 2^alpha.
inline std::pair<Line, Cover> reanchor_cover(const Cover& cover, const Line& ell, const Point& pivot,
                                             const std::vector<Point>& clients, const CostModel& f) {
    double theta = 0.0;
    const Point* hit = nullptr;
    for (const Point& q : clients) {
        const double ux = q.x - pivot.x, uy = q.y - pivot.y;
        if (std::hypot(ux, uy) < 1e-12) continue;
        double a = std::atan2(ell.dir.x * uy - ell.dir.y * ux, ell.dir.x * ux + ell.dir.y * uy);
        if (a > std::numbers::pi / 2.0) a -= std::numbers::pi;
        if (a <= -std::numbers::pi / 2.0) a += std::numbers::pi;
        if (hit == nullptr || std::fabs(a) < std::fabs(theta)) {
            theta = a;
            hit = &q;
        }
    }
    const double c = std::cos(theta), s = std::sin(theta);
    Cover out;
    for (const Disk& d : cover.disks) {
        const double vx = d.center.x - pivot.x, vy = d.center.y - pivot.y;
        out.disks.push_back(Disk{{pivot.x + vx * c - vy * s, pivot.y + vx * s + vy * c},
                                 2.0 * d.radius, d.metric});
    }
    out.cost = cover_cost(out.disks, f);
    const Line moved = hit ? Line::through(pivot, *hit) : ell;
    return {moved, out};
}

// Best cover over all lines through client pairs; per-line solve is either the
// exact DP or the square greedy converted to enclosing balls (fast).
inline LineSearchResult any_line_constant(const std::vector<Point>& clients, const Metric& m,
                                          const CostModel& f, bool fast) {
    detail::require_euclidean(m, "any_line_constant");
    if (clients.empty()) {
        LineSearchResult res;
        res.line = Line::horizontal(0.0);
        return res;
    }
    double best = std::numeric_limits<double>::infinity();
    LineSearchResult res;
    for (std::size_t i = 0; i < clients.size(); ++i) {
        for (std::size_t j = i + 1; j < clients.size(); ++j) {
            const double dx = clients[j].x - clients[i].x, dy = clients[j].y - clients[i].y;
            if (std::hypot(dx, dy) < 1e-12) continue;
            const Line ell = Line::through(clients[i], clients[j]);
            Cover cov = detail::solve_on_line(clients, ell, m, f, fast);
            if (cov.cost < best) {
                best = cov.cost;
                res.line = ell;
                res.cover = std::move(cov);
            }
        }
    }
    if (best == std::numeric_limits<double>::infinity()) return detail::point_line_result(clients.front(), m, 0.0);
    return res;
}

// (1+epsilon)-optimal line over all orientations, linear cost. Candidate lines
// join grid points spaced eps*OPT_hat/n apart, anchored per the strip shape:
// wide strips pair points on the two vertical sides, squarish ones pair points
// on the boundary of a surrounding square. OPT_hat comes from the pair-line
// pass at its worst-case factor 4.
inline LineSearchResult any_line_ptas(const std::vector<Point>& clients, const CostModel& f,
                                      double epsilon) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
    if (f.alpha != 1.0) throw std::invalid_argument("any_line_ptas requires linear cost");
    const Metric m = Metric::l2();
    if (clients.empty()) {
        LineSearchResult res;
        res.line = Line::horizontal(0.0);
        res.epsilon = epsilon;
        return res;
    }
    if (clients.size() == 1) return detail::point_line_result(clients.front(), m, epsilon);

    // Work with the long side horizontal; swapping x and y is an isometry.
    double xmin = clients[0].x, xmax = xmin, ymin = clients[0].y, ymax = ymin;
    for (const Point& q : clients) {
        xmin = std::min(xmin, q.x);
        xmax = std::max(xmax, q.x);
        ymin = std::min(ymin, q.y);
        ymax = std::max(ymax, q.y);
    }
    const bool swapped = (xmax - xmin) < (ymax - ymin);
    std::vector<Point> pts = clients;
    if (swapped) {
        for (Point& q : pts) std::swap(q.x, q.y);
        std::swap(xmin, ymin);
        std::swap(xmax, ymax);
    }
    const double w = xmax - xmin, h = ymax - ymin;

    auto unswap_point = [&](Point q) { return swapped ? Point{q.y, q.x} : q; };
    auto finish = [&](const Line& ell, Cover cov) {
        LineSearchResult res;
        res.line = Line{unswap_point(ell.anchor), unswap_point(ell.dir)};
        const double norm = std::hypot(res.line.dir.x, res.line.dir.y);
        res.line.dir.x /= norm;
        res.line.dir.y /= norm;
        for (Disk& d : cov.disks) d.center = unswap_point(d.center);
        res.cover = std::move(cov);
        res.epsilon = epsilon;
        return res;
    };

    if (h == 0.0) {
        Cover cov = detail::solve_on_line(pts, Line::horizontal(ymin), m, f, false);
        return finish(Line::horizontal(ymin), std::move(cov));
    }

    const LineSearchResult base = any_line_constant(clients, m, f, false);
    if (base.cover.cost == 0.0) {
        LineSearchResult res = base;
        res.epsilon = epsilon;
        return res;
    }
    const double V = base.cover.cost;
    const double opt_hat = V / 4.0;
    double delta = epsilon * opt_hat / static_cast<double>(clients.size());

    double best = V;
    Line best_line = base.line;
    Cover best_cover = base.cover;
    if (swapped) {  // track candidates in the swapped frame
        best_line = Line{Point{base.line.anchor.y, base.line.anchor.x}, Point{base.line.dir.y, base.line.dir.x}};
        for (Disk& d : best_cover.disks) std::swap(d.center.x, d.center.y);
    }
    auto try_line = [&](const Point& a, const Point& b) {
        if (std::hypot(b.x - a.x, b.y - a.y) < 1e-12) return;
        const Line ell = Line::through(a, b);
        Cover cov = detail::solve_on_line(pts, ell, m, f, false);
        if (cov.cost < best) {
            best = cov.cost;
            best_line = ell;
            best_cover = std::move(cov);
        }
    };

    if (w >= 2.0 * h) {
        // Wide strip: the line enters through the left side and leaves through
        // the right one, in both cases within 4 OPT of the strip.
        const double lo = ymin - 4.0 * V, hi = ymax + 4.0 * V;
        std::size_t steps = static_cast<std::size_t>(std::floor((hi - lo) / delta)) + 1;
        if (steps > 2000) {  // degenerate near-collinear input; keep it finite
            steps = 2000;
            delta = (hi - lo) / static_cast<double>(steps);
        }
        for (std::size_t i = 0; i <= steps; ++i) {
            const double ya = lo + delta * static_cast<double>(i);
            for (std::size_t j = 0; j <= steps; ++j)
                try_line({xmin, ya}, {xmax, lo + delta * static_cast<double>(j)});
        }
    } else {
        // Squarish strip: every relevant line crosses the boundary of a square
        // of side w+h around the strip twice.
        const double cx = (xmin + xmax) / 2.0, cy = (ymin + ymax) / 2.0;
        const double side = w + h, half = side / 2.0;
        double per = 4.0 * side;
        std::size_t steps = static_cast<std::size_t>(std::ceil(per / delta));
        if (steps > 2000) steps = 2000;  // degenerate near-collinear input
        std::vector<Point> boundary;
        boundary.reserve(steps);
        for (std::size_t k = 0; k < steps; ++k) {
            double s = per * static_cast<double>(k) / static_cast<double>(steps);
            Point q;
            if (s < side) q = {cx - half + s, cy - half};
            else if (s < 2.0 * side) q = {cx + half, cy - half + (s - side)};
            else if (s < 3.0 * side) q = {cx + half - (s - 2.0 * side), cy + half};
            else q = {cx - half, cy + half - (s - 3.0 * side)};
            boundary.push_back(q);
        }
        for (std::size_t i = 0; i < boundary.size(); ++i)
            for (std::size_t j = i + 1; j < boundary.size(); ++j) try_line(boundary[i], boundary[j]);
    }
    return finish(best_line, std::move(best_cover));
}

// Dense orientation and offset sweep, exact DP per line. resolution r means
// an angle step of r*pi over [0,pi) and an offset step of r times the
// clients' extent perpendicular to each orientation. Reference baseline; its
// minimum is an upper bound on the all-lines optimum.
inline LineSearchResult sweep_oracle(const std::vector<Point>& clients, const Metric& m,
                                     const CostModel& f, double resolution) {
    if (!(resolution > 0.0)) throw std::invalid_argument("resolution must be positive");
    detail::require_euclidean(m, "sweep_oracle");
    if (clients.size() <= 1) {
        if (clients.empty()) {
            LineSearchResult res;
            res.line = Line::horizontal(0.0);
            return res;
        }
        return detail::point_line_result(clients.front(), m, 0.0);
    }
    const std::size_t angles = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(1.0 / resolution)));
    const std::size_t offsets = angles;
    if (angles > 20000000 / (offsets + 1)) throw SizeLimitError("sweep_oracle: resolution too fine");

    double best = std::numeric_limits<double>::infinity();
    LineSearchResult res;
    std::vector<Point> frame(clients.size());
    for (std::size_t a = 0; a < angles; ++a) {
        const double th = std::numbers::pi * static_cast<double>(a) / static_cast<double>(angles);
        const double c = std::cos(th), s = std::sin(th);
        double hmin = std::numeric_limits<double>::infinity(), hmax = -hmin;
        for (std::size_t i = 0; i < clients.size(); ++i) {
            frame[i] = {clients[i].x * c + clients[i].y * s, clients[i].y * c - clients[i].x * s};
            hmin = std::min(hmin, frame[i].y);
            hmax = std::max(hmax, frame[i].y);
        }
        const std::size_t last = (hmax > hmin) ? offsets : 0;
        for (std::size_t b = 0; b <= last; ++b) {
            const double t = hmin + (hmax - hmin) * static_cast<double>(b) / static_cast<double>(std::max<std::size_t>(last, 1));
            std::vector<Point> shifted(frame.size());
            for (std::size_t i = 0; i < frame.size(); ++i) shifted[i] = {frame[i].x, frame[i].y - t};
            Cover cov = (f.alpha == 1.0) ? dp_linear(shifted, m) : dp_superlinear(shifted, m, f);
            if (cov.cost < best) {
                best = cov.cost;
                res.line = Line{{-s * t, c * t}, {c, s}};
                for (Disk& d : cov.disks) {
                    const double u = d.center.x;
                    d.center = {u * c - t * s, u * s + t * c};
                }
                res.cover = std::move(cov);
            }
        }
    }
    return res;
}

}  // namespace diskcover
