#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace diskcover {

struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SizeLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }

// Lp metric on the plane, p >= 1 or p = infinity.
struct Metric {
    enum class Kind { L1, L2, LP, LINF };

    double p = 2.0;
    Kind kind = Kind::L2;

    Metric() = default;

    static Metric lp(double p) {
        if (std::isnan(p) || p < 1.0)
            throw std::invalid_argument("metric exponent must be >= 1");
        Metric m;
        m.p = p;
        if (std::isinf(p)) m.kind = Kind::LINF;
        else if (p == 1.0) m.kind = Kind::L1;
        else if (p == 2.0) m.kind = Kind::L2;
        else m.kind = Kind::LP;
        return m;
    }

    static Metric l1() { return lp(1.0); }
    static Metric l2() { return lp(2.0); }
    static Metric linf() { return lp(std::numeric_limits<double>::infinity()); }

    bool is_inf() const { return kind == Kind::LINF; }
};

inline double distance(const Point& a, const Point& b, const Metric& m) {
    const double dx = std::fabs(a.x - b.x);
    const double dy = std::fabs(a.y - b.y);
    switch (m.kind) {
        case Metric::Kind::L1: return dx + dy;
        case Metric::Kind::L2: return std::sqrt(dx * dx + dy * dy);
        case Metric::Kind::LINF: return std::max(dx, dy);
        case Metric::Kind::LP: return std::pow(std::pow(dx, m.p) + std::pow(dy, m.p), 1.0 / m.p);
    }
    return 0.0;
}

// Cost of a disk of radius r is r^alpha; covering tours add tour_weight * sum of disk costs.
struct CostModel {
    double alpha = 1.0;
    std::optional<double> tour_weight;

    static CostModel power(double alpha) {
        if (std::isnan(alpha) || alpha < 1.0)
            throw std::invalid_argument("cost exponent must be >= 1");
        CostModel f;
        f.alpha = alpha;
        return f;
    }

    double operator()(double r) const { return alpha == 1.0 ? r : std::pow(r, alpha); }
};

struct Disk {
    Point center;
    double radius = 0.0;
    Metric metric;
};

inline bool disk_contains(const Disk& d, const Point& q, double tol = 1e-9) {
    return distance(d.center, q, d.metric) <= d.radius + tol;
}

// Highest boundary point; for Linf balls (axis-aligned squares) the upper right corner.
inline Point disk_apex(const Disk& d) {
    if (d.metric.is_inf()) return {d.center.x + d.radius, d.center.y + d.radius};
    return {d.center.x, d.center.y + d.radius};
}

struct Cover {
    std::vector<Disk> disks;
    double cost = 0.0;
};

inline double cover_cost(const std::vector<Disk>& disks, const CostModel& f) {
    double c = 0.0;
    for (const Disk& d : disks) c += f(d.radius);
    return c;
}

inline bool covers_all(const std::vector<Disk>& disks, const std::vector<Point>& clients,
                       double tol = 1e-9) {
    for (const Point& q : clients) {
        bool hit = false;
        for (const Disk& d : disks)
            if (disk_contains(d, q, tol)) { hit = true; break; }
        if (!hit) return false;
    }
    return true;
}

// Oriented line: anchor + t * dir, with dir of unit length.
struct Line {
    Point anchor;
    Point dir = {1.0, 0.0};

    static Line horizontal(double y) { return Line{{0.0, y}, {1.0, 0.0}}; }

    static Line from_angle(const Point& anchor, double theta) {
        return Line{anchor, {std::cos(theta), std::sin(theta)}};
    }

    static Line through(const Point& a, const Point& b) {
        const double dx = b.x - a.x, dy = b.y - a.y;
        const double n = std::hypot(dx, dy);
        if (n == 0.0) throw std::invalid_argument("line through coincident points");
        return Line{a, {dx / n, dy / n}};
    }
};

// Coordinates of q in the frame of l: first = position along l, second = signed height.
inline Point to_line_frame(const Line& l, const Point& q) {
    const double rx = q.x - l.anchor.x, ry = q.y - l.anchor.y;
    return {rx * l.dir.x + ry * l.dir.y, -rx * l.dir.y + ry * l.dir.x};
}

inline Point from_line_frame(const Line& l, const Point& q) {
    return {l.anchor.x + q.x * l.dir.x - q.y * l.dir.y,
            l.anchor.y + q.x * l.dir.y + q.y * l.dir.x};
}

inline double line_distance(const Line& l, const Point& q) {
    return std::fabs(to_line_frame(l, q).y);
}

struct Instance {
    std::vector<Point> clients;
    std::optional<std::vector<Point>> servers;
    Metric metric;
    CostModel cost;
    std::optional<int> max_disks;
};

}  // namespace diskcover
