#pragma once

#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <string>

#include "diskcover/core.hpp"

namespace diskcover {
namespace detail {

class SvgCanvas {
public:
    SvgCanvas(double xmin, double ymin, double xmax, double ymax, double width = 800.0) {
        const double pad = 0.05 * std::max({xmax - xmin, ymax - ymin, 1e-9});
        xmin_ = xmin - pad;
        ymax_ = ymax + pad;
        scale_ = width / std::max(xmax - xmin + 2.0 * pad, 1e-12);
        width_ = width;
        height_ = (ymax_ - (ymin - pad)) * scale_;
        body_ << std::setprecision(6) << std::fixed;
    }

    double sx(double x) const { return (x - xmin_) * scale_; }
    double sy(double y) const { return (ymax_ - y) * scale_; }
    double sr(double r) const { return r * scale_; }

    void circle(const Point& c, double r, const std::string& stroke) {
        body_ << "<circle cx=\"" << sx(c.x) << "\" cy=\"" << sy(c.y) << "\" r=\"" << sr(r)
              << "\" fill=\"none\" stroke=\"" << stroke << "\"/>\n";
    }

    void polygon(const std::vector<Point>& pts, const std::string& stroke, bool closed = true) {
        body_ << (closed ? "<polygon" : "<polyline") << " points=\"";
        for (const Point& q : pts) body_ << sx(q.x) << "," << sy(q.y) << " ";
        body_ << "\" fill=\"none\" stroke=\"" << stroke << "\"/>\n";
    }

    void dot(const Point& q, const std::string& fill, double r = 3.0) {
        body_ << "<circle cx=\"" << sx(q.x) << "\" cy=\"" << sy(q.y) << "\" r=\"" << r
              << "\" fill=\"" << fill << "\"/>\n";
    }

    void segment(const Point& a, const Point& b, const std::string& stroke) {
        body_ << "<line x1=\"" << sx(a.x) << "\" y1=\"" << sy(a.y) << "\" x2=\"" << sx(b.x)
              << "\" y2=\"" << sy(b.y) << "\" stroke=\"" << stroke << "\"/>\n";
    }

    std::string str() const {
        std::ostringstream out;
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_ << "\" height=\""
            << height_ << "\">\n"
            << body_.str() << "</svg>\n";
        return out.str();
    }

private:
    double xmin_ = 0.0, ymax_ = 0.0, scale_ = 1.0, width_ = 0.0, height_ = 0.0;
    std::ostringstream body_;
};

// Boundary of the metric ball as a polygon (exact for p in {1, inf}).
inline std::vector<Point> ball_outline(const Disk& d, std::size_t samples = 64) {
    std::vector<Point> pts;
    const double r = d.radius, cx = d.center.x, cy = d.center.y;
    switch (d.metric.kind) {
        case Metric::Kind::LINF:
            return {{cx - r, cy - r}, {cx + r, cy - r}, {cx + r, cy + r}, {cx - r, cy + r}};
        case Metric::Kind::L1:
            return {{cx + r, cy}, {cx, cy + r}, {cx - r, cy}, {cx, cy - r}};
        default: {
            const double e = 2.0 / d.metric.p;
            for (std::size_t i = 0; i < samples; ++i) {
                const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(samples);
                const double c = std::cos(t), s = std::sin(t);
                const double px = std::copysign(std::pow(std::fabs(c), e), c);
                const double py = std::copysign(std::pow(std::fabs(s), e), s);
                pts.push_back({cx + r * px, cy + r * py});
            }
            return pts;
        }
    }
}

}  // namespace detail

// Static picture of an instance with an optional cover, tour, and line.
inline std::string render_svg(const std::vector<Point>& clients,
                              const std::vector<Point>& servers, const std::vector<Disk>& disks,
                              const std::vector<Point>& tour, const Line* line) {
    double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
    bool seen = false;
    auto grow = [&](double x, double y) {
        if (!seen) {
            xmin = xmax = x;
            ymin = ymax = y;
            seen = true;
            return;
        }
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    };
    for (const Point& q : clients) grow(q.x, q.y);
    for (const Point& q : servers) grow(q.x, q.y);
    for (const Point& q : tour) grow(q.x, q.y);
    for (const Disk& d : disks) {
        grow(d.center.x - d.radius, d.center.y - d.radius);
        grow(d.center.x + d.radius, d.center.y + d.radius);
    }

    detail::SvgCanvas canvas(xmin, ymin, xmax, ymax);
    if (line) {
        const double span = 2.0 * std::max({xmax - xmin, ymax - ymin, 1.0});
        const Point mid = to_line_frame(*line, {(xmin + xmax) / 2.0, (ymin + ymax) / 2.0});
        const Point a = from_line_frame(*line, {mid.x - span, 0.0});
        const Point b = from_line_frame(*line, {mid.x + span, 0.0});
        canvas.segment(a, b, "#999999");
    }
    for (const Disk& d : disks) {
        if (d.metric.kind == Metric::Kind::L2) canvas.circle(d.center, d.radius, "#1f77b4");
        else canvas.polygon(detail::ball_outline(d), "#1f77b4");
    }
    if (tour.size() > 1) canvas.polygon(tour, "#2ca02c");
    for (const Point& q : tour) canvas.dot(q, "#2ca02c", 3.5);
    for (const Point& q : servers) canvas.dot(q, "#ff7f0e", 3.5);
    for (const Point& q : clients) canvas.dot(q, "#d62728");
    return canvas.str();
}

inline void write_svg(const std::string& path, const std::string& svg) {
    std::ofstream out(path);
    out << svg;
    if (!out) throw std::runtime_error("cannot write file: " + path);
}

}  // namespace diskcover
