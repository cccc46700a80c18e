#pragma once

#include <cstdint>
#include <numbers>
#include <random>
#include <string>

#include "diskcover/core.hpp"

namespace diskcover {
namespace detail {

// Seeded generator with platform-independent double output.
struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    double uniform() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    double gauss() {
        const double u1 = 1.0 - uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }
};

}  // namespace detail

struct GenParams {
    std::size_t n = 10;        // clients
    std::size_t m = 0;         // servers; > 0 puts everything on the x-axis
    double epsilon = 0.01;     // family parameter (gg-tight, sgg-area)
    double radius = 1.0;       // circle radius
    std::size_t clusters = 3;  // gaussian cluster count
    double side = 1.0;         // bounding box side
};

// Deterministic instance families. With m > 0 the uniform kinds emit a 1D
// instance: clients and servers on the x-axis.
inline Instance generate(const std::string& kind, const GenParams& p, std::uint64_t seed) {
    detail::Rng rng(seed);
    Instance inst;
    inst.metric = Metric::l2();
    inst.cost = CostModel::power(1.0);

    if (kind == "uniform-square") {
        if (p.m > 0) {
            for (std::size_t i = 0; i < p.n; ++i) inst.clients.push_back({rng.uniform(0.0, p.side), 0.0});
            std::vector<Point> servers;
            for (std::size_t i = 0; i < p.m; ++i) servers.push_back({rng.uniform(0.0, p.side), 0.0});
            inst.servers = std::move(servers);
        } else {
            for (std::size_t i = 0; i < p.n; ++i)
                inst.clients.push_back({rng.uniform(0.0, p.side), rng.uniform(0.0, p.side)});
        }
        return inst;
    }
    if (kind == "gaussian-clusters") {
        const std::size_t k = std::max<std::size_t>(p.clusters, 1);
        std::vector<Point> centers;
        for (std::size_t i = 0; i < k; ++i)
            centers.push_back({rng.uniform(0.0, p.side), rng.uniform(0.0, p.side)});
        for (std::size_t i = 0; i < p.n; ++i) {
            const Point& c = centers[i % k];
            inst.clients.push_back({c.x + 0.1 * p.side * rng.gauss(), c.y + 0.1 * p.side * rng.gauss()});
        }
        return inst;
    }
    if (kind == "gg-tight") {
        inst.servers = std::vector<Point>{{-2.0 + p.epsilon, 0.0}, {0.0, 0.0}, {2.0 - p.epsilon, 0.0}};
        inst.clients = {{-1.0, 0.0}, {1.0, 0.0}};
        return inst;
    }
    if (kind == "sgg-area") {
        for (std::size_t i = 0; i < p.n; ++i)
            inst.clients.push_back({static_cast<double>(i) * (1.0 + p.epsilon), 1.0});
        return inst;
    }
    if (kind == "collinear") {
        const double theta = rng.uniform(0.0, std::numbers::pi);
        const double c = std::cos(theta), s = std::sin(theta);
        const Point anchor{rng.uniform(0.0, p.side), rng.uniform(0.0, p.side)};
        for (std::size_t i = 0; i < p.n; ++i) {
            const double t = rng.uniform(0.0, p.side);
            inst.clients.push_back({anchor.x + t * c, anchor.y + t * s});
        }
        return inst;
    }
    if (kind == "circle") {
        const double phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
        for (std::size_t i = 0; i < p.n; ++i) {
            const double a = phase + 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(std::max<std::size_t>(p.n, 1));
            inst.clients.push_back({p.radius * std::cos(a), p.radius * std::sin(a)});
        }
        return inst;
    }
    throw std::invalid_argument("unknown instance kind: " + kind);
}

}  // namespace diskcover
