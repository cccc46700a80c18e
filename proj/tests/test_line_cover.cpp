#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <diskcover/line_cover.hpp>

using namespace diskcover;
using Catch::Approx;

namespace {

std::vector<Point> random_clients(std::mt19937_64& rng, std::size_t max_n, double w = 4.0,
                                  double h = 2.0) {
    std::uniform_real_distribution<double> ux(0.0, w), uy(-h, h);
    std::vector<Point> pts(1 + rng() % max_n);
    for (Point& q : pts) q = {ux(rng), uy(rng)};
    return pts;
}

bool on_axis(const Cover& c) {
    for (const Disk& d : c.disks)
        if (std::fabs(d.center.y) > 1e-12) return false;
    return true;
}

}  // namespace

TEST_CASE("normalize reflects and deduplicates columns") {
    const auto pts = normalize_clients({{2, -3}, {0, 1}, {2, 2}, {0, -0.5}});
    REQUIRE(pts.size() == 2);
    CHECK(pts[0].x == 0.0);
    CHECK(pts[0].y == 1.0);
    CHECK(pts[1].x == 2.0);
    CHECK(pts[1].y == 3.0);
}

TEST_CASE("pinned circles pass through their defining clients") {
    std::mt19937_64 rng(41);
    for (const Metric& m : {Metric::l1(), Metric::l2(), Metric::lp(3.0), Metric::linf()}) {
        for (int it = 0; it < 25; ++it) {
            const auto clients = normalize_clients(random_clients(rng, 6));
            const auto pins = pinned_circles(clients, m);
            CHECK(!pins.empty());
            for (const Disk& d : pins) {
                CHECK(d.center.y == 0.0);
                bool touches = false;
                for (const Point& q : clients)
                    if (std::fabs(distance(d.center, q, m) - d.radius) <= 1e-6) touches = true;
                CHECK(touches);
            }
        }
    }
}

TEST_CASE("region between circles detects blocking clients") {
    const Metric m = Metric::l2();
    const Disk a{{0, 0}, 1.0, m}, c{{4, 0}, 1.0, m};
    CHECK(region_b_empty({{0, 1}, {4, 1}}, a, c));
    CHECK_FALSE(region_b_empty({{2, 0.5}}, a, c));
    const Disk a2{{0, 0}, 2.0, m}, c2{{1, 0}, 2.0, m};
    CHECK(region_b_empty({{0.5, 1}}, a2, c2));
}

TEST_CASE("linear-cost dp on fixed examples") {
    const Metric m = Metric::l2();
    const Cover a = dp_linear({{0, 1}, {4, 1}}, m);
    CHECK(a.cost == Approx(2.0).margin(1e-9));
    CHECK(a.disks.size() == 2);
    CHECK(on_axis(a));

    CHECK(dp_linear({{0, 0}}, m).cost == Approx(0.0).margin(1e-12));

    const Cover r = dp_linear({{3, 4}, {-3, -2}, {102, 2}, {98, -2}, {200, 2}}, m);
    CHECK(r.cost == Approx(std::sqrt(20.0) + std::sqrt(8.0) + 2.0).margin(1e-9));
    CHECK(r.disks.size() == 3);
}

TEST_CASE("superlinear dp on fixed examples") {
    const Metric m = Metric::l2();
    CHECK(dp_superlinear({{0, 1}, {4, 1}}, m, CostModel::power(2.0)).cost ==
          Approx(2.0).margin(1e-9));
    const Cover b = dp_superlinear({{0, 1}, {1, 1}}, m, CostModel::power(2.0));
    CHECK(b.cost == Approx(1.25).margin(1e-9));
    REQUIRE(b.disks.size() == 1);
    CHECK(b.disks[0].center.x == Approx(0.5).margin(1e-9));
    CHECK(dp_superlinear({{0, 2}}, m, CostModel::power(2.0)).cost == Approx(4.0).margin(1e-9));
}

TEST_CASE("square dp on fixed examples") {
    const CostModel f = CostModel::power(1.0);
    CHECK(dp_squares({{0, 1}}, f).cost == Approx(1.0).margin(1e-9));
    CHECK(dp_squares({{0, 1}, {4, 1}}, f).cost == Approx(2.0).margin(1e-9));
    // One square of halfside 1 covers both stacked clients.
    const Cover c = dp_squares({{0, 1}, {1, 1}}, f);
    CHECK(c.cost == Approx(1.0).margin(1e-9));
    CHECK(c.disks.size() == 1);
    // One square of halfside 2 reaches (3,1) while covering (0,2).
    CHECK(dp_squares({{0, 2}, {3, 1}}, f).cost == Approx(2.0).margin(1e-9));
}

TEST_CASE("square-greedy on fixed examples") {
    const CostModel f = CostModel::power(1.0);
    const Cover a = sg_cover({{0, 2}, {1, 1}}, f);
    CHECK(a.cost == Approx(2.0).margin(1e-9));
    CHECK(a.disks.size() == 1);

    const Cover b = sg_cover({{0, 1}, {10, 1}}, f);
    CHECK(b.cost == Approx(2.0).margin(1e-9));
    CHECK(b.disks.size() == 2);

    const Cover c = sg_cover({{0, 2}, {3, 1}}, f);
    CHECK(c.cost == Approx(3.0).margin(1e-9));
    CHECK(c.disks.size() == 2);
}

TEST_CASE("growing square-greedy merges near neighbors into one square") {
    const CostModel f = CostModel::power(1.0);
    const Cover a = sgg_cover({{0, 1}, {1.1, 1}, {2.2, 1}}, f);
    REQUIRE(a.disks.size() == 1);
    CHECK(2.0 * a.disks[0].radius == Approx(3.2).margin(1e-9));

    const Cover b = sgg_cover({{0, 1}, {10, 1}}, f);
    CHECK(b.disks.size() == 2);
    CHECK(b.cost == Approx(2.0).margin(1e-9));

    const Cover c = sgg_cover({{0, 2}}, f);
    REQUIRE(c.disks.size() == 1);
    CHECK(2.0 * c.disks[0].radius == Approx(4.0).margin(1e-9));
}

TEST_CASE("exhaustive pin oracle rejects large instances") {
    std::vector<Point> many(13);
    for (std::size_t i = 0; i < many.size(); ++i) many[i] = {static_cast<double>(i), 1.0};
    CHECK_THROWS_AS(oracle_line_exact(many, Metric::l2(), CostModel::power(1.0)),
                    SizeLimitError);
}

TEST_CASE("dps match the exhaustive pin oracle") {
    std::mt19937_64 rng(43);
    const std::vector<Metric> ms = {Metric::l1(), Metric::l2(), Metric::lp(3.0), Metric::linf()};
    for (const Metric& m : ms) {
        for (double alpha : {1.0, 2.0, 3.0}) {
            const CostModel f = CostModel::power(alpha);
            for (int it = 0; it < 30; ++it) {
                const auto clients = random_clients(rng, 7);
                const Cover oc = oracle_line_exact(clients, m, f);
                INFO("metric p=" << m.p << " alpha=" << alpha << " it=" << it);
                Cover got;
                if (alpha == 1.0 && !m.is_inf()) {
                    got = dp_linear(clients, m);
                } else if (m.is_inf()) {
                    got = dp_squares(clients, f);
                } else {
                    got = dp_superlinear(clients, m, f);
                }
                CHECK(got.cost == Approx(oc.cost).epsilon(1e-6).margin(1e-9));
                CHECK(on_axis(got));
                CHECK(covers_all(got.disks, clients, 1e-6));
                if (alpha > 1.0 && !m.is_inf()) {
                    const Cover sup = dp_superlinear(clients, m, f);
                    CHECK(sup.cost == Approx(oc.cost).epsilon(1e-6).margin(1e-9));
                }
            }
        }
    }
}

TEST_CASE("square heuristics stay within their factors of the square dp") {
    std::mt19937_64 rng(47);
    for (int it = 0; it < 80; ++it) {
        const auto clients = random_clients(rng, 9);
        for (double alpha : {1.0, 2.0}) {
            const CostModel f = CostModel::power(alpha);
            const double opt = dp_squares(clients, f).cost;
            const Cover sg = sg_cover(clients, f);
            CHECK(covers_all(sg.disks, clients, 1e-9));
            if (opt > 1e-12) CHECK(sg.cost / opt <= 3.0 + 1e-9);
        }
        const CostModel f1 = CostModel::power(1.0);
        const double opt1 = dp_squares(clients, f1).cost;
        const Cover gg = sgg_cover(clients, f1);
        CHECK(covers_all(gg.disks, clients, 1e-9));
        if (opt1 > 1e-12) CHECK(gg.cost / opt1 <= 2.0 + 1e-9);
    }
}

TEST_CASE("no plane point lies in three square-greedy squares") {
    std::mt19937_64 rng(53);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int inst = 0; inst < 10; ++inst) {
        const auto clients = random_clients(rng, 10);
        const Cover sg = sg_cover(clients, CostModel::power(1.0));
        double xmin = 1e30, xmax = -1e30, top = 0.0;
        for (const Disk& d : sg.disks) {
            xmin = std::min(xmin, d.center.x - d.radius);
            xmax = std::max(xmax, d.center.x + d.radius);
            top = std::max(top, d.radius);
        }
        for (int s = 0; s < 10000; ++s) {
            const Point q{xmin + (xmax - xmin) * (u(rng) + 1.0) / 2.0, top * (u(rng) + 1.0) / 2.0};
            int hits = 0;
            for (const Disk& d : sg.disks)
                if (disk_contains(d, q, 0.0)) ++hits;
            CHECK(hits <= 2);
        }
    }
}
