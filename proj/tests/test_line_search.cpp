#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include <diskcover/line_cover.hpp>
#include <diskcover/line_search.hpp>

using namespace diskcover;
using Catch::Approx;

namespace {

std::vector<Point> random_clients(std::mt19937_64& rng, std::size_t max_n, double w = 3.0,
                                  double h = 1.5) {
    std::uniform_real_distribution<double> ux(0.0, w), uy(-h, h);
    std::vector<Point> pts(2 + rng() % max_n);
    for (Point& q : pts) q = {ux(rng), uy(rng)};
    return pts;
}

void check_result(const LineSearchResult& res, const std::vector<Point>& clients) {
    CHECK(covers_all(res.cover.disks, clients, 1e-6));
    for (const Disk& d : res.cover.disks) CHECK(line_distance(res.line, d.center) <= 1e-9);
}

std::vector<Point> rotated(const std::vector<Point>& pts, double theta) {
    std::vector<Point> out;
    const double c = std::cos(theta), s = std::sin(theta);
    for (const Point& q : pts) out.push_back({q.x * c - q.y * s, q.x * s + q.y * c});
    return out;
}

}  // namespace

TEST_CASE("horizontal scheme, degenerate strip") {
    const LineSearchResult res =
        fptas_horizontal({{0, 5}, {7, 5}}, Metric::l2(), CostModel::power(1.0), 0.1);
    CHECK(res.cover.cost == Approx(0.0).margin(1e-12));
    CHECK(res.epsilon == 0.0);
    CHECK(line_distance(res.line, {3, 5}) <= 1e-12);
}

TEST_CASE("horizontal scheme finds the symmetric mid-line") {
    const std::vector<Point> clients = {{0, 0}, {0, 2}};
    const LineSearchResult res =
        fptas_horizontal(clients, Metric::l2(), CostModel::power(1.0), 0.1);
    check_result(res, clients);
    CHECK(res.cover.cost >= 1.0 - 1e-9);
    CHECK(res.cover.cost <= 1.1 + 1e-9);
}

TEST_CASE("horizontal scheme reproduces the radicals minimum") {
    const std::vector<Point> clients = {{3, 4}, {-3, -2}, {102, 2}, {98, -2}, {200, 2}};
    const LineSearchResult res =
        fptas_horizontal(clients, Metric::l2(), CostModel::power(1.0), 0.05);
    check_result(res, clients);
    CHECK(res.cover.cost >= 8.3327196 - 1e-6);
    CHECK(res.cover.cost <= 8.3327196 * 1.05 + 1e-9);
}

TEST_CASE("horizontal scheme validates parameters and size") {
    CHECK_THROWS_AS(fptas_horizontal({{0, 0}, {1, 1}}, Metric::l2(), CostModel::power(1.0), 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(fptas_horizontal({{0, 0}, {1, 1}}, Metric::l2(), CostModel::power(1.0), 1e-9),
                    SizeLimitError);
}

TEST_CASE("horizontal scheme cost is monotone in the guarantee") {
    std::mt19937_64 rng(61);
    for (int it = 0; it < 25; ++it) {
        const auto clients = random_clients(rng, 6);
        const double alpha = (it % 2 == 0) ? 1.0 : 2.0;
        const CostModel f = CostModel::power(alpha);
        double prev = std::numeric_limits<double>::infinity();
        for (double eps : {0.8, 0.4, 0.2, 0.1}) {
            const LineSearchResult res = fptas_horizontal(clients, Metric::l2(), f, eps);
            check_result(res, clients);
            CHECK(res.cover.cost <= prev + 1e-12);
            prev = res.cover.cost;
        }
    }
}

TEST_CASE("re-anchoring doubles the cost bound and keeps coverage") {
    std::mt19937_64 rng(67);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    int done = 0;
    while (done < 200) {
        const auto clients = random_clients(rng, 6);
        const Cover base = dp_linear(clients, Metric::l2());
        if (base.cost <= 1e-9) continue;
        ++done;
        const double alpha = (done % 2 == 0) ? 1.0 : 2.0;
        const CostModel f = CostModel::power(alpha);
        const Cover based{base.disks, cover_cost(base.disks, f)};
        const Line ell = Line::horizontal(0.0);
        const Point pivot{u(rng), 0.0};

        const auto [l2, c2] = reanchor_cover(based, ell, pivot, clients, f);
        CHECK(covers_all(c2.disks, clients, 1e-6));
        CHECK(c2.cost / based.cost <= std::pow(2.0, alpha) + 1e-9);
        CHECK(line_distance(l2, pivot) <= 1e-9);
        for (const Disk& d : c2.disks) CHECK(line_distance(l2, d.center) <= 1e-9);
        bool through_client = false;
        for (const Point& q : clients)
            if (line_distance(l2, q) <= 1e-9) through_client = true;
        CHECK(through_client);

        // Second step anchored at a client on the new line reaches a pair line.
        const Point* hit = nullptr;
        for (const Point& q : clients)
            if (line_distance(l2, q) <= 1e-9) { hit = &q; break; }
        REQUIRE(hit != nullptr);
        const auto [l3, c3] = reanchor_cover(c2, l2, *hit, clients, f);
        CHECK(covers_all(c3.disks, clients, 1e-6));
        CHECK(c3.cost / based.cost <= std::pow(4.0, alpha) + 1e-9);
        int on_line = 0;
        for (const Point& q : clients)
            if (line_distance(l3, q) <= 1e-6) ++on_line;
        CHECK(on_line >= 2);
    }
}

TEST_CASE("pair-line search handles collinear input") {
    const std::vector<Point> clients = {{0, 0}, {1, 0.5}, {2, 1}, {4, 2}};
    const LineSearchResult res =
        any_line_constant(clients, Metric::l2(), CostModel::power(1.0), false);
    CHECK(res.cover.cost <= 1e-9);
    check_result(res, clients);
}

TEST_CASE("pair-line search, exact per line, dominates the fast variant") {
    std::mt19937_64 rng(71);
    for (int it = 0; it < 30; ++it) {
        const auto clients = random_clients(rng, 6);
        const CostModel f = CostModel::power(1.0);
        const LineSearchResult ex = any_line_constant(clients, Metric::l2(), f, false);
        const LineSearchResult fa = any_line_constant(clients, Metric::l2(), f, true);
        check_result(ex, clients);
        check_result(fa, clients);
        CHECK(ex.cover.cost <= fa.cover.cost + 1e-9);
    }
}

TEST_CASE("pair-line search is rotation invariant") {
    std::mt19937_64 rng(73);
    std::uniform_real_distribution<double> ang(0.0, 6.28);
    for (int it = 0; it < 15; ++it) {
        const auto clients = random_clients(rng, 5);
        const CostModel f = CostModel::power(1.0);
        const double base = any_line_constant(clients, Metric::l2(), f, false).cover.cost;
        const double turned =
            any_line_constant(rotated(clients, ang(rng)), Metric::l2(), f, false).cover.cost;
        CHECK(turned == Approx(base).epsilon(1e-6).margin(1e-9));
    }
}

TEST_CASE("rotating-line operations require the euclidean metric") {
    const std::vector<Point> clients = {{0, 0}, {1, 1}, {2, 0}};
    const CostModel f = CostModel::power(1.0);
    CHECK_THROWS_AS(any_line_constant(clients, Metric::l1(), f, false), std::invalid_argument);
    CHECK_THROWS_AS(sweep_oracle(clients, Metric::linf(), f, 0.1), std::invalid_argument);
}

TEST_CASE("line scheme covers the unit square within its guarantee") {
    const std::vector<Point> clients = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    const LineSearchResult res = any_line_ptas(clients, CostModel::power(1.0), 0.25);
    check_result(res, clients);
    const double opt = std::sqrt(0.5);
    CHECK(res.cover.cost >= opt - 1e-9);
    CHECK(res.cover.cost <= 1.25 * opt + 1e-9);
}

TEST_CASE("line scheme requires linear cost and positive epsilon") {
    const std::vector<Point> clients = {{0, 0}, {1, 1}};
    CHECK_THROWS_AS(any_line_ptas(clients, CostModel::power(2.0), 0.2), std::invalid_argument);
    CHECK_THROWS_AS(any_line_ptas(clients, CostModel::power(1.0), 0.0), std::invalid_argument);
}

TEST_CASE("line scheme handles collinear clients exactly") {
    const LineSearchResult res =
        any_line_ptas({{0, 0}, {1, 2}, {2, 4}}, CostModel::power(1.0), 0.5);
    CHECK(res.cover.cost <= 1e-9);
}

TEST_CASE("line scheme guarantee is stable under quarter turns") {
    std::mt19937_64 rng(79);
    for (int it = 0; it < 10; ++it) {
        const auto clients = random_clients(rng, 5);
        const CostModel f = CostModel::power(1.0);
        const double base = any_line_ptas(clients, f, 0.5).cover.cost;
        const double turned = any_line_ptas(rotated(clients, std::acos(-1.0) / 2), f, 0.5).cover.cost;
        // Candidate grids land differently after a turn, but both runs sit
        // between OPT and (1+eps)OPT, so they bracket each other.
        CHECK(std::max(base, turned) <= 1.5 * std::min(base, turned) + 1e-9);
    }
}

TEST_CASE("sweep reference stays above the schemes that respect it") {
    std::mt19937_64 rng(83);
    for (int it = 0; it < 12; ++it) {
        const auto clients = random_clients(rng, 5);
        const CostModel f = CostModel::power(1.0);
        const LineSearchResult sweep = sweep_oracle(clients, Metric::l2(), f, 0.02);
        check_result(sweep, clients);
        const LineSearchResult cons = any_line_constant(clients, Metric::l2(), f, false);
        CHECK(cons.cover.cost <= 4.0 * sweep.cover.cost + 1e-9);
        const LineSearchResult ptas = any_line_ptas(clients, f, 0.5);
        CHECK(ptas.cover.cost <= 1.5 * sweep.cover.cost + 1e-9);
    }
}

TEST_CASE("sweep reference rejects absurd resolutions") {
    CHECK_THROWS_AS(sweep_oracle({{0, 0}, {1, 1}}, Metric::l2(), CostModel::power(1.0), 1e-9),
                    SizeLimitError);
    CHECK_THROWS_AS(sweep_oracle({{0, 0}, {1, 1}}, Metric::l2(), CostModel::power(1.0), 0.0),
                    std::invalid_argument);
}
