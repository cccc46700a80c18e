#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <vector>

#include <diskcover/discrete1d.hpp>

using namespace diskcover;
using Catch::Approx;

namespace {

LineInstance1D inst(std::vector<double> servers, std::vector<double> clients, double alpha = 1.0) {
    return LineInstance1D{std::move(servers), std::move(clients), alpha};
}

std::vector<std::pair<double, double>> used_disks(const Cover& c) {
    std::vector<std::pair<double, double>> out;
    for (const Disk& d : c.disks)
        if (d.radius > 0.0) out.emplace_back(d.center.x, d.radius);
    std::sort(out.begin(), out.end());
    return out;
}

bool covered_1d(const Cover& c, const std::vector<double>& clients) {
    for (double x : clients) {
        bool ok = false;
        for (const Disk& d : c.disks)
            if (std::fabs(x - d.center.x) <= d.radius + 1e-9) ok = true;
        if (!ok) return false;
    }
    return true;
}

LineInstance1D random_inst(std::mt19937_64& rng, std::size_t max_n, std::size_t max_m,
                           double alpha = 1.0) {
    std::uniform_real_distribution<double> u(0.0, 10.0);
    LineInstance1D in;
    in.alpha = alpha;
    in.servers.resize(1 + rng() % max_m);
    in.clients.resize(1 + rng() % max_n);
    for (double& s : in.servers) s = u(rng);
    for (double& c : in.clients) c = u(rng);
    return in;
}

}  // namespace

TEST_CASE("closest-center assignment") {
    const Cover a = cc_cover(inst({0}, {-3, 3}));
    CHECK(a.cost == Approx(3.0));
    CHECK(used_disks(a) == std::vector<std::pair<double, double>>{{0.0, 3.0}});

    const Cover b = cc_cover(inst({0, 10}, {1, 9}));
    CHECK(b.cost == Approx(2.0));
    CHECK(used_disks(b) == std::vector<std::pair<double, double>>{{0.0, 1.0}, {10.0, 1.0}});

    CHECK(cc_cover(inst({5}, {5})).cost == 0.0);

    // Equidistant clients are assigned to the left server.
    const Cover t = cc_cover(inst({0, 4}, {2}));
    CHECK(used_disks(t) == std::vector<std::pair<double, double>>{{0.0, 2.0}});
}

TEST_CASE("closest-center growth sweep") {
    const Cover a = ccg_cover(inst({0, 10}, {1, 2, 9}));
    CHECK(a.cost == Approx(3.0));
    CHECK(used_disks(a) == std::vector<std::pair<double, double>>{{0.0, 2.0}, {10.0, 1.0}});

    const Cover b = ccg_cover(inst({0}, {1, 2, 3}));
    CHECK(b.cost == Approx(3.0));
    CHECK(used_disks(b) == std::vector<std::pair<double, double>>{{0.0, 3.0}});

    CHECK(ccg_cover(inst({5}, {5})).cost == 0.0);
}

TEST_CASE("global greedy growth") {
    const Cover a = gg_cover(inst({-1.99, 0, 1.99}, {-1, 1}));
    CHECK(a.cost == Approx(1.98).margin(1e-9));
    CHECK(used_disks(a) ==
          std::vector<std::pair<double, double>>{{-1.99, 0.99}, {1.99, 0.99}});

    CHECK(gg_cover(inst({0}, {4})).cost == Approx(4.0));
    CHECK(gg_cover(inst({0, 10}, {1, 2, 9})).cost == Approx(3.0));
}

TEST_CASE("exact dp") {
    const Cover a = exact_1d(inst({-1.99, 0, 1.99}, {-1, 1}));
    CHECK(a.cost == Approx(1.0).margin(1e-9));
    CHECK(used_disks(a) == std::vector<std::pair<double, double>>{{0.0, 1.0}});

    CHECK(exact_1d(inst({0, 10}, {1, 2, 9})).cost == Approx(3.0));
    CHECK(exact_1d(inst({5}, {5})).cost == 0.0);
}

TEST_CASE("superlinear costs change the optimal structure") {
    // alpha=2: two disks of radius 1 (cost 2) beat one of radius 3 (cost 9).
    const Cover a = exact_1d(inst({-2, 2}, {-3, -1, 1, 3}, 2.0));
    CHECK(a.cost == Approx(2.0));
    const Cover g = gg_cover(inst({-2, 2}, {-3, -1, 1, 3}, 2.0));
    CHECK(covered_1d(g, {-3, -1, 1, 3}));
    CHECK(g.cost >= a.cost - 1e-12);
}

TEST_CASE("exhaustive oracle rejects large instances") {
    LineInstance1D big;
    big.servers = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    big.clients = {0.5};
    CHECK_THROWS_AS(oracle_1d_exhaustive(big), SizeLimitError);
}

TEST_CASE("exact dp matches the exhaustive oracle") {
    std::mt19937_64 rng(101);
    for (int it = 0; it < 120; ++it) {
        const double alpha = (it % 3 == 0) ? 2.0 : 1.0;
        const LineInstance1D in = random_inst(rng, 6, 6, alpha);
        const Cover dp = exact_1d(in);
        const Cover oc = oracle_1d_exhaustive(in);
        INFO("iteration " << it);
        CHECK(dp.cost == Approx(oc.cost).margin(1e-9));
        CHECK(covered_1d(dp, in.clients));
    }
}

TEST_CASE("approximation ratios stay inside proven bounds") {
    std::mt19937_64 rng(103);
    for (int it = 0; it < 300; ++it) {
        const LineInstance1D in = random_inst(rng, 12, 12);
        const double opt = exact_1d(in).cost;
        const Cover c1 = cc_cover(in), c2 = ccg_cover(in), c3 = gg_cover(in);
        CHECK(covered_1d(c1, in.clients));
        CHECK(covered_1d(c2, in.clients));
        CHECK(covered_1d(c3, in.clients));
        if (opt > 1e-12) {
            CHECK(c1.cost / opt <= 4.0 + 1e-9);
            CHECK(c2.cost / opt <= 3.0 + 1e-9);
            CHECK(c3.cost / opt <= 2.0 + 1e-9);
        } else {
            CHECK(c1.cost <= 1e-12);
            CHECK(c2.cost <= 1e-12);
            CHECK(c3.cost <= 1e-12);
        }
    }
}

TEST_CASE("greedy growth keeps every client covered as sizes scale") {
    std::mt19937_64 rng(107);
    std::uniform_real_distribution<double> u(0.0, 1000.0);
    LineInstance1D in;
    in.alpha = 1.0;
    in.servers.resize(2000);
    in.clients.resize(2000);
    for (double& s : in.servers) s = u(rng);
    for (double& c : in.clients) c = u(rng);
    const Cover g = gg_cover(in);
    CHECK(covered_1d(g, in.clients));
}
