#pragma once

#include <functional>
#include <queue>
#include <tuple>

#include "diskcover/core.hpp"

namespace diskcover {

// Clients and servers on a line; disks are intervals centered at servers.
struct LineInstance1D {
    std::vector<double> servers;
    std::vector<double> clients;
    double alpha = 1.0;
};

namespace detail {

inline LineInstance1D prepared(LineInstance1D in) {
    if (in.servers.empty()) throw std::invalid_argument("1d instance has no servers");
    for (double v : in.servers)
        if (!std::isfinite(v)) throw std::invalid_argument("non-finite server position");
    for (double v : in.clients)
        if (!std::isfinite(v)) throw std::invalid_argument("non-finite client position");
    std::sort(in.servers.begin(), in.servers.end());
    std::sort(in.clients.begin(), in.clients.end());
    return in;
}

// Index of the server nearest to x; ties go to the left server.
inline std::size_t nearest_server(const std::vector<double>& s, double x) {
    auto it = std::lower_bound(s.begin(), s.end(), x);
    if (it == s.begin()) return 0;
    if (it == s.end()) return s.size() - 1;
    const std::size_t right = static_cast<std::size_t>(it - s.begin());
    return (x - s[right - 1] <= s[right] - x) ? right - 1 : right;
}

inline Cover radii_to_cover(const std::vector<double>& servers, const std::vector<double>& radii,
                            const std::vector<bool>& used, double alpha) {
    const CostModel f = CostModel::power(alpha);
    Cover cov;
    for (std::size_t j = 0; j < servers.size(); ++j)
        if (used[j]) cov.disks.push_back(Disk{{servers[j], 0.0}, radii[j], Metric::l2()});
    cov.cost = cover_cost(cov.disks, f);
    return cov;
}

}  // namespace detail

// Closest-center assignment: every client picks its nearest server, each used
// server takes the radius of its farthest client.
inline Cover cc_cover(const LineInstance1D& input) {
    const LineInstance1D in = detail::prepared(input);
    std::vector<double> radii(in.servers.size(), 0.0);
    std::vector<bool> used(in.servers.size(), false);
    for (double c : in.clients) {
        const std::size_t j = detail::nearest_server(in.servers, c);
        used[j] = true;
        radii[j] = std::max(radii[j], std::fabs(c - in.servers[j]));
    }
    return detail::radii_to_cover(in.servers, radii, used, in.alpha);
}

// Closest-center-with-growth sweep: walk clients left to right; an uncovered
// client is captured by growing the disk that currently extends furthest right
// when that is no more expensive than opening a disk at the nearest server.
inline Cover ccg_cover(const LineInstance1D& input) {
    const LineInstance1D in = detail::prepared(input);
    std::vector<double> radii(in.servers.size(), 0.0);
    std::vector<bool> used(in.servers.size(), false);
    double omega = -std::numeric_limits<double>::infinity();
    std::ptrdiff_t grower = -1;
    for (double c : in.clients) {
        if (c <= omega) continue;
        const std::size_t j = detail::nearest_server(in.servers, c);
        const double d2 = std::fabs(c - in.servers[j]);
        if (grower >= 0 && c - omega <= d2) {
            radii[grower] = c - in.servers[grower];
            omega = c;
        } else {
            used[j] = true;
            radii[j] = std::max(radii[j], d2);
            omega = in.servers[j] + radii[j];
            grower = static_cast<std::ptrdiff_t>(j);
        }
    }
    return detail::radii_to_cover(in.servers, radii, used, in.alpha);
}

// Greedy growth: all server disks start at radius zero; repeatedly capture the
// uncovered client that needs the least radial growth of any one disk. Ties:
// lowest server index, then leftward capture.
inline Cover gg_cover(const LineInstance1D& input) {
    const LineInstance1D in = detail::prepared(input);
    const std::size_t n = in.clients.size(), m = in.servers.size();
    std::vector<double> radii(m, 0.0);
    std::vector<bool> used(m, false);
    if (n == 0) return detail::radii_to_cover(in.servers, radii, used, in.alpha);

    // next[i]/prev[i]: nearest uncovered client index at or beyond i, with path
    // compression in both directions.
    std::vector<std::size_t> nextup(n + 1), prevdn(n + 1);
    for (std::size_t i = 0; i <= n; ++i) { nextup[i] = i; prevdn[i] = i; }
    auto find_up = [&](std::size_t i) -> std::size_t {
        while (nextup[i] != i) { nextup[i] = nextup[nextup[i]]; i = nextup[i]; }
        return i;
    };
    auto find_dn = [&](std::size_t i) -> std::size_t {
        while (prevdn[i] != i) { prevdn[i] = prevdn[prevdn[i]]; i = prevdn[i]; }
        return i;
    };
    // prevdn works on indices shifted by one so slot 0 can mean "no uncovered
    // client to the left"; nextup's slot n means "none to the right".
    auto next_uncovered_at_or_after = [&](std::size_t i) { return find_up(i); };
    auto next_uncovered_at_or_before = [&](std::ptrdiff_t i) -> std::ptrdiff_t {
        if (i < 0) return -1;
        return static_cast<std::ptrdiff_t>(find_dn(static_cast<std::size_t>(i) + 1)) - 1;
    };

    using Event = std::tuple<double, std::size_t, int, std::size_t>;  // growth, server, dir, client
    std::priority_queue<Event, std::vector<Event>, std::greater<Event>> pq;

    auto push_event = [&](std::size_t j, int dir) {
        const double s = in.servers[j];
        if (dir == 0) {
            auto lb = std::lower_bound(in.clients.begin(), in.clients.end(), s);
            std::ptrdiff_t i = next_uncovered_at_or_before(lb - in.clients.begin() - 1);
            if (i >= 0)
                pq.emplace(s - in.clients[i] - radii[j], j, 0, static_cast<std::size_t>(i));
        } else {
            auto lb = std::lower_bound(in.clients.begin(), in.clients.end(), s);
            std::size_t i = next_uncovered_at_or_after(lb - in.clients.begin());
            if (i < n) pq.emplace(in.clients[i] - s - radii[j], j, 1, i);
        }
    };

    std::size_t remaining = n;
    // Containment must use the same |c - s| <= r predicate the radius was built
    // from; recomputing interval endpoints can round the defining client out.
    auto mark_disk = [&](std::size_t j) {
        const double s = in.servers[j], r = radii[j];
        auto first = std::lower_bound(in.clients.begin(), in.clients.end(), s - r);
        std::size_t start = static_cast<std::size_t>(first - in.clients.begin());
        while (start > 0 && std::fabs(in.clients[start - 1] - s) <= r) --start;
        std::size_t i = next_uncovered_at_or_after(start);
        while (i < n && std::fabs(in.clients[i] - s) <= r) {
            nextup[i] = i + 1;
            prevdn[i + 1] = i;  // shifted: slot i+1 now points below itself
            --remaining;
            i = next_uncovered_at_or_after(i + 1);
        }
    };
    for (std::size_t j = 0; j < m; ++j) { push_event(j, 0); push_event(j, 1); }

    while (remaining > 0 && !pq.empty()) {
        auto [g, j, dir, i] = pq.top();
        pq.pop();
        if (nextup[i] != i) {  // client already covered; refresh this lane
            push_event(j, dir);
            continue;
        }
        radii[j] = std::fabs(in.clients[i] - in.servers[j]);
        used[j] = true;
        mark_disk(j);
        push_event(j, 0);
        push_event(j, 1);
    }
    return detail::radii_to_cover(in.servers, radii, used, in.alpha);
}

// Exact minimum-cost cover. Left-to-right DP on the first uncovered client; a
// disk at server j sized to reach clients i..k covers a contiguous run, so the
// suffix after its right end is an independent subproblem.
inline Cover exact_1d(const LineInstance1D& input) {
    const LineInstance1D in = detail::prepared(input);
    const CostModel f = CostModel::power(in.alpha);
    const std::size_t n = in.clients.size(), m = in.servers.size();
    Cover cov;
    if (n == 0) return cov;

    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> memo(n + 1, inf);
    struct Choice { std::size_t server, last; double radius; };
    std::vector<Choice> pick(n + 1);
    memo[n] = 0.0;
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t j = 0; j < m; ++j) {
            const double s = in.servers[j];
            for (std::size_t k = i; k < n; ++k) {
                const double r = std::max(std::fabs(in.clients[i] - s), std::fabs(in.clients[k] - s));
                const double reach = s + r;
                std::size_t next = k + 1;
                while (next < n && in.clients[next] <= reach + 1e-12 * (1.0 + std::fabs(reach)))
                    ++next;
                const double cand = f(r) + memo[next];
                if (cand < memo[i]) {
                    memo[i] = cand;
                    pick[i] = Choice{j, next, r};
                }
                if (next >= n) break;  // larger k only grows the radius
            }
        }
    }
    for (std::size_t i = 0; i < n; i = pick[i].last) {
        cov.disks.push_back(Disk{{in.servers[pick[i].server], 0.0}, pick[i].radius, Metric::l2()});
    }
    cov.cost = cover_cost(cov.disks, f);
    return cov;
}

// Independent reference: try every assignment of radii to servers, radii drawn
// from client distances. Exponential; small instances only.
inline Cover oracle_1d_exhaustive(const LineInstance1D& input) {
    const LineInstance1D in = detail::prepared(input);
    const std::size_t n = in.clients.size(), m = in.servers.size();
    if (n > 9 || m > 9) throw SizeLimitError("oracle_1d_exhaustive limited to 9 clients/servers");
    const CostModel f = CostModel::power(in.alpha);
    Cover cov;
    if (n == 0) return cov;

    std::vector<std::vector<double>> options(m);
    for (std::size_t j = 0; j < m; ++j) {
        options[j].push_back(0.0);
        for (double c : in.clients) options[j].push_back(std::fabs(c - in.servers[j]));
        std::sort(options[j].begin(), options[j].end());
        options[j].erase(std::unique(options[j].begin(), options[j].end()), options[j].end());
    }

    std::vector<double> radii(m, 0.0), best_radii;
    double best = std::numeric_limits<double>::infinity();
    auto covered_all = [&]() {
        for (double c : in.clients) {
            bool hit = false;
            for (std::size_t j = 0; j < m; ++j)
                if (std::fabs(c - in.servers[j]) <= radii[j] + 1e-12) { hit = true; break; }
            if (!hit) return false;
        }
        return true;
    };
    std::function<void(std::size_t, double)> rec = [&](std::size_t j, double cost) {
        if (cost >= best) return;
        if (j == m) {
            if (covered_all()) { best = cost; best_radii = radii; }
            return;
        }
        for (double r : options[j]) {
            radii[j] = r;
            rec(j + 1, cost + f(r));
        }
        radii[j] = 0.0;
    };
    rec(0, 0.0);

    std::vector<bool> used(m, false);
    for (std::size_t j = 0; j < m; ++j) {
        radii[j] = best_radii.empty() ? 0.0 : best_radii[j];
        used[j] = radii[j] > 0.0;
    }
    // Radius-zero servers still matter when a client sits exactly on one.
    for (double c : in.clients)
        for (std::size_t j = 0; j < m; ++j)
            if (c == in.servers[j]) used[j] = true;
    return detail::radii_to_cover(in.servers, radii, used, in.alpha);
}

}  // namespace diskcover
