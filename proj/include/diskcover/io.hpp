#pragma once

#include <fstream>
#include <optional>
#include <string>

#include "json.hpp"

#include "diskcover/line_search.hpp"
#include "diskcover/mcct.hpp"

namespace diskcover {

struct ValueError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// On-disk view of a solution file.
struct Solution {
    double cost = 0.0;
    std::vector<Disk> disks;
    std::optional<std::vector<Point>> tour;
    std::optional<Line> line;
};

namespace detail {

inline double number_field(const nlohmann::json& j, const std::string& name) {
    if (!j.is_number()) throw SchemaError("field '" + name + "' must be a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw ValueError("field '" + name + "' must be finite");
    return v;
}

inline Point point_field(const nlohmann::json& j, const std::string& name, bool allow_1d) {
    if (!j.is_array() || j.size() < 1 || j.size() > 2 || (j.size() == 1 && !allow_1d))
        throw SchemaError("field '" + name + "' must be an [x, y] pair");
    Point q;
    q.x = number_field(j[0], name + "[0]");
    q.y = (j.size() == 2) ? number_field(j[1], name + "[1]") : 0.0;
    return q;
}

inline std::vector<Point> points_field(const nlohmann::json& j, const std::string& name,
                                       bool allow_1d) {
    if (!j.is_array()) throw SchemaError("field '" + name + "' must be a list of points");
    std::vector<Point> pts;
    pts.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        pts.push_back(point_field(j[i], name + "[" + std::to_string(i) + "]", allow_1d));
    return pts;
}

inline nlohmann::json dump_points(const std::vector<Point>& pts) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Point& q : pts) arr.push_back({q.x, q.y});
    return arr;
}

inline nlohmann::json parse_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::out_of_range& e) {
        throw ValueError("non-finite number in '" + path + "': " + e.what());
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError("malformed document '" + path + "': " + e.what());
    }
    if (!j.is_object()) throw SchemaError("field '<root>' must be an object");
    return j;
}

inline void write_document(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path);
    out << j.dump(2) << "\n";
    if (!out) throw std::runtime_error("cannot write file: " + path);
}

}  // namespace detail

inline Instance load_instance(const std::string& path) {
    const nlohmann::json j = detail::parse_document(path);
    Instance inst;
    inst.metric = Metric::l2();
    if (j.contains("metric")) {
        const auto& jm = j.at("metric");
        if (!jm.is_object() || !jm.contains("p"))
            throw SchemaError("field 'metric' must be an object with 'p'");
        const auto& jp = jm.at("p");
        if (jp.is_string()) {
            if (jp.get<std::string>() != "inf")
                throw SchemaError("field 'metric.p' must be a number or \"inf\"");
            inst.metric = Metric::linf();
        } else {
            const double p = detail::number_field(jp, "metric.p");
            if (p < 1.0) throw ValueError("field 'metric.p' must be >= 1");
            inst.metric = Metric::lp(p);
        }
    }
    double alpha = 1.0;
    if (j.contains("alpha")) {
        alpha = detail::number_field(j.at("alpha"), "alpha");
        if (alpha < 1.0) throw ValueError("field 'alpha' must be >= 1");
    }
    inst.cost = CostModel::power(alpha);
    if (j.contains("tour_weight")) {
        const double c = detail::number_field(j.at("tour_weight"), "tour_weight");
        if (c <= 0.0) throw ValueError("field 'tour_weight' must be positive");
        inst.cost.tour_weight = c;
    }
    if (j.contains("max_disks")) {
        if (!j.at("max_disks").is_number_integer())
            throw SchemaError("field 'max_disks' must be an integer");
        const int v = j.at("max_disks").get<int>();
        if (v < 1) throw ValueError("field 'max_disks' must be >= 1");
        inst.max_disks = v;
    }
    if (!j.contains("clients")) throw SchemaError("field 'clients' is required");
    inst.clients = detail::points_field(j.at("clients"), "clients", false);
    if (j.contains("servers")) inst.servers = detail::points_field(j.at("servers"), "servers", true);
    return inst;
}

inline void save_instance(const std::string& path, const Instance& inst) {
    nlohmann::json j;
    if (inst.metric.is_inf()) j["metric"]["p"] = "inf";
    else j["metric"]["p"] = inst.metric.p;
    j["alpha"] = inst.cost.alpha;
    if (inst.cost.tour_weight) j["tour_weight"] = *inst.cost.tour_weight;
    if (inst.max_disks) j["max_disks"] = *inst.max_disks;
    j["clients"] = detail::dump_points(inst.clients);
    if (inst.servers) j["servers"] = detail::dump_points(*inst.servers);
    detail::write_document(path, j);
}

namespace detail {

inline nlohmann::json disks_json(const std::vector<Disk>& disks) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Disk& d : disks)
        arr.push_back({{"center", {d.center.x, d.center.y}}, {"radius", d.radius}});
    return arr;
}

}  // namespace detail

inline void save_solution(const std::string& path, const Cover& cover) {
    nlohmann::json j;
    j["cost"] = cover.cost;
    j["disks"] = detail::disks_json(cover.disks);
    detail::write_document(path, j);
}

inline void save_solution(const std::string& path, const LineSearchResult& res) {
    nlohmann::json j;
    j["cost"] = res.cover.cost;
    j["disks"] = detail::disks_json(res.cover.disks);
    j["line"] = {{"anchor", {res.line.anchor.x, res.line.anchor.y}},
                 {"direction", {res.line.dir.x, res.line.dir.y}}};
    detail::write_document(path, j);
}

inline void save_solution(const std::string& path, const CoveringTour& t) {
    nlohmann::json j;
    j["cost"] = t.total_cost;
    j["disks"] = detail::disks_json(t.disks);
    j["tour"] = detail::dump_points(t.tour);
    detail::write_document(path, j);
}

inline Solution load_solution(const std::string& path) {
    const nlohmann::json j = detail::parse_document(path);
    Solution sol;
    if (!j.contains("cost")) throw SchemaError("field 'cost' is required");
    sol.cost = detail::number_field(j.at("cost"), "cost");
    if (!j.contains("disks")) throw SchemaError("field 'disks' is required");
    const auto& jd = j.at("disks");
    if (!jd.is_array()) throw SchemaError("field 'disks' must be a list");
    for (std::size_t i = 0; i < jd.size(); ++i) {
        const std::string name = "disks[" + std::to_string(i) + "]";
        const auto& d = jd[i];
        if (!d.is_object() || !d.contains("center") || !d.contains("radius"))
            throw SchemaError("field '" + name + "' must have center and radius");
        Disk disk;
        disk.center = detail::point_field(d.at("center"), name + ".center", false);
        disk.radius = detail::number_field(d.at("radius"), name + ".radius");
        if (disk.radius < 0.0) throw ValueError("field '" + name + ".radius' must be >= 0");
        sol.disks.push_back(disk);
    }
    if (j.contains("tour")) sol.tour = detail::points_field(j.at("tour"), "tour", false);
    if (j.contains("line")) {
        const auto& jl = j.at("line");
        if (!jl.is_object() || !jl.contains("anchor") || !jl.contains("direction"))
            throw SchemaError("field 'line' must have anchor and direction");
        Line ell;
        ell.anchor = detail::point_field(jl.at("anchor"), "line.anchor", false);
        ell.dir = detail::point_field(jl.at("direction"), "line.direction", false);
        const double n = std::hypot(ell.dir.x, ell.dir.y);
        if (n == 0.0) throw ValueError("field 'line.direction' must be non-zero");
        ell.dir.x /= n;
        ell.dir.y /= n;
        sol.line = ell;
    }
    return sol;
}

// Re-check a stored solution against its instance: every client covered and
// the stored cost consistent with the disks (plus tour, when present).
inline bool validate_solution(const Instance& inst, const Solution& sol, double tol = 1e-6) {
    std::vector<Disk> disks = sol.disks;
    for (Disk& d : disks) d.metric = inst.metric;
    if (!covers_all(disks, inst.clients, tol)) return false;
    double expect = cover_cost(disks, inst.cost);
    if (sol.tour) {
        const double c = inst.cost.tour_weight.value_or(1.0);
        std::vector<std::size_t> order(sol.tour->size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        expect = detail::tour_length(*sol.tour, order) + c * expect;
    }
    return std::fabs(expect - sol.cost) <= tol * std::max(1.0, std::fabs(sol.cost));
}

}  // namespace diskcover
