#include <chrono>
#include <filesystem>
#include <iostream>

#include "CLI11.hpp"

#include "diskcover/diskcover.hpp"

namespace {

using namespace diskcover;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Metric parse_metric(const std::string& s) {
    if (s == "inf" || s == "INF") return Metric::linf();
    try {
        return Metric::lp(std::stod(s));
    } catch (const std::exception&) {
        throw UsageError("invalid metric: " + s);
    }
}

// One of the three solution shapes, whichever the algorithm produced.
struct AnySolution {
    Cover cover;
    std::optional<Line> line;
    std::optional<CoveringTour> tour;

    double cost() const { return tour ? tour->total_cost : cover.cost; }

    void save(const std::string& path) const {
        if (tour) save_solution(path, *tour);
        else if (line) save_solution(path, LineSearchResult{*line, cover, 0.0});
        else save_solution(path, cover);
    }
};

LineInstance1D to_1d(const Instance& inst, const std::string& alg) {
    if (!inst.servers || inst.servers->empty()) throw UsageError(alg + " needs a 'servers' list");
    LineInstance1D li;
    li.alpha = inst.cost.alpha;
    for (const Point& q : inst.clients) {
        if (q.y != 0.0) throw UsageError(alg + " needs clients on the x-axis");
        li.clients.push_back(q.x);
    }
    for (const Point& q : *inst.servers) {
        if (q.y != 0.0) throw UsageError(alg + " needs servers on the x-axis");
        li.servers.push_back(q.x);
    }
    return li;
}

double tour_weight_of(const Instance& inst, const std::string& alg) {
    if (!inst.cost.tour_weight) throw UsageError(alg + " needs 'tour_weight' (flag or instance field)");
    return *inst.cost.tour_weight;
}

void require_square_metric(const Instance& inst, const std::string& alg) {
    if (!inst.metric.is_inf()) throw UsageError(alg + " covers with squares; set metric.p to \"inf\"");
}

AnySolution dispatch(const std::string& alg, const Instance& inst, double epsilon) {
    AnySolution out;
    const CostModel& f = inst.cost;
    if (alg == "cc" || alg == "ccg" || alg == "gg" || alg == "exact1d") {
        const LineInstance1D li = to_1d(inst, alg);
        if (alg == "cc") out.cover = cc_cover(li);
        else if (alg == "ccg") out.cover = ccg_cover(li);
        else if (alg == "gg") out.cover = gg_cover(li);
        else out.cover = exact_1d(li);
        return out;
    }
    if (alg == "dp-linear") {
        if (f.alpha != 1.0) throw UsageError("dp-linear is exact for alpha=1 only; use dp-super");
        out.cover = dp_linear(inst.clients, inst.metric);
        return out;
    }
    if (alg == "dp-super") {
        out.cover = dp_superlinear(inst.clients, inst.metric, f);
        return out;
    }
    if (alg == "dp-squares") {
        require_square_metric(inst, alg);
        out.cover = dp_squares(inst.clients, f);
        return out;
    }
    if (alg == "sg" || alg == "sgg") {
        require_square_metric(inst, alg);
        out.cover = (alg == "sg") ? sg_cover(inst.clients, f) : sgg_cover(inst.clients, f);
        return out;
    }
    if (alg == "fptas-h") {
        const LineSearchResult res = fptas_horizontal(inst.clients, inst.metric, f, epsilon);
        out.cover = res.cover;
        out.line = res.line;
        return out;
    }
    if (alg == "line-const") {
        const LineSearchResult res = any_line_constant(inst.clients, inst.metric, f, false);
        out.cover = res.cover;
        out.line = res.line;
        return out;
    }
    if (alg == "line-ptas") {
        if (f.alpha != 1.0) throw UsageError("line-ptas needs alpha=1");
        const LineSearchResult res = any_line_ptas(inst.clients, f, epsilon);
        out.cover = res.cover;
        out.line = res.line;
        return out;
    }
    if (alg == "sweep-oracle") {
        const LineSearchResult res = sweep_oracle(inst.clients, inst.metric, f, epsilon);
        out.cover = res.cover;
        out.line = res.line;
        return out;
    }
    if (alg == "oracle-line") {
        out.cover = oracle_line_exact(inst.clients, inst.metric, f);
        return out;
    }
    if (alg == "mcct-circum" || alg == "mcct-heur" || alg == "mcct-exact") {
        const double c = tour_weight_of(inst, alg);
        if (alg == "mcct-circum") {
            out.tour = circumcenter_solution(inst.clients, c);
        } else if (alg == "mcct-heur") {
            out.tour = cluster_and_tour(inst.clients, c, epsilon);
        } else {
            const std::size_t cap = inst.max_disks
                                        ? static_cast<std::size_t>(*inst.max_disks)
                                        : std::min<std::size_t>(5, std::max<std::size_t>(inst.clients.size(), 1));
            out.tour = exact_small_mcct(inst.clients, c, GridSpec{epsilon, {0.0, 0.0}}, cap);
        }
        out.cover.disks = out.tour->disks;
        out.cover.cost = out.tour->cover_cost;
        return out;
    }
    throw UsageError("unknown algorithm: " + alg);
}

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

void append_report(const std::string& path, const std::string& instance, const std::string& alg,
                   double cost, std::optional<double> oracle, double runtime_ms,
                   std::uint64_t seed) {
    const bool fresh = !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("cannot write report: " + path);
    if (fresh) out << "instance,algorithm,cost,oracle,ratio,runtime_ms,seed\n";
    out << instance << "," << alg << "," << fmt(cost) << ",";
    if (oracle) out << fmt(*oracle) << "," << fmt(cost / *oracle);
    else out << ",";
    out << "," << fmt(runtime_ms) << "," << seed << "\n";
}

void render_to(const std::string& path, const Instance& inst, const AnySolution* sol) {
    std::vector<Disk> disks;
    std::vector<Point> tour;
    const Line* line = nullptr;
    if (sol) {
        disks = sol->cover.disks;
        for (Disk& d : disks) d.metric = inst.metric;
        if (sol->tour) {
            tour = sol->tour->tour;
            for (std::size_t i = 0; i < disks.size() && i < sol->tour->disks.size(); ++i)
                disks[i].metric = Metric::l2();
        }
        if (sol->line) line = &*sol->line;
    }
    const std::vector<Point> servers = inst.servers.value_or(std::vector<Point>{});
    write_svg(path, render_svg(inst.clients, servers, disks, tour, line));
}

struct CommonFlags {
    std::string metric;
    double alpha = -1.0;
    double tour_weight = -1.0;

    void apply(Instance& inst) const {
        if (!metric.empty()) inst.metric = parse_metric(metric);
        if (alpha > 0.0) {
            inst.cost = CostModel::power(alpha);
        }
        if (tour_weight > 0.0) inst.cost.tour_weight = tour_weight;
    }
};

std::string stem_of(const std::string& path) { return std::filesystem::path(path).stem().string(); }

double run_timed(const std::string& alg, const Instance& inst, double epsilon, AnySolution& sol) {
    const auto t0 = std::chrono::steady_clock::now();
    sol = dispatch(alg, inst, epsilon);
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void save_and_check(const std::string& path, const Instance& inst, const AnySolution& sol) {
    sol.save(path);
    const Solution loaded = load_solution(path);
    if (!validate_solution(inst, loaded))
        throw std::runtime_error("internal error: emitted solution failed re-validation");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimum-cost disk cover toolkit: generators, algorithms, reports, rendering"};
    app.require_subcommand(1);

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "Generate an instance file");
    std::string gen_kind, gen_output;
    GenParams gp;
    std::uint64_t gen_seed = 1;
    int gen_max_disks = 0;
    CommonFlags gen_flags;
    gen_cmd->add_option("--kind", gen_kind, "uniform-square|gaussian-clusters|gg-tight|sgg-area|collinear|circle")->required();
    gen_cmd->add_option("--output", gen_output, "instance file to write")->required();
    gen_cmd->add_option("--n", gp.n, "number of clients");
    gen_cmd->add_option("--m", gp.m, "number of servers (1D instances)");
    gen_cmd->add_option("--epsilon", gp.epsilon, "family parameter");
    gen_cmd->add_option("--radius", gp.radius, "circle radius");
    gen_cmd->add_option("--clusters", gp.clusters, "gaussian cluster count");
    gen_cmd->add_option("--side", gp.side, "bounding box side");
    gen_cmd->add_option("--seed", gen_seed, "random seed");
    gen_cmd->add_option("--metric", gen_flags.metric, "metric exponent p or 'inf'");
    gen_cmd->add_option("--alpha", gen_flags.alpha, "cost exponent");
    gen_cmd->add_option("--tour-weight", gen_flags.tour_weight, "per-radius tour weight C");
    gen_cmd->add_option("--max-disks", gen_max_disks, "disk budget hint");
    gen_cmd->callback([&] {
        Instance inst = generate(gen_kind, gp, gen_seed);
        gen_flags.apply(inst);
        if (gen_max_disks > 0) inst.max_disks = gen_max_disks;
        save_instance(gen_output, inst);
    });

    // run
    auto* run_cmd = app.add_subcommand("run", "Run one algorithm on one instance");
    std::string run_alg, run_input, run_output = "solution.json", run_report, run_svg;
    double run_eps = 0.1;
    std::uint64_t run_seed = 0;
    CommonFlags run_flags;
    run_cmd->add_option("--alg", run_alg, "algorithm id")->required();
    run_cmd->add_option("--input", run_input, "instance file")->required();
    run_cmd->add_option("--output", run_output, "solution file to write");
    run_cmd->add_option("--epsilon", run_eps,
                        "epsilon for approximation schemes; sweep resolution for "
                        "sweep-oracle; grid spacing for mcct-exact");
    run_cmd->add_option("--seed", run_seed, "seed recorded in the report");
    run_cmd->add_option("--metric", run_flags.metric, "override instance metric");
    run_cmd->add_option("--alpha", run_flags.alpha, "override instance alpha");
    run_cmd->add_option("--tour-weight", run_flags.tour_weight, "override instance tour weight");
    run_cmd->add_option("--report", run_report, "CSV report to append to");
    run_cmd->add_option("--svg", run_svg, "render the result to this SVG file");
    run_cmd->callback([&] {
        Instance inst = load_instance(run_input);
        run_flags.apply(inst);
        AnySolution sol;
        const double ms = run_timed(run_alg, inst, run_eps, sol);
        save_and_check(run_output, inst, sol);
        if (!run_report.empty())
            append_report(run_report, stem_of(run_input), run_alg, sol.cost(), std::nullopt, ms, run_seed);
        if (!run_svg.empty()) render_to(run_svg, inst, &sol);
        std::cout << fmt(sol.cost()) << "\n";
    });

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "Generate instances and compare an algorithm against an oracle");
    std::string bench_kind = "uniform-square", bench_alg, bench_oracle, bench_report;
    GenParams bp;
    std::uint64_t bench_seed = 1;
    std::size_t bench_count = 10;
    double bench_eps = 0.1;
    CommonFlags bench_flags;
    bench_cmd->add_option("--kind", bench_kind, "instance family");
    bench_cmd->add_option("--alg", bench_alg, "algorithm id")->required();
    bench_cmd->add_option("--oracle", bench_oracle, "oracle algorithm id (optional)");
    bench_cmd->add_option("--report", bench_report, "CSV report to append to")->required();
    bench_cmd->add_option("--count", bench_count, "number of instances");
    bench_cmd->add_option("--n", bp.n, "clients per instance");
    bench_cmd->add_option("--m", bp.m, "servers per instance");
    bench_cmd->add_option("--epsilon", bench_eps, "epsilon for approximation schemes");
    bench_cmd->add_option("--side", bp.side, "bounding box side");
    bench_cmd->add_option("--seed", bench_seed, "base seed");
    bench_cmd->add_option("--metric", bench_flags.metric, "metric exponent p or 'inf'");
    bench_cmd->add_option("--alpha", bench_flags.alpha, "cost exponent");
    bench_cmd->add_option("--tour-weight", bench_flags.tour_weight, "per-radius tour weight C");
    bench_cmd->callback([&] {
        for (std::size_t i = 0; i < bench_count; ++i) {
            const std::uint64_t seed = bench_seed + i;
            Instance inst = generate(bench_kind, bp, seed);
            bench_flags.apply(inst);
            AnySolution sol;
            const double ms = run_timed(bench_alg, inst, bench_eps, sol);
            std::optional<double> oracle;
            if (!bench_oracle.empty()) {
                AnySolution osol;
                run_timed(bench_oracle, inst, bench_eps, osol);
                oracle = osol.cost();
            }
            append_report(bench_report, bench_kind + "-" + std::to_string(seed), bench_alg,
                          sol.cost(), oracle, ms, seed);
        }
    });

    // render
    auto* render_cmd = app.add_subcommand("render", "Render an instance (and optional solution) to SVG");
    std::string render_input, render_solution, render_out;
    render_cmd->add_option("--input", render_input, "instance file")->required();
    render_cmd->add_option("--solution", render_solution, "solution file");
    render_cmd->add_option("--svg", render_out, "SVG file to write")->required();
    render_cmd->callback([&] {
        const Instance inst = load_instance(render_input);
        if (render_solution.empty()) {
            render_to(render_out, inst, nullptr);
            return;
        }
        const Solution s = load_solution(render_solution);
        AnySolution sol;
        sol.cover.disks = s.disks;
        sol.cover.cost = s.cost;
        sol.line = s.line;
        if (s.tour) {
            CoveringTour t;
            t.tour = *s.tour;
            t.disks = s.disks;
            sol.tour = t;
        }
        render_to(render_out, inst, &sol);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 3;
    } catch (const ValueError& e) {
        std::cerr << "value error: " << e.what() << "\n";
        return 3;
    } catch (const SizeLimitError& e) {
        std::cerr << "size limit: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
