#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "chroma/bench.hpp"
#include "chroma/graph.hpp"
#include "chroma/solution.hpp"
#include "chroma/solver.hpp"

namespace {

using chroma::InputFormat;

InputFormat format_from_name(const std::string& name)
{
    if (name == "dimacs")
        return InputFormat::dimacs;
    if (name == "edgelist")
        return InputFormat::edgelist;
    return InputFormat::autodetect;
}

struct SolveArgs {
    std::string file;
    std::string format = "auto";
    std::string output;
    bool json = false;
    chroma::SolverConfig cfg;
};

int run_solve(const SolveArgs& args)
{
    auto parsed = chroma::load_graph(args.file, format_from_name(args.format));
    const auto& g = parsed.graph;
    if (parsed.duplicate_edges || parsed.self_loops)
        std::cerr << "c dropped " << parsed.duplicate_edges
                  << " duplicate edge(s) and " << parsed.self_loops
                  << " self-loop(s)\n";

    auto res = chroma::solve(g, args.cfg);
    auto check = chroma::verify_coloring(g, res.coloring);
    if (!check.ok) {
        std::cerr << "internal error: solver emitted an improper coloring\n";
        return 3;
    }

    if (args.json) {
        nlohmann::json j{
            {"instance", std::filesystem::path(args.file).stem().string()},
            {"n", g.num_vertices()},
            {"m", g.num_edges()},
            {"colors", res.num_colors},
            {"lb", res.lb_final},
            {"optimal", res.optimal},
            {"lb_stage", chroma::to_string(res.lb_stage)},
            {"ub_stage", chroma::to_string(res.ub_stage)},
            {"time_to_best", res.time_to_best},
            {"iterations", res.iterations},
            {"seed", args.cfg.seed},
            {"duplicate_edges_dropped", parsed.duplicate_edges},
            {"self_loops_dropped", parsed.self_loops},
        };
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "s " << res.num_colors << " lb=" << res.lb_final
                  << " optimal=" << (res.optimal ? "true" : "false")
                  << " time=" << res.time_to_best << "\n";
    }

    if (!args.output.empty())
        chroma::write_solution(res.coloring, g, args.output);
    return 0;
}

struct BenchArgs {
    std::string instances;
    std::string seeds = "1..10";
    std::string out;
    int jobs = 1;
    chroma::SolverConfig cfg;
};

std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& s)
{
    auto dots = s.find("..");
    if (dots == std::string::npos)
        throw std::invalid_argument("--seeds expects <a>..<b>");
    std::size_t used_a = 0, used_b = 0;
    std::uint64_t a = std::stoull(s.substr(0, dots), &used_a);
    std::uint64_t b = std::stoull(s.substr(dots + 2), &used_b);
    if (used_a != dots || used_b != s.size() - dots - 2 || a > b)
        throw std::invalid_argument("--seeds expects <a>..<b> with a <= b");
    return {a, b};
}

int run_bench(const BenchArgs& args)
{
    auto [seed_lo, seed_hi] = parse_seed_range(args.seeds);

    std::vector<std::string> files;
    if (std::filesystem::is_directory(args.instances))
        files = chroma::discover_instances(args.instances);
    else
        files = chroma::load_manifest(args.instances);
    if (files.empty())
        throw std::runtime_error("no instances found in '" + args.instances + "'");

    std::vector<chroma::RunReport> reports(files.size());
    std::atomic<std::size_t> next{0};
    int jobs = std::max(1, std::min<int>(args.jobs, static_cast<int>(files.size())));

    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= files.size())
                return;
            auto& report = reports[i];
            report.instance = std::filesystem::path(files[i]).stem().string();
            try {
                auto parsed = chroma::load_graph(files[i]);
                report = chroma::run_instance(parsed.graph, report.instance,
                    seed_lo, seed_hi, args.cfg);
            } catch (const std::exception& e) {
                report.failed = true;
                report.error = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();

    chroma::print_table(std::cout, reports);
    for (const auto& r : reports)
        if (r.failed)
            std::cerr << "error: " << r.instance << ": " << r.error << "\n";

    if (!args.out.empty()) {
        std::ofstream csv(args.out);
        if (!csv)
            throw std::runtime_error("cannot open '" + args.out + "' for writing");
        chroma::write_csv(csv, reports);
    }
    return 0;
}

void add_solver_flags(CLI::App* cmd, chroma::SolverConfig& cfg)
{
    cmd->add_option("--cutoff", cfg.cutoff, "time budget per run, seconds")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--alpha", cfg.alpha, "mdd reorder probability")
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--lambda", cfg.lambda, "mixed-degree weight")
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--exactlb-budget", cfg.exactlb_budget,
           "budget per exact lower-bound call, seconds")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--size-upper", cfg.size_upper,
           "test-set cap for the exact lower bound")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--clique-budget", cfg.clique_budget,
           "budget per clique-heuristic call, seconds")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--deterministic", cfg.deterministic_clock,
        "count work units instead of wall time; runs become reproducible");
    cmd->add_option("--tick", cfg.seconds_per_tick,
           "simulated seconds per work unit in deterministic mode")
        ->check(CLI::PositiveNumber);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"graph coloring solver (clique bounds, low-degree reduction,"
                 " core/mixed-degree greedy)"};
    app.require_subcommand(1);
    app.footer("exit codes: 0 success, 2 unreadable input or bad flags, "
               "3 internal invariant violation");

    SolveArgs sargs;
    auto* solve_cmd = app.add_subcommand("solve", "color one graph");
    solve_cmd->add_option("file", sargs.file, "input graph")->required();
    solve_cmd->add_option("--format", sargs.format, "input format")
        ->check(CLI::IsMember({"dimacs", "edgelist", "auto"}));
    solve_cmd->add_option("--seed", sargs.cfg.seed, "random seed");
    solve_cmd->add_option("--output", sargs.output, "write the coloring here");
    solve_cmd->add_flag("--json", sargs.json, "emit a JSON summary");
    add_solver_flags(solve_cmd, sargs.cfg);

    BenchArgs bargs;
    auto* bench_cmd = app.add_subcommand("bench", "run a multi-seed benchmark");
    bench_cmd->add_option("--instances", bargs.instances,
                 "instance directory or manifest file (one path per line,"
                 " '#' comments)")
        ->required();
    bench_cmd->add_option("--seeds", bargs.seeds, "seed range <a>..<b>");
    bench_cmd->add_option("--out", bargs.out, "write a CSV report here");
    bench_cmd->add_option("--jobs", bargs.jobs, "parallel instances")
        ->check(CLI::PositiveNumber);
    add_solver_flags(bench_cmd, bargs.cfg);

    try {
        app.parse(argc, argv);
        if (*solve_cmd)
            return run_solve(sargs);
        return run_bench(bargs);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const chroma::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
