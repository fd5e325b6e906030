#include "chroma/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>

namespace chroma {

int RunReport::min_colors() const
{
    int best = -1;
    for (const auto& r : records)
        if (best < 0 || r.num_colors < best)
            best = r.num_colors;
    return best;
}

double RunReport::avg_colors() const
{
    if (records.empty())
        return -1.0;
    double sum = 0.0;
    for (const auto& r : records)
        sum += r.num_colors;
    return sum / static_cast<double>(records.size());
}

bool RunReport::any_optimal() const
{
    for (const auto& r : records)
        if (r.optimal)
            return true;
    return false;
}

double RunReport::avg_time_to_best() const
{
    if (records.empty())
        return -1.0;
    double sum = 0.0;
    for (const auto& r : records)
        sum += r.time_to_best;
    return sum / static_cast<double>(records.size());
}

RunReport run_instance(const Graph& g, const std::string& name,
    std::uint64_t seed_lo, std::uint64_t seed_hi, const SolverConfig& cfg)
{
    RunReport report;
    report.instance = name;
    report.n = g.num_vertices();
    report.m = g.num_edges();
    for (std::uint64_t s = seed_lo; s <= seed_hi; ++s) {
        SolverConfig run_cfg = cfg;
        run_cfg.seed = s;
        SolveResult r = solve(g, run_cfg);
        report.records.push_back(
            {s, r.num_colors, r.lb_final, r.optimal, r.time_to_best});
    }
    return report;
}

std::vector<std::string> load_manifest(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open manifest '" + path + "'");
    auto base = std::filesystem::path(path).parent_path();
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
            line.pop_back();
        std::size_t i = 0;
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        line.erase(0, i);
        if (line.empty())
            continue;
        std::filesystem::path p(line);
        out.push_back(p.is_absolute() ? p.string() : (base / p).string());
    }
    return out;
}

std::vector<std::string> discover_instances(const std::string& dir)
{
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir))
        throw std::runtime_error("not a directory: '" + dir + "'");
    std::vector<std::string> out;
    for (const auto& e : fs::directory_iterator(dir)) {
        if (!e.is_regular_file())
            continue;
        auto ext = e.path().extension().string();
        if (ext == ".col" || ext == ".edges" || ext == ".txt" || ext == ".graph"
            || ext == ".mtx")
            out.push_back(e.path().string());
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

    std::string fmt1(double x)
    {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.1f", x);
        return buf;
    }

    std::string fmt3(double x)
    {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3f", x);
        return buf;
    }

} // namespace

void write_csv(std::ostream& out, const std::vector<RunReport>& reports)
{
    out << "instance,n,m,min,avg,optimal_any,avg_time_to_best\n";
    for (const auto& r : reports) {
        if (r.failed) {
            out << r.instance << ",0,0,-1,-1.0,false," << fmt3(-1.0) << "\n";
            continue;
        }
        out << r.instance << "," << r.n << "," << r.m << "," << r.min_colors()
            << "," << fmt1(r.avg_colors()) << ","
            << (r.any_optimal() ? "true" : "false") << ","
            << fmt3(r.avg_time_to_best()) << "\n";
    }
}

void print_table(std::ostream& out, const std::vector<RunReport>& reports)
{
    std::size_t name_w = 8;
    for (const auto& r : reports)
        name_w = std::max(name_w, r.instance.size());
    out << std::left << std::setw(static_cast<int>(name_w) + 2) << "instance"
        << std::right << std::setw(10) << "n" << std::setw(12) << "m"
        << std::setw(6) << "min" << std::setw(9) << "avg" << std::setw(9)
        << "optimal" << std::setw(12) << "time" << "\n";
    for (const auto& r : reports) {
        if (r.failed) {
            out << std::left << std::setw(static_cast<int>(name_w) + 2)
                << r.instance << "  error: " << r.error << "\n";
            continue;
        }
        out << std::left << std::setw(static_cast<int>(name_w) + 2)
            << r.instance << std::right << std::setw(10) << r.n
            << std::setw(12) << r.m << std::setw(6) << r.min_colors()
            << std::setw(9) << fmt1(r.avg_colors()) << std::setw(9)
            << (r.any_optimal() ? "yes" : "no") << std::setw(12)
            << fmt3(r.avg_time_to_best()) << "\n";
    }
}

} // namespace chroma
