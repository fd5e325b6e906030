#ifndef CHROMA_BENCH_HPP
#define CHROMA_BENCH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "chroma/solver.hpp"

namespace chroma {

struct SeedRecord {
    std::uint64_t seed;
    int num_colors;
    int lb_final;
    bool optimal;
    double time_to_best;
};

/// Per-instance outcome over a set of seeds, reported min-and-average the
/// way result tables usually are.
struct RunReport {
    std::string instance;
    int n = 0;
    long long m = 0;
    std::vector<SeedRecord> records;
    bool failed = false;
    std::string error;

    int min_colors() const;
    double avg_colors() const; // arithmetic mean, rendered to 1 decimal
    bool any_optimal() const;
    double avg_time_to_best() const;
};

// runs solve once per seed in [seed_lo, seed_hi]; cfg.seed is overwritten
RunReport run_instance(const Graph& g, const std::string& name,
    std::uint64_t seed_lo, std::uint64_t seed_hi, const SolverConfig& cfg);

// one path per line, '#' comments; relative paths resolve against the
// manifest's directory
std::vector<std::string> load_manifest(const std::string& path);

// all regular files under dir with a recognized extension, sorted by name
std::vector<std::string> discover_instances(const std::string& dir);

// header: instance,n,m,min,avg,optimal_any,avg_time_to_best
void write_csv(std::ostream& out, const std::vector<RunReport>& reports);

void print_table(std::ostream& out, const std::vector<RunReport>& reports);

} // namespace chroma

#endif
