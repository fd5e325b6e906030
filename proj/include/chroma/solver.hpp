#ifndef CHROMA_SOLVER_HPP
#define CHROMA_SOLVER_HPP

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "chroma/clock.hpp"
#include "chroma/coloring.hpp"
#include "chroma/graph.hpp"

namespace chroma {

struct SolverConfig {
    double cutoff = 60.0;         // wall-clock budget per solve, seconds
    std::uint64_t seed = 1;
    double alpha = 0.2;           // per-pass probability of the mdd reorder
    double lambda = 0.7;          // mixed-degree weight
    double exactlb_budget = 1.0;  // per-call budget for the exact lb step
    int size_upper = 1000;        // test-set cap for the exact lb step
    double clique_budget = 0.05; // per-call budget for the clique heuristic

    // With deterministic_clock, time advances a fixed amount per unit of
    // work instead of following the wall clock, making a run a pure
    // function of (graph, seed, config).
    bool deterministic_clock = false;
    double seconds_per_tick = 1e-3;

    void validate() const; // throws std::invalid_argument
};

enum class BoundStage { none, clique_heuristic, exact_clique, mdd, dsatur };

const char* to_string(BoundStage s);

/// Best bounds on the chromatic number plus the loop control flags.
/// lb_star only grows (valid cliques), ub_star only shrinks (proper
/// colorings of the working graph); the stages record which step last
/// improved each bound.
struct BoundsState {
    int lb_star = 0;
    int ub_star = 0; // initialized to |V| by solve
    int last_lb_e = 0;
    bool exactlb_enabled = true;
    bool reduced_this_iter = false;
    BoundStage lb_stage = BoundStage::none;
    BoundStage ub_stage = BoundStage::none;
};

struct SolveResult {
    Coloring coloring; // proper and total on the input graph
    int num_colors = 0;
    int lb_final = 0;
    bool optimal = false; // lb_final == num_colors
    double time_to_best = 0.0;
    long long iterations = 0;
    BoundStage lb_stage = BoundStage::none; // step that set the final bound
    BoundStage ub_stage = BoundStage::none; // step that found the kept coloring
    std::vector<std::pair<int, int>> bounds_trace; // (lb*, ub*) per iteration
};

/// Full run: iterate clique lower bounds, low-degree reduction and greedy
/// coloring until the bounds meet, the working graph empties, or the cutoff
/// expires; then lift the best coloring back through the deletion stack.
SolveResult solve(const Graph& g, const SolverConfig& cfg);

struct VerifyResult {
    bool ok = false;
    int u = -1, v = -1; // first violated edge, or first uncolored vertex in u
};

// true iff c is total on V(g) and no edge is monochromatic
VerifyResult verify_coloring(const Graph& g, const Coloring& c);

/// Exact chromatic number by iterative-deepening k-colorability search with
/// clique seeding. Guarded to n <= 16 (throws std::invalid_argument above).
int brute_force_chromatic(const Graph& g);

} // namespace chroma

#endif
