#ifndef CHROMA_CLIQUE_HPP
#define CHROMA_CLIQUE_HPP

#include <span>
#include <vector>

#include "chroma/clock.hpp"
#include "chroma/graph.hpp"
#include "chroma/rng.hpp"

namespace chroma {

struct Clique {
    std::vector<int> vertices;
    int size() const { return static_cast<int>(vertices.size()); }
};

// every pair adjacent in g (and alive in w for the overload)
bool is_clique(const Graph& g, std::span<const int> vertices);
bool is_clique(const WorkingGraph& w, std::span<const int> vertices);

/// Multi-restart greedy clique construction. Each restart starts from a
/// random vertex in the top-degree decile and repeatedly adds the candidate
/// with the most neighbors inside the shrinking candidate set (ties by
/// lowest id). One restart per clock step until the deadline; at least one
/// restart always runs.
Clique find_clique_heuristic(const WorkingGraph& w, Rng& rng, Deadline deadline);

struct MaxCliqueResult {
    Clique clique;
    bool exact = false; // search finished within budget
};

/// Exact maximum clique by branch and bound over bitset adjacency, with a
/// greedy-coloring bound for pruning. Cliques no larger than `lower` may be
/// pruned, so `exact` certifies there is no clique bigger than
/// max(lower, result). The deadline is polled every 1024 search nodes; on
/// timeout the best clique found so far is returned with exact = false.
MaxCliqueResult max_clique_exact(const Graph& g, int lower, Deadline deadline);

// same search on the subgraph induced by alive `vertices`
MaxCliqueResult max_clique_on_subset(const WorkingGraph& w,
    std::span<const int> vertices, int lower, Deadline deadline);

/// Lower-bound refinement: grow a test set from the closed neighborhood of a
/// maximum-degree vertex, each round adding N[v] for the adjacent-to-set
/// vertex v with the most neighbors outside the set, and run the exact
/// solver on the induced subgraph. Returns an improved bound as soon as a
/// clique larger than lb_k appears, else lb_k; stops once the set would
/// reach size_upper or the deadline expires. Never returns less than lb_k.
int exact_lb(const WorkingGraph& w, int lb_k, Deadline deadline, int size_upper);

} // namespace chroma

#endif
