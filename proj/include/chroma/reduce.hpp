#ifndef CHROMA_REDUCE_HPP
#define CHROMA_REDUCE_HPP

#include <vector>

#include "chroma/coloring.hpp"
#include "chroma/graph.hpp"

namespace chroma {

/// Chronological record of reduction removals. Each entry keeps the bound
/// in force when the vertex was pushed, so a replay can re-check that every
/// entry really had dynamic degree below its bound at deletion time.
class DeletionStack {
public:
    struct Entry {
        int vertex;
        int bound;
    };

    void push(const std::vector<int>& removed, int bound)
    {
        for (int v : removed)
            entries_.push_back({v, bound});
    }

    const std::vector<Entry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

private:
    std::vector<Entry> entries_;
};

struct ReduResult {
    std::vector<int> removed; // deletion order; ascending ids within a round
    bool reduced = false;
};

/// Removes every vertex of dynamic degree < ell, in rounds, until none
/// remain. A vertex whose degree drops below ell because of removals earlier
/// in the same call is removed too (in a later round).
ReduResult redu_rule(WorkingGraph& w, int ell);

/// Colors stack entries in reverse deletion order, each with the smallest
/// color not on its already-colored neighbors, on top of a proper coloring
/// of the surviving subgraph. Uses at most max(ell, partial.num_colors)
/// colors. Throws std::invalid_argument when partial is improper, colors a
/// stacked vertex, or leaves a surviving vertex uncolored.
Coloring extend_coloring(const Graph& g, const Coloring& partial,
    const DeletionStack& stack, int ell);

} // namespace chroma

#endif
