#ifndef CHROMA_COLORING_HPP
#define CHROMA_COLORING_HPP

#include <vector>

#include "chroma/graph.hpp"

namespace chroma {

/// Vertex -> color assignment, possibly partial (-1 means unassigned).
/// num_colors is the count of distinct assigned colors.
struct Coloring {
    std::vector<int> assign;
    int num_colors = 0;

    static Coloring unassigned(int n) { return Coloring{std::vector<int>(n, -1), 0}; }

    bool total() const
    {
        for (int c : assign)
            if (c < 0)
                return false;
        return true;
    }

    void recount();
};

// true iff no alive edge of w is monochromatic (unassigned endpoints ignored)
bool proper_on(const WorkingGraph& w, const Coloring& c);

/// Orders all alive vertices by repeatedly taking the set attaining the
/// minimum mixed degree r + lambda*e, where r counts neighbors not yet
/// placed and e counts placed ones. Ties within a round resolve by ascending
/// id. Bucket-based; mixed degrees are kept exact as integers scaled by 10
/// (lambda is quantized to tenths).
std::vector<int> mdd_sort(const WorkingGraph& w, double lambda);

/// Vertex order for the greedy coloring pass: grouped by shell number
/// ascending; within a layer the base peel order, or ascending mdd rank when
/// a rank vector is supplied. layer_ends[i] is the end index of layer i in
/// sequence.
struct MddOrder {
    std::vector<int> sequence;
    std::vector<int> layer_ends;
};

// mdd_rank, when given, maps vertex -> index in the mdd_sort sequence
MddOrder build_mdd_order(const CoreDecomposition& cores,
    const std::vector<int>* mdd_rank);

/// Greedy coloring in reverse of order. With an incumbent, a vertex that
/// would need a color index >= incumbent.num_colors triggers a one-move
/// repair; if the repair fails the incumbent is returned unchanged. Without
/// an incumbent the pass always runs to completion.
Coloring mdd_color(const WorkingGraph& w, const Coloring* incumbent,
    const MddOrder& order);

/// One-step repair for an uncolored vertex v whose neighbors block all
/// colors below limit: find a color c whose unique blocker u can move to
/// another color < limit absent from N(u); then move u and give v color c.
/// Returns false (partial untouched) when no such pair exists.
bool recolor(const WorkingGraph& w, Coloring& partial, int v, int limit);

/// Classic saturation-degree greedy; ties by dynamic degree, then lowest id.
Coloring dsatur(const WorkingGraph& w);

} // namespace chroma

#endif
