#include "chroma/reduce.hpp"

#include <algorithm>
#include <stdexcept>

#include "chroma/validate.hpp"

namespace chroma {

ReduResult redu_rule(WorkingGraph& w, int ell)
{
    ReduResult out;
    const Graph& g = w.base();

    std::vector<int> round;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (w.alive(v) && w.degree(v) < ell)
            round.push_back(v);

    std::vector<char> pending(g.num_vertices(), 0);
    for (int v : round)
        pending[v] = 1;

    std::vector<int> next;
    while (!round.empty()) {
        // the round set is fixed before any of its removals take effect
        next.clear();
        for (int v : round) {
            w.remove_vertex(v);
            out.removed.push_back(v);
        }
        for (int v : round)
            for (int u : g.neighbors(v))
                if (w.alive(u) && !pending[u] && w.degree(u) < ell) {
                    pending[u] = 1;
                    next.push_back(u);
                }
        std::sort(next.begin(), next.end());
        round.swap(next);
    }
    out.reduced = !out.removed.empty();
    return out;
}

Coloring extend_coloring(const Graph& g, const Coloring& partial,
    const DeletionStack& stack, int ell)
{
    const int n = g.num_vertices();
    if (static_cast<int>(partial.assign.size()) != n)
        throw std::invalid_argument("partial coloring size mismatch");

    std::vector<char> stacked(n, 0);
    for (const auto& e : stack.entries()) {
        if (e.vertex < 0 || e.vertex >= n || stacked[e.vertex])
            throw std::invalid_argument("deletion stack inconsistent with graph");
        stacked[e.vertex] = 1;
    }
    for (int v = 0; v < n; ++v) {
        if (stacked[v] && partial.assign[v] >= 0)
            throw std::invalid_argument("partial coloring covers a stacked vertex");
        if (!stacked[v] && partial.assign[v] < 0)
            throw std::invalid_argument("surviving vertex left uncolored");
    }
    for (int v = 0; v < n; ++v) {
        if (partial.assign[v] < 0)
            continue;
        for (int u : g.neighbors(v))
            if (partial.assign[u] == partial.assign[v])
                throw std::invalid_argument("partial coloring is improper");
    }

    Coloring f = partial;
    std::vector<char> used;
    const auto& entries = stack.entries();
    for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
        int v = it->vertex;
        used.assign(g.degree(v) + 1, 0);
        int cap = g.degree(v);
        for (int u : g.neighbors(v)) {
            int c = f.assign[u];
            if (c >= 0 && c <= cap)
                used[c] = 1;
        }
        int c = 0;
        while (used[c])
            ++c;
        f.assign[v] = c;
    }
    f.recount();

    CHROMA_CHECK(f.num_colors <= std::max(ell, partial.num_colors),
        "extension exceeded max(ell, k)");
    return f;
}

} // namespace chroma
