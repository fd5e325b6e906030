#ifndef CHROMA_TESTS_SUPPORT_HPP
#define CHROMA_TESTS_SUPPORT_HPP

// Shared fixtures and independent oracles for the test suites. The oracles
// here deliberately use the dumbest correct method available so they stay
// independent of the library implementations they check.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "chroma/graph.hpp"
#include "chroma/rng.hpp"

namespace support {

using chroma::Graph;

inline Graph from_pairs(int n, std::vector<std::pair<int, int>> edges)
{
    return Graph::from_edges(n, std::move(edges));
}

inline Graph complete(int n)
{
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            e.emplace_back(u, v);
    return from_pairs(n, std::move(e));
}

inline Graph cycle(int n)
{
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < n; ++v)
        e.emplace_back(v, (v + 1) % n);
    return from_pairs(n, std::move(e));
}

inline Graph path(int n)
{
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v + 1 < n; ++v)
        e.emplace_back(v, v + 1);
    return from_pairs(n, std::move(e));
}

// hub 0, leaves 1..k
inline Graph star(int k)
{
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v <= k; ++v)
        e.emplace_back(0, v);
    return from_pairs(k + 1, std::move(e));
}

inline Graph petersen()
{
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);         // outer cycle
        e.emplace_back(5 + i, 5 + (i + 2) % 5); // inner pentagram
        e.emplace_back(i, 5 + i);               // spokes
    }
    return from_pairs(10, std::move(e));
}

// The 13-vertex worked example: clique number 4 ({v4,v5,v12,v13}), the
// degree-<4 cascade removes {v1,v3,v6} then {v4,v5}, and the remaining
// 8 vertices all keep degree >= 4. 1-based names map to ids v_i -> i-1.
inline const std::vector<std::pair<int, int>>& fig1_edges_1based()
{
    static const std::vector<std::pair<int, int>> e = {
        {1, 2}, {1, 4}, {1, 7},
        {2, 3}, {2, 6}, {2, 7}, {2, 8}, {2, 10}, {2, 11}, {2, 13},
        {3, 6}, {3, 9},
        {4, 5}, {4, 12}, {4, 13},
        {5, 6}, {5, 12}, {5, 13},
        {7, 8}, {7, 9}, {7, 11},
        {8, 9}, {8, 10}, {8, 11},
        {9, 10}, {9, 12}, {9, 13},
        {10, 11}, {10, 12},
        {11, 12}, {11, 13},
        {12, 13},
    };
    return e;
}

inline Graph fig1()
{
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : fig1_edges_1based())
        e.emplace_back(u - 1, v - 1);
    return from_pairs(13, std::move(e));
}

// Zachary's karate club: 34 vertices, 78 edges, clique number 5
inline const std::vector<std::pair<int, int>>& karate_edges_1based()
{
    static const std::vector<std::pair<int, int>> e = {
        {2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 2}, {4, 3}, {5, 1}, {6, 1},
        {7, 1}, {7, 5}, {7, 6}, {8, 1}, {8, 2}, {8, 3}, {8, 4}, {9, 1},
        {9, 3}, {10, 3}, {11, 1}, {11, 5}, {11, 6}, {12, 1}, {13, 1},
        {13, 4}, {14, 1}, {14, 2}, {14, 3}, {14, 4}, {17, 6}, {17, 7},
        {18, 1}, {18, 2}, {20, 1}, {20, 2}, {22, 1}, {22, 2}, {26, 24},
        {26, 25}, {28, 3}, {28, 24}, {28, 25}, {29, 3}, {30, 24}, {30, 27},
        {31, 2}, {31, 9}, {32, 1}, {32, 25}, {32, 26}, {32, 29}, {33, 3},
        {33, 9}, {33, 15}, {33, 16}, {33, 19}, {33, 21}, {33, 23}, {33, 24},
        {33, 30}, {33, 31}, {33, 32}, {34, 9}, {34, 10}, {34, 14}, {34, 15},
        {34, 16}, {34, 19}, {34, 20}, {34, 21}, {34, 23}, {34, 24}, {34, 27},
        {34, 28}, {34, 29}, {34, 30}, {34, 31}, {34, 32}, {34, 33},
    };
    return e;
}

inline Graph karate()
{
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : karate_edges_1based())
        e.emplace_back(u - 1, v - 1);
    return from_pairs(34, std::move(e));
}

// 256 vertices (all bytes), edge iff Hamming distance >= 4; 20864 edges
inline Graph hamming8_4()
{
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < 256; ++u)
        for (int v = u + 1; v < 256; ++v)
            if (std::popcount(static_cast<unsigned>(u ^ v)) >= 4)
                e.emplace_back(u, v);
    return from_pairs(256, std::move(e));
}

inline Graph random_graph(int n, double density, chroma::Rng& rng)
{
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.unit() < density)
                e.emplace_back(u, v);
    return from_pairs(n, std::move(e));
}

// ---- oracles -------------------------------------------------------------

// shell numbers by literal peeling: repeatedly delete a minimum-degree
// vertex, tracking the running maximum of removal degrees
inline std::vector<int> naive_core_numbers(const Graph& g)
{
    const int n = g.num_vertices();
    std::vector<int> deg(n), shell(n, -1);
    std::vector<char> removed(n, 0);
    for (int v = 0; v < n; ++v)
        deg[v] = g.degree(v);
    int k = 0;
    for (int round = 0; round < n; ++round) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (best < 0 || deg[v] < deg[best]))
                best = v;
        k = std::max(k, deg[best]);
        shell[best] = k;
        removed[best] = 1;
        for (int u : g.neighbors(best))
            if (!removed[u])
                --deg[u];
    }
    return shell;
}

// maximum clique by exhaustive recursion; fine up to ~n=25
inline void brute_clique_rec(const Graph& g, std::vector<int>& cand,
    std::vector<int>& cur, std::vector<int>& best)
{
    if (cur.size() + cand.size() <= best.size())
        return;
    if (cand.empty()) {
        if (cur.size() > best.size())
            best = cur;
        return;
    }
    std::vector<int> rest = cand;
    while (!rest.empty()) {
        if (cur.size() + rest.size() <= best.size())
            return;
        int v = rest.back();
        rest.pop_back();
        std::vector<int> next;
        for (int u : rest)
            if (g.adjacent(u, v))
                next.push_back(u);
        cur.push_back(v);
        brute_clique_rec(g, next, cur, best);
        cur.pop_back();
    }
}

inline int brute_max_clique(const Graph& g)
{
    std::vector<int> cand(g.num_vertices());
    std::iota(cand.begin(), cand.end(), 0);
    std::vector<int> cur, best;
    brute_clique_rec(g, cand, cur, best);
    return static_cast<int>(best.size());
}

// chromatic number by direct k-colorability backtracking (no clique
// seeding, no ordering tricks); fine up to ~n=12
inline bool naive_colorable(const Graph& g, int v, int k, std::vector<int>& col)
{
    if (v == g.num_vertices())
        return true;
    for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (int u : g.neighbors(v))
            if (col[u] == c) {
                ok = false;
                break;
            }
        if (!ok)
            continue;
        col[v] = c;
        if (naive_colorable(g, v + 1, k, col))
            return true;
        col[v] = -1;
    }
    return false;
}

inline int naive_chromatic(const Graph& g)
{
    if (g.num_vertices() == 0)
        return 0;
    for (int k = 1;; ++k) {
        std::vector<int> col(g.num_vertices(), -1);
        if (naive_colorable(g, 0, k, col))
            return k;
    }
}

// reference MddSort: recompute mixed degrees from scratch every round; the
// REQUIRE-style hook is a callback so acceptance and unit tests can both
// assert conservation their own way
template <typename Check>
inline std::vector<int> reference_mdd_sort(const chroma::WorkingGraph& w,
    double lambda, Check&& conservation_check)
{
    const int lam10 = static_cast<int>(lambda * 10.0 + 0.5);
    std::vector<int> seq;
    std::vector<char> placed(w.num_vertices(), 0);
    while (static_cast<int>(seq.size()) < w.alive_count()) {
        int best_key = -1;
        std::vector<int> round;
        for (int v = 0; v < w.num_vertices(); ++v) {
            if (!w.alive(v) || placed[v])
                continue;
            int e = 0;
            w.for_alive_neighbors(v, [&](int u) { e += placed[u] ? 1 : 0; });
            int r = w.degree(v) - e;
            conservation_check(r + e == w.degree(v));
            int key = 10 * r + lam10 * e;
            if (best_key < 0 || key < best_key) {
                best_key = key;
                round.clear();
            }
            if (key == best_key)
                round.push_back(v);
        }
        for (int v : round) {
            placed[v] = 1;
            seq.push_back(v);
        }
    }
    return seq;
}

} // namespace support

#endif
