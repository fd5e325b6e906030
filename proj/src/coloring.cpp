#include "chroma/coloring.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <tuple>

#include "chroma/validate.hpp"

namespace chroma {

void Coloring::recount()
{
    std::vector<char> seen;
    int count = 0;
    for (int c : assign) {
        if (c < 0)
            continue;
        if (c >= static_cast<int>(seen.size()))
            seen.resize(c + 1, 0);
        if (!seen[c]) {
            seen[c] = 1;
            ++count;
        }
    }
    num_colors = count;
}

bool proper_on(const WorkingGraph& w, const Coloring& c)
{
    const Graph& g = w.base();
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (!w.alive(v) || c.assign[v] < 0)
            continue;
        for (int u : g.neighbors(v))
            if (w.alive(u) && c.assign[u] == c.assign[v])
                return false;
    }
    return true;
}

std::vector<int> mdd_sort(const WorkingGraph& w, double lambda)
{
    if (lambda < 0.0 || lambda > 1.0)
        throw std::invalid_argument("lambda must be in [0,1]");
    const Graph& g = w.base();
    const int n = g.num_vertices();
    const int lam10 = static_cast<int>(std::lround(lambda * 10.0));

    std::vector<int> sequence;
    sequence.reserve(w.alive_count());
    if (w.empty())
        return sequence;

    // key(v) = 10*r + lam10*e; placing a neighbor shifts it by lam10 - 10
    std::vector<int> key(n, -1);
    std::vector<char> placed(n, 0);
    int maxdeg = 0;
    for (int v = 0; v < n; ++v)
        if (w.alive(v))
            maxdeg = std::max(maxdeg, w.degree(v));

    std::vector<std::vector<int>> bucket(10 * maxdeg + 1);
    for (int v = 0; v < n; ++v)
        if (w.alive(v)) {
            key[v] = 10 * w.degree(v);
            bucket[key[v]].push_back(v);
        }

    int cur = 0;
    std::vector<int> round;
    while (static_cast<int>(sequence.size()) < w.alive_count()) {
        // buckets hold stale entries; a vertex is live in bucket k iff
        // key[v] == k and it is not placed yet
        while (true) {
            bool live = false;
            for (int v : bucket[cur])
                if (!placed[v] && key[v] == cur) {
                    live = true;
                    break;
                }
            if (live)
                break;
            bucket[cur].clear();
            ++cur;
        }
        round.clear();
        for (int v : bucket[cur])
            if (!placed[v] && key[v] == cur)
                round.push_back(v);
        bucket[cur].clear();
        std::sort(round.begin(), round.end());
        round.erase(std::unique(round.begin(), round.end()), round.end());

        for (int v : round)
            placed[v] = 1;
        for (int v : round)
            sequence.push_back(v);
        for (int v : round) {
            w.for_alive_neighbors(v, [&](int u) {
                if (placed[u])
                    return;
                key[u] += lam10 - 10;
                bucket[key[u]].push_back(u);
                if (key[u] < cur)
                    cur = key[u];
            });
        }

#ifdef CHROMA_VALIDATE
        // conservation: r + e stays the static alive degree of every
        // unplaced vertex, i.e. key - lam10*e = 10*r with r+e = degree;
        // quadratic, so only checked at small sizes
        for (int v = 0; w.alive_count() <= 1024 && v < n; ++v) {
            if (!w.alive(v) || placed[v])
                continue;
            int e = 0;
            w.for_alive_neighbors(v, [&](int u) { e += placed[u] ? 1 : 0; });
            int r = w.degree(v) - e;
            if (key[v] != 10 * r + lam10 * e)
                throw std::logic_error("mixed-degree bookkeeping drifted");
        }
#endif
    }
    return sequence;
}

MddOrder build_mdd_order(const CoreDecomposition& cores,
    const std::vector<int>* mdd_rank)
{
    // stable sort of the vertex list by shell number: layers ascend, ids
    // ascend within a layer unless an mdd rank overrides them
    MddOrder order;
    auto& seq = order.sequence;
    seq.reserve(cores.peel_order.size());
    for (int v = 0; v < static_cast<int>(cores.shell.size()); ++v)
        if (cores.shell[v] >= 0)
            seq.push_back(v);
    std::stable_sort(seq.begin(), seq.end(),
        [&](int a, int b) { return cores.shell[a] < cores.shell[b]; });

    std::size_t i = 0;
    while (i < seq.size()) {
        std::size_t j = i;
        while (j < seq.size() && cores.shell[seq[j]] == cores.shell[seq[i]])
            ++j;
        if (mdd_rank)
            std::sort(seq.begin() + i, seq.begin() + j, [&](int a, int b) {
                return (*mdd_rank)[a] < (*mdd_rank)[b];
            });
        order.layer_ends.push_back(static_cast<int>(j));
        i = j;
    }
    return order;
}

Coloring mdd_color(const WorkingGraph& w, const Coloring* incumbent,
    const MddOrder& order)
{
    const Graph& g = w.base();
    const int n = g.num_vertices();
    Coloring f = Coloring::unassigned(n);
    const int limit = incumbent ? incumbent->num_colors : -1;

    std::vector<int> mark(n + 1, -1); // mark[c] == v: color c seen at vertex v
    for (auto it = order.sequence.rbegin(); it != order.sequence.rend(); ++it) {
        int v = *it;
        w.for_alive_neighbors(v, [&](int u) {
            int c = f.assign[u];
            if (c >= 0 && c <= n)
                mark[c] = v;
        });
        int c = 0;
        while (mark[c] == v)
            ++c;
        if (incumbent && c >= limit) {
            if (!recolor(w, f, v, limit))
                return *incumbent;
        } else {
            f.assign[v] = c;
        }
    }
    f.recount();
    CHROMA_CHECK_PROPER(w, f);
    return f;
}

bool recolor(const WorkingGraph& w, Coloring& partial, int v, int limit)
{
    if (partial.assign[v] >= 0)
        throw std::logic_error("recolor target already colored");

    // only[c]: the sole c-colored neighbor of v, or -2 if several
    std::vector<int> only(limit, -1);
    w.for_alive_neighbors(v, [&](int u) {
        int c = partial.assign[u];
        if (c < 0 || c >= limit)
            return;
        only[c] = only[c] == -1 ? u : -2;
    });

    std::vector<char> blocked(limit, 0);
    for (int c = 0; c < limit; ++c) {
        int u = only[c];
        if (u < 0)
            continue;
        std::fill(blocked.begin(), blocked.end(), 0);
        w.for_alive_neighbors(u, [&](int x) {
            int cx = partial.assign[x];
            if (cx >= 0 && cx < limit)
                blocked[cx] = 1;
        });
        for (int c2 = 0; c2 < limit; ++c2) {
            if (c2 == c || blocked[c2])
                continue;
            partial.assign[u] = c2;
            partial.assign[v] = c;
            CHROMA_CHECK_PROPER(w, partial);
            return true;
        }
    }
    return false;
}

Coloring dsatur(const WorkingGraph& w)
{
    const Graph& g = w.base();
    const int n = g.num_vertices();
    Coloring f = Coloring::unassigned(n);
    if (w.empty())
        return f;

    // per-vertex bitset of neighbor colors; grows as colors appear
    std::vector<std::vector<std::uint64_t>> nbcol(n);
    std::vector<int> sat(n, 0), deg(n, 0);
    for (int v = 0; v < n; ++v)
        if (w.alive(v))
            deg[v] = w.degree(v);

    auto add_color = [&](int v, int c) {
        auto& b = nbcol[v];
        std::size_t word = static_cast<std::size_t>(c) >> 6;
        if (word >= b.size())
            b.resize(word + 1, 0);
        std::uint64_t bit = 1ULL << (c & 63);
        if (b[word] & bit)
            return false;
        b[word] |= bit;
        return true;
    };
    auto first_free = [&](int v) {
        auto& b = nbcol[v];
        for (std::size_t i = 0; i < b.size(); ++i)
            if (~b[i])
                return static_cast<int>(i * 64)
                    + std::countr_one(b[i]);
        return static_cast<int>(b.size() * 64);
    };

    // lazy max-heap keyed by (sat, deg, -id); stale entries are skipped
    using Entry = std::tuple<int, int, int>;
    std::priority_queue<Entry> heap;
    for (int v = 0; v < n; ++v)
        if (w.alive(v))
            heap.emplace(0, deg[v], -v);

    int colored = 0;
    while (colored < w.alive_count()) {
        auto [s, d, negv] = heap.top();
        heap.pop();
        int v = -negv;
        if (f.assign[v] >= 0 || s != sat[v] || d != deg[v])
            continue;
        int c = first_free(v);
        f.assign[v] = c;
        ++colored;
        w.for_alive_neighbors(v, [&](int u) {
            if (f.assign[u] >= 0)
                return;
            --deg[u];
            if (add_color(u, c))
                ++sat[u];
            heap.emplace(sat[u], deg[u], -u);
        });
    }
    f.recount();
    CHROMA_CHECK_PROPER(w, f);
    return f;
}

} // namespace chroma
