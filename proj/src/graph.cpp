#include "chroma/graph.hpp"

#include <algorithm>
#include <cassert>

namespace chroma {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges,
    std::vector<std::int64_t> labels, long long* duplicates_dropped,
    long long* self_loops_dropped)
{
    long long loops = 0;
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::out_of_range("edge endpoint outside [0, n)");
        if (u > v)
            std::swap(u, v);
    }
    auto it = std::remove_if(edges.begin(), edges.end(),
        [&](const std::pair<int, int>& e) { return e.first == e.second; });
    loops = edges.end() - it;
    edges.erase(it, edges.end());

    std::sort(edges.begin(), edges.end());
    auto uniq = std::unique(edges.begin(), edges.end());
    long long dups = edges.end() - uniq;
    edges.erase(uniq, edges.end());

    if (duplicates_dropped)
        *duplicates_dropped = dups;
    if (self_loops_dropped)
        *self_loops_dropped = loops;

    Graph g;
    g.n_ = n;
    g.m_ = static_cast<long long>(edges.size());
    g.offset_.assign(n + 1, 0);
    for (auto [u, v] : edges) {
        ++g.offset_[u + 1];
        ++g.offset_[v + 1];
    }
    for (int v = 0; v < n; ++v)
        g.offset_[v + 1] += g.offset_[v];
    g.adj_.resize(2 * g.m_);
    std::vector<long long> cursor(g.offset_.begin(), g.offset_.end() - 1);
    for (auto [u, v] : edges) {
        g.adj_[cursor[u]++] = v;
        g.adj_[cursor[v]++] = u;
    }
    // edges were sorted by (min, max), so each adjacency list comes out
    // sorted except for the mix of lower and higher neighbors
    for (int v = 0; v < n; ++v) {
        auto nb = g.adj_.begin() + g.offset_[v];
        auto ne = g.adj_.begin() + g.offset_[v + 1];
        if (!std::is_sorted(nb, ne))
            std::sort(nb, ne);
    }

    if (labels.empty()) {
        labels.resize(n);
        for (int v = 0; v < n; ++v)
            labels[v] = v + 1;
    } else if (static_cast<int>(labels.size()) != n) {
        throw std::invalid_argument("labels size must equal n");
    }
    g.labels_ = std::move(labels);
    return g;
}

bool Graph::adjacent(int u, int v) const
{
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

void Graph::validate() const
{
    if (static_cast<int>(offset_.size()) != n_ + 1)
        throw std::logic_error("offset table size mismatch");
    long long total = 0;
    for (int v = 0; v < n_; ++v) {
        auto nb = neighbors(v);
        total += static_cast<long long>(nb.size());
        int prev = -1;
        for (int u : nb) {
            if (u < 0 || u >= n_)
                throw std::logic_error("neighbor id out of range");
            if (u == v)
                throw std::logic_error("self-loop");
            if (u <= prev)
                throw std::logic_error("adjacency not strictly sorted");
            prev = u;
            if (!adjacent(u, v))
                throw std::logic_error("asymmetric adjacency");
        }
    }
    if (total != 2 * m_)
        throw std::logic_error("degree sum != 2m");
}

WorkingGraph::WorkingGraph(const Graph& g)
    : g_(&g)
    , alive_(g.num_vertices(), 1)
    , degree_(g.num_vertices())
    , alive_count_(g.num_vertices())
{
    for (int v = 0; v < g.num_vertices(); ++v)
        degree_[v] = g.degree(v);
}

void WorkingGraph::remove_vertex(int v)
{
    if (!alive_[v])
        throw std::logic_error("remove_vertex on a dead vertex");
    alive_[v] = 0;
    --alive_count_;
    for (int u : g_->neighbors(v))
        if (alive_[u])
            --degree_[u];
}

void WorkingGraph::remove_vertices(std::span<const int> vs)
{
    for (int v : vs)
        remove_vertex(v);
}

std::vector<int> WorkingGraph::alive_vertices() const
{
    std::vector<int> out;
    out.reserve(alive_count_);
    for (int v = 0; v < g_->num_vertices(); ++v)
        if (alive_[v])
            out.push_back(v);
    return out;
}

int CoreDecomposition::degeneracy() const
{
    int d = 0;
    for (int s : shell)
        d = std::max(d, s);
    return d;
}

// Bucket peeling (linear in n+m): repeatedly remove a minimum-degree vertex;
// shell(v) is the running maximum of removal degrees.
CoreDecomposition core_decompose(const WorkingGraph& w)
{
    const Graph& g = w.base();
    int n = g.num_vertices();
    CoreDecomposition out;
    out.shell.assign(n, -1);
    out.peel_order.reserve(w.alive_count());
    if (w.alive_count() == 0)
        return out;

    int maxdeg = 0;
    for (int v = 0; v < n; ++v)
        if (w.alive(v))
            maxdeg = std::max(maxdeg, w.degree(v));

    // vert: alive vertices sorted by current degree; pos/bin index into it
    std::vector<int> deg(n, 0), pos(n), vert;
    vert.reserve(w.alive_count());
    std::vector<int> bin(maxdeg + 2, 0);
    for (int v = 0; v < n; ++v)
        if (w.alive(v)) {
            deg[v] = w.degree(v);
            ++bin[deg[v]];
        }
    int start = 0;
    for (int d = 0; d <= maxdeg; ++d) {
        int cnt = bin[d];
        bin[d] = start;
        start += cnt;
    }
    vert.resize(w.alive_count());
    {
        std::vector<int> cursor(bin.begin(), bin.end() - 1);
        for (int v = 0; v < n; ++v)
            if (w.alive(v)) {
                pos[v] = cursor[deg[v]];
                vert[pos[v]] = v;
                ++cursor[deg[v]];
            }
    }

    int k = 0;
    for (std::size_t i = 0; i < vert.size(); ++i) {
        int v = vert[i];
        k = std::max(k, deg[v]);
        out.shell[v] = k;
        out.peel_order.push_back(v);
        for (int u : g.neighbors(v)) {
            if (!w.alive(u) || out.shell[u] >= 0 || deg[u] <= deg[v])
                continue;
            // move u to the front of its bucket, then shift it one bucket down
            int du = deg[u];
            int pu = pos[u];
            int pw = bin[du];
            int x = vert[pw];
            if (u != x) {
                std::swap(vert[pu], vert[pw]);
                pos[u] = pw;
                pos[x] = pu;
            }
            ++bin[du];
            --deg[u];
        }
    }
    return out;
}

CoreDecomposition core_decompose(const Graph& g)
{
    WorkingGraph w(g);
    return core_decompose(w);
}

} // namespace chroma
