#include "chroma/clique.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "chroma/validate.hpp"

namespace chroma {

bool is_clique(const Graph& g, std::span<const int> vertices)
{
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (!g.adjacent(vertices[i], vertices[j]))
                return false;
    return true;
}

bool is_clique(const WorkingGraph& w, std::span<const int> vertices)
{
    for (int v : vertices)
        if (!w.alive(v))
            return false;
    return is_clique(w.base(), vertices);
}

Clique find_clique_heuristic(const WorkingGraph& w, Rng& rng, Deadline deadline)
{
    const Graph& g = w.base();
    const int n = g.num_vertices();

    std::vector<int> starts = w.alive_vertices();
    std::sort(starts.begin(), starts.end(), [&](int a, int b) {
        return w.degree(a) != w.degree(b) ? w.degree(a) > w.degree(b) : a < b;
    });
    std::size_t decile = (starts.size() + 9) / 10; // ceil; at least one

    Clique best;
    std::vector<int> cand, next, inter;
    std::vector<char> in_cand(n, 0);

    do {
        deadline.clock->step();
        int s = starts[rng.below(decile)];

        std::vector<int> cur{s};
        cand.clear();
        w.for_alive_neighbors(s, [&](int u) {
            cand.push_back(u);
            in_cand[u] = 1;
        });
        while (!cand.empty()) {
            // candidate with most neighbors inside cand, ties by lowest id
            int pick = -1, pick_score = -1;
            for (int v : cand) {
                int score = 0;
                w.for_alive_neighbors(v, [&](int u) { score += in_cand[u]; });
                if (score > pick_score) {
                    pick = v;
                    pick_score = score;
                }
            }
            cur.push_back(pick);
            next.clear();
            inter.clear();
            w.for_alive_neighbors(pick, [&](int u) {
                if (in_cand[u])
                    inter.push_back(u);
            });
            for (int v : cand)
                in_cand[v] = 0;
            for (int u : inter) {
                next.push_back(u);
                in_cand[u] = 1;
            }
            cand.swap(next);
        }

        if (static_cast<int>(cur.size()) > best.size())
            best.vertices = std::move(cur);
    } while (!deadline.expired());

    CHROMA_CHECK(is_clique(w, best.vertices), "heuristic clique invalid");
    return best;
}

namespace {

    // fixed-width bitset over subgraph positions
    struct Bits {
        std::vector<std::uint64_t> w;

        explicit Bits(int n = 0) : w((n + 63) / 64, 0) {}
        void set(int i) { w[i >> 6] |= 1ULL << (i & 63); }
        void clear(int i) { w[i >> 6] &= ~(1ULL << (i & 63)); }
        bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
        bool any() const
        {
            for (auto x : w)
                if (x)
                    return true;
            return false;
        }
        int first() const
        {
            for (std::size_t i = 0; i < w.size(); ++i)
                if (w[i])
                    return static_cast<int>(i * 64) + std::countr_zero(w[i]);
            return -1;
        }
        void and_with(const Bits& o)
        {
            for (std::size_t i = 0; i < w.size(); ++i)
                w[i] &= o.w[i];
        }
        void and_not(const Bits& o)
        {
            for (std::size_t i = 0; i < w.size(); ++i)
                w[i] &= ~o.w[i];
        }
    };

    // Tomita-style search: candidates are greedily colored each node and
    // visited in reverse color order, pruning on |C| + color <= best.
    class BranchBound {
    public:
        BranchBound(std::vector<Bits> adj, std::vector<int> pos2vert,
            int lower, Deadline deadline)
            : n_(static_cast<int>(pos2vert.size()))
            , adj_(std::move(adj))
            , pos2vert_(std::move(pos2vert))
            , floor_(lower)
            , deadline_(deadline)
        {
        }

        MaxCliqueResult run()
        {
            order_pool_.resize(n_ + 1); // depth never exceeds n_
            Bits all(n_);
            for (int i = 0; i < n_; ++i)
                all.set(i);
            expand(all);
            MaxCliqueResult out;
            out.exact = !timed_out_;
            out.clique.vertices.reserve(best_.size());
            for (int p : best_)
                out.clique.vertices.push_back(pos2vert_[p]);
            std::sort(out.clique.vertices.begin(), out.clique.vertices.end());
            return out;
        }

    private:
        int bound_floor() const
        {
            return std::max(static_cast<int>(best_.size()), floor_);
        }

        void expand(Bits cand)
        {
            if (timed_out_)
                return;
            if ((++nodes_ & 1023) == 0) {
                deadline_.clock->step();
                if (deadline_.expired()) {
                    timed_out_ = true;
                    return;
                }
            }

            // greedy coloring of cand; order records (position, color)
            auto& order = order_pool_[cur_.size()];
            order.clear();
            Bits uncolored = cand;
            int color = 0;
            while (uncolored.any()) {
                ++color;
                Bits q = uncolored;
                while (true) {
                    int v = q.first();
                    if (v < 0)
                        break;
                    q.clear(v);
                    q.and_not(adj_[v]);
                    uncolored.clear(v);
                    order.push_back({v, color});
                }
            }

            for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
                auto [v, c] = order[i];
                if (static_cast<int>(cur_.size()) + c <= bound_floor())
                    return; // earlier entries have colors <= c
                Bits next = cand;
                next.and_with(adj_[v]);
                cur_.push_back(v);
                if (!next.any()) {
                    if (cur_.size() > best_.size())
                        best_ = cur_;
                } else {
                    expand(next);
                }
                cur_.pop_back();
                if (timed_out_)
                    return;
                cand.clear(v);
            }
        }

        int n_;
        std::vector<Bits> adj_;
        std::vector<int> pos2vert_;
        int floor_;
        Deadline deadline_;
        std::uint64_t nodes_ = 0;
        bool timed_out_ = false;
        std::vector<int> cur_, best_;
        std::vector<std::vector<std::pair<int, int>>> order_pool_;
    };

    // Positions are the reverse degeneracy peel order of the induced
    // subgraph, so the dense core sits at the low positions the coloring
    // pass fills first.
    MaxCliqueResult solve_subset(const Graph& g,
        const std::vector<int>& vertices, int lower, Deadline deadline)
    {
        const int k = static_cast<int>(vertices.size());
        if (k == 0)
            return MaxCliqueResult{{}, true};

        std::vector<int> idx(g.num_vertices(), -1);
        for (int i = 0; i < k; ++i)
            idx[vertices[i]] = i;

        // subset adjacency in local indices
        std::vector<std::vector<int>> nbr(k);
        for (int i = 0; i < k; ++i)
            for (int u : g.neighbors(vertices[i]))
                if (idx[u] >= 0)
                    nbr[i].push_back(idx[u]);

        // bucket peel for a degeneracy order on local indices
        std::vector<int> deg(k), pos(k), vert(k);
        int maxdeg = 0;
        for (int i = 0; i < k; ++i) {
            deg[i] = static_cast<int>(nbr[i].size());
            maxdeg = std::max(maxdeg, deg[i]);
        }
        std::vector<int> bin(maxdeg + 2, 0);
        for (int i = 0; i < k; ++i)
            ++bin[deg[i]];
        for (int d = 0, startv = 0; d <= maxdeg; ++d) {
            int cnt = bin[d];
            bin[d] = startv;
            startv += cnt;
        }
        {
            std::vector<int> cursor(bin.begin(), bin.end() - 1);
            for (int i = 0; i < k; ++i) {
                pos[i] = cursor[deg[i]]++;
                vert[pos[i]] = i;
            }
        }
        std::vector<char> done(k, 0);
        std::vector<int> peel;
        peel.reserve(k);
        for (int i = 0; i < k; ++i) {
            int v = vert[i];
            done[v] = 1;
            peel.push_back(v);
            for (int u : nbr[v]) {
                if (done[u] || deg[u] <= deg[v])
                    continue;
                int du = deg[u], pu = pos[u], pw = bin[du], x = vert[pw];
                if (u != x) {
                    std::swap(vert[pu], vert[pw]);
                    pos[u] = pw;
                    pos[x] = pu;
                }
                ++bin[du];
                --deg[u];
            }
        }

        // position p holds the (p+1)-th last peeled vertex
        std::vector<int> pos2vert(k);
        std::vector<int> local2pos(k);
        for (int p = 0; p < k; ++p) {
            int local = peel[k - 1 - p];
            pos2vert[p] = vertices[local];
            local2pos[local] = p;
        }

        std::vector<Bits> adj(k, Bits(k));
        for (int i = 0; i < k; ++i)
            for (int j : nbr[i])
                adj[local2pos[i]].set(local2pos[j]);

        return BranchBound(std::move(adj), std::move(pos2vert), lower,
            deadline)
            .run();
    }

} // namespace

MaxCliqueResult max_clique_exact(const Graph& g, int lower, Deadline deadline)
{
    std::vector<int> all(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v)
        all[v] = v;
    auto out = solve_subset(g, all, lower, deadline);
    CHROMA_CHECK(is_clique(g, out.clique.vertices), "exact clique invalid");
    return out;
}

MaxCliqueResult max_clique_on_subset(const WorkingGraph& w,
    std::span<const int> vertices, int lower, Deadline deadline)
{
    std::vector<int> verts(vertices.begin(), vertices.end());
    auto out = solve_subset(w.base(), verts, lower, deadline);
    CHROMA_CHECK(is_clique(w, out.clique.vertices), "exact clique invalid");
    return out;
}

int exact_lb(const WorkingGraph& w, int lb_k, Deadline deadline, int size_upper)
{
    if (w.empty())
        return lb_k;
    const Graph& g = w.base();
    const int n = g.num_vertices();

    int seed = -1;
    for (int v = 0; v < n; ++v)
        if (w.alive(v) && (seed < 0 || w.degree(v) > w.degree(seed)))
            seed = v;

    std::vector<char> in_test(n, 0), in_frontier(n, 0);
    std::vector<int> test, frontier;
    auto add_to_test = [&](int x) {
        if (in_test[x])
            return;
        in_test[x] = 1;
        test.push_back(x);
        w.for_alive_neighbors(x, [&](int u) {
            if (!in_test[u] && !in_frontier[u]) {
                in_frontier[u] = 1;
                frontier.push_back(u);
            }
        });
    };
    add_to_test(seed);
    w.for_alive_neighbors(seed, [&](int u) { add_to_test(u); });

    while (true) {
        deadline.clock->step();
        if (deadline.expired())
            return lb_k;

        // next growth vertex: adjacent to the set, most neighbors outside it
        int pick = -1, pick_gain = -1;
        std::size_t keep = 0;
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            int v = frontier[i];
            if (in_test[v]) {
                in_frontier[v] = 0;
                continue;
            }
            frontier[keep++] = v;
            int gain = 0;
            w.for_alive_neighbors(v, [&](int u) { gain += !in_test[u]; });
            if (gain > pick_gain || (gain == pick_gain && v < pick)) {
                pick = v;
                pick_gain = gain;
            }
        }
        frontier.resize(keep);

        if (pick < 0) {
            // the set saturated the component; solve what we have
            if (static_cast<int>(test.size()) < size_upper) {
                auto r = max_clique_on_subset(w, test, lb_k, deadline);
                if (r.clique.size() > lb_k)
                    return r.clique.size();
            }
            return lb_k;
        }

        add_to_test(pick);
        w.for_alive_neighbors(pick, [&](int u) { add_to_test(u); });

        if (static_cast<int>(test.size()) >= size_upper)
            return lb_k;
        auto r = max_clique_on_subset(w, test, lb_k, deadline);
        if (r.clique.size() > lb_k)
            return r.clique.size();
    }
}

} // namespace chroma
