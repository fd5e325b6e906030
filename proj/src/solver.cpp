#include "chroma/solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "chroma/clique.hpp"
#include "chroma/reduce.hpp"
#include "chroma/rng.hpp"
#include "chroma/validate.hpp"

namespace chroma {

const char* to_string(BoundStage s)
{
    switch (s) {
    case BoundStage::clique_heuristic:
        return "clique-heuristic";
    case BoundStage::exact_clique:
        return "exact-clique";
    case BoundStage::mdd:
        return "mdd-greedy";
    case BoundStage::dsatur:
        return "dsatur";
    default:
        return "none";
    }
}

void SolverConfig::validate() const
{
    if (cutoff <= 0.0)
        throw std::invalid_argument("cutoff must be positive");
    if (alpha < 0.0 || alpha > 1.0)
        throw std::invalid_argument("alpha must be in [0,1]");
    if (lambda < 0.0 || lambda > 1.0)
        throw std::invalid_argument("lambda must be in [0,1]");
    if (exactlb_budget <= 0.0)
        throw std::invalid_argument("exactlb budget must be positive");
    if (clique_budget <= 0.0)
        throw std::invalid_argument("clique heuristic budget must be positive");
    if (size_upper <= 0)
        throw std::invalid_argument("size_upper must be positive");
    if (seconds_per_tick <= 0.0)
        throw std::invalid_argument("seconds_per_tick must be positive");
}

namespace {

    Coloring restrict_to_alive(const Coloring& f, const WorkingGraph& w)
    {
        Coloring out = Coloring::unassigned(w.num_vertices());
        for (int v = 0; v < w.num_vertices(); ++v)
            if (w.alive(v))
                out.assign[v] = f.assign[v];
        out.recount();
        return out;
    }

} // namespace

SolveResult solve(const Graph& g, const SolverConfig& cfg)
{
    cfg.validate();
    const int n = g.num_vertices();

    SolveResult res;
    res.coloring = Coloring::unassigned(n);
    if (n == 0) {
        res.optimal = true;
        return res;
    }

    std::unique_ptr<Clock> clock;
    if (cfg.deterministic_clock)
        clock = std::make_unique<TickClock>(cfg.seconds_per_tick);
    else
        clock = std::make_unique<WallClock>();
    Deadline cutoff = Deadline::after(*clock, cfg.cutoff);

    Rng rng_clique = make_rng(cfg.seed, RngStream::clique);
    Rng rng_reorder = make_rng(cfg.seed, RngStream::reorder);

    WorkingGraph w(g);
    DeletionStack stack;
    BoundsState bounds;
    bounds.ub_star = n;
    Coloring best = Coloring::unassigned(n); // best coloring of the working graph
    bool have_best = false;

    while (!cutoff.expired()) {
        ++res.iterations;
        clock->step();
        bounds.reduced_this_iter = false;

        int last_lb = bounds.lb_star;
        Clique c = find_clique_heuristic(
            w, rng_clique, cutoff.clipped(cfg.clique_budget));
        bounds.lb_star = std::max(bounds.lb_star, c.size());
        if (bounds.lb_star > last_lb) {
            bounds.lb_stage = BoundStage::clique_heuristic;
            auto red = redu_rule(w, bounds.lb_star);
            stack.push(red.removed, bounds.lb_star);
            bounds.reduced_this_iter |= red.reduced;
        }

        if (bounds.exactlb_enabled) {
            int lb_e = exact_lb(w, bounds.lb_star,
                cutoff.clipped(cfg.exactlb_budget), cfg.size_upper);
            if (lb_e > bounds.lb_star) {
                bounds.lb_star = lb_e;
                bounds.lb_stage = BoundStage::exact_clique;
                auto red = redu_rule(w, bounds.lb_star);
                stack.push(red.removed, bounds.lb_star);
                bounds.reduced_this_iter |= red.reduced;
            }
            if (lb_e == bounds.last_lb_e)
                bounds.exactlb_enabled = false; // stopped paying off
            bounds.last_lb_e = lb_e;
        }

        if (w.empty()) {
            res.bounds_trace.emplace_back(bounds.lb_star, bounds.ub_star);
            break;
        }

        Coloring f;
        BoundStage pass;
        if (bounds.reduced_this_iter || bounds.ub_star == n) {
            pass = BoundStage::mdd;
            Coloring incumbent;
            if (have_best)
                incumbent = restrict_to_alive(best, w);
            auto cores = core_decompose(w);
            std::vector<int> rank;
            if (rng_reorder.coin(cfg.alpha)) {
                auto seq = mdd_sort(w, cfg.lambda);
                rank.assign(n, 0);
                for (std::size_t i = 0; i < seq.size(); ++i)
                    rank[seq[i]] = static_cast<int>(i);
            }
            MddOrder order
                = build_mdd_order(cores, rank.empty() ? nullptr : &rank);
            f = mdd_color(w, have_best ? &incumbent : nullptr, order);
        } else {
            pass = BoundStage::dsatur;
            f = dsatur(w);
        }

        if (!have_best || f.num_colors < bounds.ub_star) {
            best = std::move(f);
            have_best = true;
            bounds.ub_star = std::min(bounds.ub_star, best.num_colors);
            bounds.ub_stage = pass;
            res.time_to_best = clock->now();
        }

        res.bounds_trace.emplace_back(bounds.lb_star, bounds.ub_star);
        if (bounds.ub_star == bounds.lb_star)
            break;
    }

    Coloring partial = restrict_to_alive(best, w);
    res.coloring = extend_coloring(g, partial, stack,
        std::max(bounds.lb_star, 1));
    res.num_colors = res.coloring.num_colors;
    res.lb_final = bounds.lb_star;
    res.lb_stage = bounds.lb_stage;
    res.ub_stage = bounds.ub_stage;
    res.optimal = res.lb_final == res.num_colors;
    if (res.time_to_best == 0.0)
        res.time_to_best = clock->now();

    CHROMA_CHECK(verify_coloring(g, res.coloring).ok, "final coloring improper");
    return res;
}

VerifyResult verify_coloring(const Graph& g, const Coloring& c)
{
    VerifyResult out;
    if (static_cast<int>(c.assign.size()) != g.num_vertices())
        return out;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (c.assign[v] < 0) {
            out.u = v;
            return out;
        }
    for (int v = 0; v < g.num_vertices(); ++v)
        for (int u : g.neighbors(v))
            if (u > v && c.assign[u] == c.assign[v]) {
                out.u = v;
                out.v = u;
                return out;
            }
    out.ok = true;
    return out;
}

namespace {

    // k-colorability backtracking; vertices ordered clique-first then by
    // degree, new colors opened one at a time
    bool colorable(const Graph& g, const std::vector<int>& order, int fixed,
        int k, std::vector<int>& color)
    {
        const int n = static_cast<int>(order.size());
        int depth = fixed;
        std::vector<int> next_try(n, 0);
        while (true) {
            if (depth == n)
                return true;
            int v = order[depth];
            int used = 0;
            for (int i = 0; i < depth; ++i)
                used = std::max(used, color[order[i]] + 1);
            int limit = std::min(k, used + 1);
            int c = next_try[depth];
            bool advanced = false;
            for (; c < limit; ++c) {
                bool clash = false;
                for (int u : g.neighbors(v))
                    if (color[u] == c) {
                        clash = true;
                        break;
                    }
                if (!clash) {
                    color[v] = c;
                    next_try[depth] = c + 1;
                    ++depth;
                    if (depth < n)
                        next_try[depth] = 0;
                    advanced = true;
                    break;
                }
            }
            if (advanced)
                continue;
            color[v] = -1;
            next_try[depth] = 0;
            --depth;
            if (depth < fixed)
                return false;
            color[order[depth]] = -1;
        }
    }

} // namespace

int brute_force_chromatic(const Graph& g)
{
    const int n = g.num_vertices();
    if (n > 16)
        throw std::invalid_argument("brute_force_chromatic is guarded to n <= 16");
    if (n == 0)
        return 0;
    if (g.num_edges() == 0)
        return 1;

    // greedy maximal clique as a seed lower bound
    std::vector<int> by_degree(n);
    for (int v = 0; v < n; ++v)
        by_degree[v] = v;
    std::sort(by_degree.begin(), by_degree.end(),
        [&](int a, int b) { return g.degree(a) != g.degree(b)
                ? g.degree(a) > g.degree(b)
                : a < b; });
    std::vector<int> clique;
    for (int v : by_degree) {
        bool ok = true;
        for (int u : clique)
            if (!g.adjacent(u, v)) {
                ok = false;
                break;
            }
        if (ok)
            clique.push_back(v);
    }

    std::vector<char> in_clique(n, 0);
    for (int v : clique)
        in_clique[v] = 1;
    std::vector<int> order = clique;
    for (int v : by_degree)
        if (!in_clique[v])
            order.push_back(v);

    std::vector<int> color(n, -1);
    for (int k = static_cast<int>(clique.size()); k <= n; ++k) {
        std::fill(color.begin(), color.end(), -1);
        for (std::size_t i = 0; i < clique.size(); ++i)
            color[clique[i]] = static_cast<int>(i);
        if (colorable(g, order, static_cast<int>(clique.size()), k, color))
            return k;
    }
    return n; // unreachable; n colors always suffice
}

} // namespace chroma
