#ifndef CHROMA_GRAPH_HPP
#define CHROMA_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chroma {

/// Immutable undirected simple graph in compressed adjacency form.
/// Internal ids are dense and 0-based; external labels are kept only for
/// output. Adjacency lists are strictly sorted, with no self-loops and no
/// duplicates, so sum of degrees equals 2m.
class Graph {
public:
    Graph() = default;

    // Builds from an edge list. Self-loops and duplicate (undirected) edges
    // are dropped; the counts are reported through the out-parameters when
    // given. Vertex ids must already be dense in [0, n).
    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges,
        std::vector<std::int64_t> labels = {},
        long long* duplicates_dropped = nullptr,
        long long* self_loops_dropped = nullptr);

    int num_vertices() const { return n_; }
    long long num_edges() const { return m_; }

    std::span<const int> neighbors(int v) const
    {
        return {adj_.data() + offset_[v],
            static_cast<std::size_t>(offset_[v + 1] - offset_[v])};
    }

    int degree(int v) const { return offset_[v + 1] - offset_[v]; }

    bool adjacent(int u, int v) const;

    // external label of an internal id; defaults to v+1 (DIMACS convention)
    std::int64_t label(int v) const { return labels_[v]; }
    const std::vector<std::int64_t>& labels() const { return labels_; }

    // throws std::logic_error if a structural invariant is broken
    void validate() const;

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<long long> offset_; // size n+1
    std::vector<int> adj_;          // size 2m
    std::vector<std::int64_t> labels_;
};

/// Induced-subgraph view of a Graph: an alive mask plus dynamic degrees that
/// count only alive neighbors. Single-owner, mutated by one solver run.
class WorkingGraph {
public:
    explicit WorkingGraph(const Graph& g);

    const Graph& base() const { return *g_; }
    int num_vertices() const { return g_->num_vertices(); }
    int alive_count() const { return alive_count_; }
    bool empty() const { return alive_count_ == 0; }

    bool alive(int v) const { return alive_[v] != 0; }
    int degree(int v) const { return degree_[v]; }

    // removing a dead vertex is a contract violation
    void remove_vertex(int v);
    void remove_vertices(std::span<const int> vs);

    std::vector<int> alive_vertices() const; // ascending ids

    template <typename F> void for_alive_neighbors(int v, F&& f) const
    {
        for (int u : g_->neighbors(v))
            if (alive_[u])
                f(u);
    }

private:
    const Graph* g_;
    std::vector<char> alive_;
    std::vector<int> degree_;
    int alive_count_;
};

/// Shell numbers from k-core peeling plus the peel order itself, which is a
/// degeneracy ordering (shell numbers nondecreasing along it).
struct CoreDecomposition {
    std::vector<int> shell;      // per vertex; -1 for dead vertices
    std::vector<int> peel_order; // alive vertices in removal order

    int degeneracy() const;
};

CoreDecomposition core_decompose(const WorkingGraph& w);
CoreDecomposition core_decompose(const Graph& g);

// ---- input / output ----------------------------------------------------

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, long line)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ")")
        , line_(line)
    {
    }
    long line() const { return line_; }

private:
    long line_;
};

struct ParsedGraph {
    Graph graph;
    long long duplicate_edges = 0;
    long long self_loops = 0;
};

enum class InputFormat { dimacs, edgelist, autodetect };

// DIMACS .col: 'c' comments, 'p edge <n> <m>' header, 'e <u> <v>' 1-based
ParsedGraph parse_dimacs(std::istream& in);

// one "u v" pair per line, '#'/'%' comments, arbitrary non-negative ids
// remapped to dense 0-based ids (original ids kept as labels)
ParsedGraph parse_edgelist(std::istream& in);

// format auto-detection by first non-comment token ('p'/'c' means DIMACS)
ParsedGraph parse_graph(std::istream& in, InputFormat fmt = InputFormat::autodetect);
ParsedGraph load_graph(const std::string& path, InputFormat fmt = InputFormat::autodetect);

void write_dimacs(const Graph& g, std::ostream& out);

} // namespace chroma

#endif
