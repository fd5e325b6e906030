#include "chroma/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace chroma {

namespace {

    // splits a line into whitespace-separated tokens
    std::vector<std::string_view> tokenize(const std::string& line)
    {
        std::vector<std::string_view> out;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
                ++i;
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
                ++j;
            if (j > i)
                out.push_back(std::string_view(line).substr(i, j - i));
            i = j;
        }
        return out;
    }

    long long parse_int(std::string_view tok, long line, const char* what)
    {
        long long value = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || p != tok.data() + tok.size())
            throw ParseError(std::string("expected integer for ") + what
                    + ", got '" + std::string(tok) + "'",
                line);
        return value;
    }

} // namespace

ParsedGraph parse_dimacs(std::istream& in)
{
    std::string line;
    long lineno = 0;
    bool have_header = false;
    long long n = 0, declared_m = 0;
    std::vector<std::pair<int, int>> edges;

    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty() || toks[0] == "c")
            continue;
        if (!have_header) {
            if (toks[0] != "p")
                throw ParseError("missing problem line before '" + std::string(toks[0]) + "'", lineno);
            if (toks.size() != 4
                || (toks[1] != "edge" && toks[1] != "edges" && toks[1] != "col"))
                throw ParseError("malformed problem line", lineno);
            n = parse_int(toks[2], lineno, "vertex count");
            declared_m = parse_int(toks[3], lineno, "edge count");
            if (n < 0 || declared_m < 0)
                throw ParseError("negative size in problem line", lineno);
            edges.reserve(static_cast<std::size_t>(declared_m));
            have_header = true;
            continue;
        }
        if (toks[0] == "e") {
            if (toks.size() != 3)
                throw ParseError("malformed edge line", lineno);
            long long u = parse_int(toks[1], lineno, "edge endpoint");
            long long v = parse_int(toks[2], lineno, "edge endpoint");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError("vertex index out of 1..n", lineno);
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
            continue;
        }
        throw ParseError("unrecognized line type '" + std::string(toks[0]) + "'", lineno);
    }
    if (!have_header)
        throw ParseError("missing problem line", lineno == 0 ? 1 : lineno);

    ParsedGraph out;
    out.graph = Graph::from_edges(static_cast<int>(n), std::move(edges), {},
        &out.duplicate_edges, &out.self_loops);
    return out;
}

ParsedGraph parse_edgelist(std::istream& in)
{
    std::string line;
    long lineno = 0;
    std::vector<std::pair<std::int64_t, std::int64_t>> raw;

    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty() || toks[0][0] == '#' || toks[0][0] == '%')
            continue;
        if (toks.size() != 2)
            throw ParseError("expected two integers per edge line", lineno);
        std::int64_t u = parse_int(toks[0], lineno, "vertex id");
        std::int64_t v = parse_int(toks[1], lineno, "vertex id");
        if (u < 0 || v < 0)
            throw ParseError("negative vertex id", lineno);
        raw.emplace_back(u, v);
    }
    if (raw.empty())
        throw ParseError("empty graph", lineno == 0 ? 1 : lineno);

    // remap external ids to dense 0-based ids, ascending by external id
    std::vector<std::int64_t> labels;
    labels.reserve(2 * raw.size());
    for (auto [u, v] : raw) {
        labels.push_back(u);
        labels.push_back(v);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    std::unordered_map<std::int64_t, int> id;
    id.reserve(labels.size() * 2);
    for (std::size_t i = 0; i < labels.size(); ++i)
        id[labels[i]] = static_cast<int>(i);

    std::vector<std::pair<int, int>> edges;
    edges.reserve(raw.size());
    for (auto [u, v] : raw)
        edges.emplace_back(id[u], id[v]);

    ParsedGraph out;
    const int n = static_cast<int>(labels.size());
    out.graph = Graph::from_edges(n, std::move(edges), std::move(labels),
        &out.duplicate_edges, &out.self_loops);
    return out;
}

ParsedGraph parse_graph(std::istream& in, InputFormat fmt)
{
    if (fmt == InputFormat::dimacs)
        return parse_dimacs(in);
    if (fmt == InputFormat::edgelist)
        return parse_edgelist(in);

    // buffer the stream so detection can re-read it
    std::stringstream buf;
    buf << in.rdbuf();
    std::string content = buf.str();

    InputFormat detected = InputFormat::edgelist;
    std::istringstream scan(content);
    std::string line;
    while (std::getline(scan, line)) {
        auto toks = tokenize(line);
        if (toks.empty() || toks[0][0] == '#' || toks[0][0] == '%')
            continue;
        if (toks[0] == "p" || toks[0] == "c")
            detected = InputFormat::dimacs;
        break;
    }
    std::istringstream replay(content);
    return detected == InputFormat::dimacs ? parse_dimacs(replay)
                                           : parse_edgelist(replay);
}

ParsedGraph load_graph(const std::string& path, InputFormat fmt)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    return parse_graph(in, fmt);
}

void write_dimacs(const Graph& g, std::ostream& out)
{
    out << "p edge " << g.num_vertices() << " " << g.num_edges() << "\n";
    for (int u = 0; u < g.num_vertices(); ++u)
        for (int v : g.neighbors(u))
            if (u < v)
                out << "e " << u + 1 << " " << v + 1 << "\n";
}

} // namespace chroma
