#include "chroma/solution.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace chroma {

void write_solution(const Coloring& c, const Graph& g, std::ostream& out)
{
    const int n = g.num_vertices();
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v)
        order[v] = v;
    std::sort(order.begin(), order.end(),
        [&](int a, int b) { return g.label(a) < g.label(b); });

    out << "k " << c.num_colors << "\n";
    for (int v : order)
        out << "v " << g.label(v) << " " << c.assign[v] + 1 << "\n";
}

void write_solution(const Coloring& c, const Graph& g, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    write_solution(c, g, out);
    if (!out)
        throw std::runtime_error("write failed for '" + path + "'");
}

Coloring read_solution(std::istream& in, const Graph& g)
{
    std::map<std::int64_t, int> by_label;
    for (int v = 0; v < g.num_vertices(); ++v)
        by_label[g.label(v)] = v;

    Coloring c = Coloring::unassigned(g.num_vertices());
    std::string line;
    long lineno = 0;
    bool have_k = false;
    int declared = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag))
            continue;
        if (tag == "k") {
            if (!(ss >> declared))
                throw ParseError("malformed k line", lineno);
            have_k = true;
        } else if (tag == "v") {
            std::int64_t label;
            int color;
            if (!(ss >> label >> color) || color < 1)
                throw ParseError("malformed v line", lineno);
            auto it = by_label.find(label);
            if (it == by_label.end())
                throw ParseError("unknown vertex label", lineno);
            c.assign[it->second] = color - 1;
        } else {
            throw ParseError("unrecognized line '" + tag + "'", lineno);
        }
    }
    if (!have_k)
        throw std::runtime_error("solution file has no k line");
    c.recount();
    if (c.num_colors != declared)
        throw std::runtime_error("solution uses " + std::to_string(c.num_colors)
            + " colors but declares " + std::to_string(declared));
    return c;
}

Coloring read_solution(const std::string& path, const Graph& g)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    return read_solution(in, g);
}

} // namespace chroma
