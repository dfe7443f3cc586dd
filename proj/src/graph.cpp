#include "pentaloss/graph.hpp"

#include <sstream>
#include <stdexcept>

namespace pentaloss {

GraphSpec::GraphSpec(std::size_t n, std::initializer_list<std::pair<std::size_t, std::size_t>> e)
    : n_vertices(n) {
    for (const auto& [u, v] : e) add_edge(u, v);
}

void GraphSpec::add_edge(std::size_t u, std::size_t v) {
    if (u == v) {
        throw std::invalid_argument("graph edge must join distinct vertices");
    }
    if (u < 1 || v < 1 || u > n_vertices || v > n_vertices) {
        throw std::invalid_argument("graph edge vertex out of range");
    }
    if (u > v) std::swap(u, v);
    if (!edges.insert({u, v}).second) {
        throw std::invalid_argument("duplicate graph edge");
    }
}

bool GraphSpec::has_edge(std::size_t u, std::size_t v) const {
    if (u > v) std::swap(u, v);
    return edges.count({u, v}) > 0;
}

std::vector<std::size_t> GraphSpec::neighbors(std::size_t v) const {
    std::vector<std::size_t> out;
    for (const auto& [a, b] : edges) {
        if (a == v) out.push_back(b);
        if (b == v) out.push_back(a);
    }
    return out;
}

std::string GraphSpec::to_edge_list() const {
    std::ostringstream os;
    for (const auto& [u, v] : edges) {
        os << u << " " << v << "\n";
    }
    return os.str();
}

GraphSpec GraphSpec::from_edge_list(std::size_t n_vertices, const std::string& text) {
    GraphSpec g;
    g.n_vertices = n_vertices;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::size_t u = 0, v = 0;
        if (!(ls >> u >> v)) {
            throw std::invalid_argument("bad edge list line: " + line);
        }
        g.add_edge(u, v);
    }
    return g;
}

GraphSpec ring_graph(std::size_t n) {
    if (n < 3) {
        throw std::invalid_argument("ring graph needs at least 3 vertices");
    }
    GraphSpec g;
    g.n_vertices = n;
    for (std::size_t i = 1; i <= n; ++i) {
        g.add_edge(i, i % n + 1);
    }
    return g;
}

std::vector<PauliOperator> graph_stabilizers(const GraphSpec& g) {
    std::vector<PauliOperator> out;
    out.reserve(g.n_vertices);
    for (std::size_t v = 1; v <= g.n_vertices; ++v) {
        PauliOperator k(g.n_vertices);
        k.set_x(v - 1, true);
        for (std::size_t nb : g.neighbors(v)) {
            k.set_z(nb - 1, true);
        }
        out.push_back(std::move(k));
    }
    return out;
}

}  // namespace pentaloss
