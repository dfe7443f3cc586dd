#ifndef PENTALOSS_GRAPH_HPP
#define PENTALOSS_GRAPH_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pentaloss/pauli.hpp"

namespace pentaloss {

/// A simple undirected graph. Vertices are numbered 1..n; edges are stored
/// as ordered pairs (u < v). Self-loops and duplicates are rejected.
struct GraphSpec {
    std::size_t n_vertices = 0;
    std::set<std::pair<std::size_t, std::size_t>> edges;

    GraphSpec() = default;
    GraphSpec(std::size_t n, std::initializer_list<std::pair<std::size_t, std::size_t>> e);

    void add_edge(std::size_t u, std::size_t v);
    bool has_edge(std::size_t u, std::size_t v) const;
    std::vector<std::size_t> neighbors(std::size_t v) const;

    /// One "u v" pair per line.
    std::string to_edge_list() const;
    static GraphSpec from_edge_list(std::size_t n_vertices, const std::string& text);
};

/// Cycle graph on n >= 3 vertices with edges {i, i+1 mod n}.
GraphSpec ring_graph(std::size_t n);

/// One operator per vertex: X on the vertex, Z on each neighbor.
std::vector<PauliOperator> graph_stabilizers(const GraphSpec& g);

}  // namespace pentaloss

#endif
