#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace preinforce {

// Undirected edge in canonical order (u < v).
struct Edge {
    int u = 0;
    int v = 1;

    Edge() = default;
    Edge(int a, int b);  // normalizes order, throws on a == b

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Subset of {0, ..., 63}, one bit per vertex. All exact kernels work on
// graphs with at most 64 vertices, so a single word is enough.
class VertexSet {
public:
    VertexSet() = default;
    static VertexSet from_bits(std::uint64_t bits) { return VertexSet(bits); }
    static VertexSet of(std::initializer_list<int> vs);
    static VertexSet from_indices(const std::vector<int>& vs);
    static VertexSet full(int n);

    bool contains(int v) const { return (bits_ >> v) & 1u; }
    void add(int v) { bits_ |= std::uint64_t{1} << v; }
    void remove(int v) { bits_ &= ~(std::uint64_t{1} << v); }
    int count() const;
    bool empty() const { return bits_ == 0; }
    std::uint64_t bits() const { return bits_; }
    std::vector<int> to_vector() const;  // ascending

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    std::uint64_t bits_ = 0;
};

// True when a precedes b in lexicographic order of the sorted member lists.
// For sets of equal size this is decided by the lowest differing element.
bool lex_before(VertexSet a, VertexSet b);

// Simple undirected graph on vertices 0..n-1, adjacency kept as sorted
// neighbor lists. No loops, no multi-edges.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return m_; }

    // Idempotent; throws on loops and out-of-range endpoints.
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;

    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    int min_degree() const;  // 0 for the empty graph
    int max_degree() const;

    std::vector<Edge> edges() const;  // canonical (u < v, lexicographic) order

    // Per-vertex neighborhood bitmasks; requires vertex_count() <= 64.
    std::vector<std::uint64_t> adjacency_bits() const;

    void check_vertex(int v) const;  // throws std::out_of_range

private:
    int n_ = 0;
    std::size_t m_ = 0;
    std::vector<std::vector<int>> adj_;
};

Graph path_graph(int n);   // edges {i, i+1}; n >= 1
Graph cycle_graph(int n);  // path edges plus {n-1, 0}; n >= 3

// Part sizes of a complete t-partite graph, in spec order.
struct PartiteSpec {
    std::vector<int> parts;
    int total() const;
};

// Vertices grouped by part in spec order; edges exactly between distinct
// parts. Requires t >= 2 and every part size >= 1.
Graph complete_multipartite(const PartiteSpec& spec);

// Non-edges {u, v} with u < v, in canonical order.
std::vector<Edge> complement_nonedges(const Graph& g);

// G + B. Every edge of B must be a non-edge of g (a repeated or already
// present edge signals a malformed certificate and throws).
Graph add_edges(const Graph& g, const std::vector<Edge>& b);

// Text edge-list format: first non-comment line "n m", then m lines "u v"
// with 0-based indices; '#' starts a comment line.
Graph parse_edge_list(const std::string& text);
std::string serialize_edge_list(const Graph& g);

}  // namespace preinforce
