#include "preinforce/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace preinforce {

Edge::Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {
    if (a == b)
        throw std::invalid_argument("Edge: loop {" + std::to_string(a) + "," +
                                    std::to_string(b) + "} is not allowed");
}

VertexSet VertexSet::of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.add(v);
    return s;
}

VertexSet VertexSet::from_indices(const std::vector<int>& vs) {
    VertexSet s;
    for (int v : vs) {
        if (v < 0 || v >= 64)
            throw std::out_of_range("VertexSet: vertex " + std::to_string(v) +
                                    " outside bitset capacity");
        s.add(v);
    }
    return s;
}

VertexSet VertexSet::full(int n) {
    if (n < 0 || n > 64) throw std::out_of_range("VertexSet::full: bad size");
    if (n == 64) return VertexSet(~std::uint64_t{0});
    return VertexSet((std::uint64_t{1} << n) - 1);
}

int VertexSet::count() const { return std::popcount(bits_); }

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1)
        out.push_back(std::countr_zero(b));
    return out;
}

bool lex_before(VertexSet a, VertexSet b) {
    std::uint64_t diff = a.bits() ^ b.bits();
    if (diff == 0) return false;
    std::uint64_t low = diff & (~diff + 1);
    // The set holding the lowest differing element comes first, unless the
    // other set has no element at or past that point (proper prefix).
    if (a.bits() & low) return b.bits() >= low;
    return a.bits() < low;
}

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("Graph: vertex " + std::to_string(v) +
                                " out of range [0," + std::to_string(n_) + ")");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw std::invalid_argument("Graph: loop at vertex " + std::to_string(u));
    auto& nu = adj_[static_cast<std::size_t>(u)];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v) return;  // idempotent
    nu.insert(it, v);
    auto& nv = adj_[static_cast<std::size_t>(v)];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++m_;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nu = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nu.begin(), nu.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
}

int Graph::min_degree() const {
    int d = n_ == 0 ? 0 : degree(0);
    for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[static_cast<std::size_t>(u)])
            if (u < v) out.push_back(Edge(u, v));
    return out;
}

std::vector<std::uint64_t> Graph::adjacency_bits() const {
    if (n_ > 64)
        throw std::invalid_argument(
            "graph has " + std::to_string(n_) +
            " vertices; bitset kernels support at most 64");
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n_), 0);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[static_cast<std::size_t>(u)])
            rows[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    return rows;
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path_graph: need n >= 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

int PartiteSpec::total() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

Graph complete_multipartite(const PartiteSpec& spec) {
    if (spec.parts.size() < 2)
        throw std::invalid_argument("complete_multipartite: need t >= 2 parts");
    for (int p : spec.parts)
        if (p < 1)
            throw std::invalid_argument("complete_multipartite: part sizes must be >= 1");
    Graph g(spec.total());
    int base_i = 0;
    for (std::size_t i = 0; i < spec.parts.size(); ++i) {
        int base_j = base_i + spec.parts[i];
        for (std::size_t j = i + 1; j < spec.parts.size(); ++j) {
            for (int a = 0; a < spec.parts[i]; ++a)
                for (int b = 0; b < spec.parts[j]; ++b)
                    g.add_edge(base_i + a, base_j + b);
            base_j += spec.parts[j];
        }
        base_i += spec.parts[i];
    }
    return g;
}

std::vector<Edge> complement_nonedges(const Graph& g) {
    std::vector<Edge> out;
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
        const auto& nu = g.neighbors(u);
        auto it = nu.begin();
        for (int v = u + 1; v < n; ++v) {
            while (it != nu.end() && *it < v) ++it;
            if (it == nu.end() || *it != v) out.push_back(Edge(u, v));
        }
    }
    return out;
}

Graph add_edges(const Graph& g, const std::vector<Edge>& b) {
    Graph out = g;
    for (const Edge& e : b) {
        if (out.has_edge(e.u, e.v))
            throw std::invalid_argument("add_edges: edge {" + std::to_string(e.u) +
                                        "," + std::to_string(e.v) +
                                        "} already present");
        out.add_edge(e.u, e.v);
    }
    return out;
}

namespace {

bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == ' ' || c == '\t' || c == '\r') continue;
        return c == '#';
    }
    return true;  // blank
}

std::pair<long, long> parse_int_pair(const std::string& line, int lineno) {
    std::istringstream in(line);
    long a, b;
    std::string extra;
    if (!(in >> a >> b) || (in >> extra))
        throw std::runtime_error("edge list line " + std::to_string(lineno) +
                                 ": expected two integers, got '" + line + "'");
    return {a, b};
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    long n = -1, m = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_comment_or_blank(line)) continue;
        std::tie(n, m) = parse_int_pair(line, lineno);
        break;
    }
    if (n < 0 || m < 0)
        throw std::runtime_error("edge list: missing or negative 'n m' header");
    Graph g(static_cast<int>(n));
    long seen = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_comment_or_blank(line)) continue;
        auto [u, v] = parse_int_pair(line, lineno);
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::runtime_error("edge list line " + std::to_string(lineno) +
                                     ": vertex index out of range");
        if (u == v)
            throw std::runtime_error("edge list line " + std::to_string(lineno) +
                                     ": loop is not allowed");
        if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
            throw std::runtime_error("edge list line " + std::to_string(lineno) +
                                     ": duplicate edge");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
        ++seen;
    }
    if (seen != m)
        throw std::runtime_error("edge list: header announced " + std::to_string(m) +
                                 " edges, found " + std::to_string(seen));
    return g;
}

std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

}  // namespace preinforce
