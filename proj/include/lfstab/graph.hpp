#ifndef LFSTAB_GRAPH_HPP
#define LFSTAB_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lfstab {

/// Largest supported order; keeps the graph6 size byte to a single character
/// and every neighbourhood in one machine word.
inline constexpr int kMaxOrder = 62;

/// Vertex subsets are plain 64-bit masks, bit v set iff v is in the set.
using VertexSet = std::uint64_t;

inline constexpr VertexSet bit(int v) { return VertexSet{1} << v; }
inline constexpr VertexSet all_vertices(int n) { return n >= 64 ? ~VertexSet{0} : bit(n) - 1; }
inline int popcount(VertexSet s) { return std::popcount(s); }
inline int lowest(VertexSet s) { return std::countr_zero(s); }

/// Calls f(v) for every vertex in s, in increasing order.
template <typename F>
inline void for_each_vertex(VertexSet s, F&& f) {
    while (s) {
        f(std::countr_zero(s));
        s &= s - 1;
    }
}

std::vector<int> to_vector(VertexSet s);
VertexSet to_set(std::span<const int> vertices);

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph from_edges(int n, std::initializer_list<Edge> edges);
    /// Rows must be symmetric and loop-free; throws BadParams otherwise.
    static Graph from_rows(std::span<const VertexSet> rows);

    int order() const { return static_cast<int>(adj_.size()); }
    VertexSet vertices() const { return all_vertices(order()); }
    VertexSet neighbors(int v) const { return adj_[v]; }
    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
    int degree(int v) const { return popcount(adj_[v]); }
    int edge_count() const;
    std::span<const VertexSet> rows() const { return adj_; }
    std::vector<Edge> edges() const;

    /// Copy with edge uv added (u != v).
    Graph with_edge(int u, int v) const;
    /// Copy with edge uv removed.
    Graph without_edge(int u, int v) const;
    /// Induced subgraph on `keep`, vertices renumbered in increasing order.
    Graph induced(VertexSet keep) const;
    /// Relabel: vertex v of this graph becomes perm[v].
    Graph permuted(std::span<const int> perm) const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<VertexSet> adj_;
};

/// Mutable accumulator for building a Graph edge by edge.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);
    GraphBuilder& add_edge(int u, int v);
    GraphBuilder& add_clique(std::span<const int> vertices);
    int order() const { return static_cast<int>(adj_.size()); }
    Graph build() const;

private:
    std::vector<VertexSet> adj_;
};

// ---------------------------------------------------------------------------
// graph6

Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

// ---------------------------------------------------------------------------
// degrees and connectivity

struct DegreeProfile {
    std::vector<int> degrees;
    int min_degree = 0;
    int max_degree = 0;
    int edges = 0;
};

DegreeProfile degree_profile(const Graph& g);
int min_degree(const Graph& g);

/// Vertices reachable from `start` using only vertices of `allowed`
/// (start itself is always included).
VertexSet reachable(const Graph& g, int start, VertexSet allowed);
bool is_connected(const Graph& g);
std::vector<VertexSet> components(const Graph& g);

struct BlockDecomposition {
    VertexSet cut_vertices = 0;
    std::vector<VertexSet> blocks;
    std::vector<VertexSet> end_blocks;
};

struct ConnectivityReport {
    bool connected = false;
    bool two_connected = false;
    BlockDecomposition blocks;
};

/// Lowpoint DFS; isolated vertices form singleton blocks.
ConnectivityReport connectivity_report(const Graph& g);
BlockDecomposition block_decomposition(const Graph& g);
bool is_two_connected(const Graph& g);
bool has_cut_vertex(const Graph& g);

/// Order of a longest path between the cut vertices of two distinct end
/// blocks (1 when the two end blocks hang off the same cut vertex).
int block_path_order(const Graph& g, VertexSet b1, VertexSet b2);

// ---------------------------------------------------------------------------
// assembly

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph join(const Graph& a, const Graph& b);
Graph disjoint_union(std::span<const Graph> parts);
Graph disjoint_union(std::initializer_list<Graph> parts);
Graph complement(const Graph& g);
Graph copies(int k, const Graph& g);

// ---------------------------------------------------------------------------
// canonical labelling

struct CanonicalLabelling {
    /// order[i] is the vertex placed at canonical position i.
    std::vector<int> order;
    /// position[v] is the canonical position of vertex v.
    std::vector<int> position;
    /// True when the search met a non-identity automorphism.
    bool has_automorphism = false;
};

CanonicalLabelling canonical_labelling(const Graph& g);
/// The graph relabelled into canonical form.
Graph canonical_form(const Graph& g);
/// graph6 of the canonical form; equal iff the graphs are isomorphic.
std::string canonical_label(const Graph& g);
bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace lfstab

#endif
