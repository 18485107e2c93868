#include "lfstab/graph.hpp"

#include <algorithm>
#include <string>

#include "lfstab/error.hpp"

namespace lfstab {

namespace {

void check_order(int n) {
    if (n < 0 || n > kMaxOrder)
        throw Error(ErrorCode::UnsupportedOrder, "order " + std::to_string(n) + " outside 0.." + std::to_string(kMaxOrder));
}

void check_vertex(int n, int v) {
    if (v < 0 || v >= n) throw Error(ErrorCode::BadParams, "vertex " + std::to_string(v) + " out of range");
}

}  // namespace

std::vector<int> to_vector(VertexSet s) {
    std::vector<int> out;
    out.reserve(popcount(s));
    for_each_vertex(s, [&](int v) { out.push_back(v); });
    return out;
}

VertexSet to_set(std::span<const int> vertices) {
    VertexSet s = 0;
    for (int v : vertices) s |= bit(v);
    return s;
}

Graph::Graph(int n) {
    check_order(n);
    adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    GraphBuilder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return b.build();
}

Graph Graph::from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph Graph::from_rows(std::span<const VertexSet> rows) {
    const int n = static_cast<int>(rows.size());
    check_order(n);
    const VertexSet all = all_vertices(n);
    for (int v = 0; v < n; ++v) {
        if (rows[v] & ~all) throw Error(ErrorCode::BadParams, "row " + std::to_string(v) + " names a missing vertex");
        if (rows[v] & bit(v)) throw Error(ErrorCode::BadParams, "loop at vertex " + std::to_string(v));
        for_each_vertex(rows[v], [&](int u) {
            if (!(rows[u] & bit(v))) throw Error(ErrorCode::BadParams, "asymmetric adjacency");
        });
    }
    Graph g;
    g.adj_.assign(rows.begin(), rows.end());
    return g;
}

int Graph::edge_count() const {
    int twice = 0;
    for (VertexSet r : adj_) twice += popcount(r);
    return twice / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < order(); ++u)
        for_each_vertex(adj_[u] & ~all_vertices(u + 1), [&](int v) { out.emplace_back(u, v); });
    return out;
}

Graph Graph::with_edge(int u, int v) const {
    check_vertex(order(), u);
    check_vertex(order(), v);
    if (u == v) throw Error(ErrorCode::BadParams, "loop requested");
    Graph g = *this;
    g.adj_[u] |= bit(v);
    g.adj_[v] |= bit(u);
    return g;
}

Graph Graph::without_edge(int u, int v) const {
    check_vertex(order(), u);
    check_vertex(order(), v);
    Graph g = *this;
    g.adj_[u] &= ~bit(v);
    g.adj_[v] &= ~bit(u);
    return g;
}

Graph Graph::induced(VertexSet keep) const {
    keep &= vertices();
    std::vector<int> index(adj_.size(), -1);
    int next = 0;
    for_each_vertex(keep, [&](int v) { index[v] = next++; });
    Graph g(next);
    for_each_vertex(keep, [&](int v) {
        VertexSet row = 0;
        for_each_vertex(adj_[v] & keep, [&](int u) { row |= bit(index[u]); });
        g.adj_[index[v]] = row;
    });
    return g;
}

Graph Graph::permuted(std::span<const int> perm) const {
    const int n = order();
    if (static_cast<int>(perm.size()) != n) throw Error(ErrorCode::BadParams, "permutation size mismatch");
    VertexSet seen = 0;
    for (int p : perm) {
        check_vertex(n, p);
        seen |= bit(p);
    }
    if (seen != vertices()) throw Error(ErrorCode::BadParams, "not a permutation");
    Graph g(n);
    for (int v = 0; v < n; ++v) {
        VertexSet row = 0;
        for_each_vertex(adj_[v], [&](int u) { row |= bit(perm[u]); });
        g.adj_[perm[v]] = row;
    }
    return g;
}

GraphBuilder::GraphBuilder(int n) {
    check_order(n);
    adj_.assign(static_cast<std::size_t>(n), 0);
}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
    check_vertex(order(), u);
    check_vertex(order(), v);
    if (u == v) throw Error(ErrorCode::BadParams, "loop at vertex " + std::to_string(u));
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
    return *this;
}

GraphBuilder& GraphBuilder::add_clique(std::span<const int> vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j) add_edge(vertices[i], vertices[j]);
    return *this;
}

Graph GraphBuilder::build() const { return Graph::from_rows(adj_); }

// ---------------------------------------------------------------------------
// graph6: size byte n+63, then the upper triangle column by column
// ((0,1),(0,2),(1,2),(0,3),...) packed six bits per character, big-endian.

Graph parse_graph6(std::string_view line) {
    constexpr std::string_view header = ">>graph6<<";
    if (line.starts_with(header)) line.remove_prefix(header.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
        line.remove_suffix(1);
    if (line.empty()) throw Error(ErrorCode::TruncatedBitVector, "empty graph6 line");
    for (char c : line)
        if (c < 63 || c > 126) throw Error(ErrorCode::InvalidChar, std::string("byte ") + std::to_string(static_cast<int>(static_cast<unsigned char>(c))));
    if (line[0] == 126) throw Error(ErrorCode::UnsupportedOrder, "multi-byte order encoding (n > 62)");
    const int n = line[0] - 63;
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t expected = (bits + 5) / 6;
    if (line.size() - 1 != expected)
        throw Error(ErrorCode::TruncatedBitVector, "expected " + std::to_string(expected) + " data bytes for n=" + std::to_string(n) + ", got " + std::to_string(line.size() - 1));
    std::vector<VertexSet> rows(static_cast<std::size_t>(n), 0);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int chunk = line[1 + k / 6] - 63;
            if ((chunk >> (5 - k % 6)) & 1) {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
        }
    }
    return Graph::from_rows(rows);
}

std::string write_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kMaxOrder) throw Error(ErrorCode::UnsupportedOrder, "order above 62");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int acc = 0;
    int used = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++used == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                used = 0;
            }
        }
    }
    if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
    return out;
}

// ---------------------------------------------------------------------------

DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    const int n = g.order();
    p.degrees.resize(static_cast<std::size_t>(n));
    int twice = 0;
    for (int v = 0; v < n; ++v) {
        p.degrees[v] = g.degree(v);
        twice += p.degrees[v];
    }
    if (n > 0) {
        p.min_degree = *std::min_element(p.degrees.begin(), p.degrees.end());
        p.max_degree = *std::max_element(p.degrees.begin(), p.degrees.end());
    }
    p.edges = twice / 2;
    return p;
}

int min_degree(const Graph& g) {
    int best = g.order() > 0 ? g.order() : 0;
    for (int v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
    return best;
}

VertexSet reachable(const Graph& g, int start, VertexSet allowed) {
    VertexSet seen = bit(start);
    VertexSet frontier = seen;
    allowed |= bit(start);
    while (frontier) {
        VertexSet next = 0;
        for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v); });
        next &= allowed & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    return reachable(g, 0, g.vertices()) == g.vertices();
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet left = g.vertices();
    while (left) {
        const VertexSet c = reachable(g, lowest(left), left);
        out.push_back(c);
        left &= ~c;
    }
    return out;
}

namespace {

struct BlockSearch {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<Edge> stack;
    std::vector<VertexSet> blocks;
    VertexSet cut = 0;
    int time = 0;

    explicit BlockSearch(const Graph& graph)
        : g(graph), disc(static_cast<std::size_t>(graph.order()), -1), low(static_cast<std::size_t>(graph.order()), 0) {}

    void visit(int v, int parent) {
        disc[v] = low[v] = time++;
        int children = 0;
        for_each_vertex(g.neighbors(v), [&](int u) {
            if (disc[u] < 0) {
                ++children;
                stack.emplace_back(v, u);
                visit(u, v);
                low[v] = std::min(low[v], low[u]);
                if (low[u] >= disc[v]) {
                    if (parent >= 0 || children > 1) cut |= bit(v);
                    VertexSet block = 0;
                    while (true) {
                        const Edge e = stack.back();
                        stack.pop_back();
                        block |= bit(e.first) | bit(e.second);
                        if (e == Edge{v, u}) break;
                    }
                    blocks.push_back(block);
                }
            } else if (u != parent && disc[u] < disc[v]) {
                stack.emplace_back(v, u);
                low[v] = std::min(low[v], disc[u]);
            }
        });
    }
};

}  // namespace

BlockDecomposition block_decomposition(const Graph& g) {
    BlockSearch s(g);
    for (int v = 0; v < g.order(); ++v) {
        if (s.disc[v] >= 0) continue;
        if (g.degree(v) == 0) {
            s.disc[v] = s.time++;
            s.blocks.push_back(bit(v));
            continue;
        }
        s.visit(v, -1);
    }
    BlockDecomposition d;
    d.cut_vertices = s.cut;
    d.blocks = std::move(s.blocks);
    std::sort(d.blocks.begin(), d.blocks.end());
    for (VertexSet b : d.blocks)
        if (popcount(b & d.cut_vertices) == 1) d.end_blocks.push_back(b);
    return d;
}

ConnectivityReport connectivity_report(const Graph& g) {
    ConnectivityReport r;
    r.connected = is_connected(g);
    r.blocks = block_decomposition(g);
    r.two_connected = g.order() >= 3 && r.connected && r.blocks.cut_vertices == 0;
    return r;
}

bool is_two_connected(const Graph& g) {
    const int n = g.order();
    if (n < 3 || !is_connected(g)) return false;
    for (int v = 0; v < n; ++v) {
        const VertexSet rest = g.vertices() & ~bit(v);
        if (reachable(g, lowest(rest), rest) != rest) return false;
    }
    return true;
}

bool has_cut_vertex(const Graph& g) { return block_decomposition(g).cut_vertices != 0; }

namespace {

void longest_between(const Graph& g, int cur, int target, VertexSet used, int len, int& best) {
    if (cur == target) {
        best = std::max(best, len);
        return;
    }
    const VertexSet free = g.vertices() & ~used;
    // Target must stay reachable through unused vertices.
    const VertexSet reach = reachable(g, cur, free);
    if (!(reach & bit(target))) return;
    if (len + popcount(reach) - 1 <= best) return;
    for_each_vertex(g.neighbors(cur) & free, [&](int u) { longest_between(g, u, target, used | bit(u), len + 1, best); });
}

}  // namespace

int block_path_order(const Graph& g, VertexSet b1, VertexSet b2) {
    const BlockDecomposition d = block_decomposition(g);
    auto is_end = [&](VertexSet b) { return std::find(d.end_blocks.begin(), d.end_blocks.end(), b) != d.end_blocks.end(); };
    if (!is_end(b1) || !is_end(b2)) throw Error(ErrorCode::NotEndBlock, "argument is not an end block");
    if (b1 == b2) throw Error(ErrorCode::NotEndBlock, "end blocks must be distinct");
    const int c1 = lowest(b1 & d.cut_vertices);
    const int c2 = lowest(b2 & d.cut_vertices);
    if (c1 == c2) return 1;
    int best = 0;
    longest_between(g, c1, c2, bit(c1), 1, best);
    return best;
}

// ---------------------------------------------------------------------------

Graph complete_graph(int n) { return complement(empty_graph(n)); }

Graph empty_graph(int n) { return Graph(n); }

Graph cycle_graph(int n) {
    GraphBuilder b(n);
    if (n >= 3)
        for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
    else if (n == 2)
        b.add_edge(0, 1);
    return b.build();
}

Graph path_graph(int n) {
    GraphBuilder b(n);
    for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
    return b.build();
}

Graph join(const Graph& a, const Graph& b) {
    const int na = a.order();
    const int n = na + b.order();
    check_order(n);
    std::vector<VertexSet> rows(static_cast<std::size_t>(n));
    const VertexSet left = all_vertices(na);
    const VertexSet right = all_vertices(n) & ~left;
    for (int v = 0; v < na; ++v) rows[v] = a.neighbors(v) | right;
    for (int v = 0; v < b.order(); ++v) rows[na + v] = (b.neighbors(v) << na) | left;
    return Graph::from_rows(rows);
}

Graph disjoint_union(std::span<const Graph> parts) {
    int n = 0;
    for (const Graph& p : parts) n += p.order();
    check_order(n);
    std::vector<VertexSet> rows;
    rows.reserve(static_cast<std::size_t>(n));
    int offset = 0;
    for (const Graph& p : parts) {
        for (int v = 0; v < p.order(); ++v) rows.push_back(p.neighbors(v) << offset);
        offset += p.order();
    }
    return Graph::from_rows(rows);
}

Graph disjoint_union(std::initializer_list<Graph> parts) {
    return disjoint_union(std::span<const Graph>(parts.begin(), parts.size()));
}

Graph complement(const Graph& g) {
    const int n = g.order();
    std::vector<VertexSet> rows(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) rows[v] = g.vertices() & ~g.neighbors(v) & ~bit(v);
    return Graph::from_rows(rows);
}

Graph copies(int k, const Graph& g) {
    if (k < 0) throw Error(ErrorCode::BadParams, "negative copy count");
    check_order(k * g.order());
    std::vector<Graph> parts(static_cast<std::size_t>(k), g);
    return disjoint_union(parts);
}

}  // namespace lfstab
