#ifndef LFSTAB_TESTS_ORACLES_HPP
#define LFSTAB_TESTS_ORACLES_HPP

// Deliberately naive reference implementations used to cross-check the
// library. Everything here is brute force and only meant for small orders.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "lfstab/graph.hpp"

namespace oracle {

using lfstab::Graph;

/// Independent graph6 decoder written from the format description.
inline std::vector<std::pair<int, int>> decode_graph6(const std::string& s, int& n) {
    n = s[0] - 63;
    std::vector<int> bits;
    for (std::size_t i = 1; i < s.size(); ++i) {
        const int x = s[i] - 63;
        for (int b = 5; b >= 0; --b) bits.push_back((x >> b) & 1);
    }
    std::vector<std::pair<int, int>> edges;
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (bits.at(k)) edges.emplace_back(i, j);
    return edges;
}

/// Isomorphism by trying every bijection.
inline bool brute_isomorphic(const Graph& a, const Graph& b) {
    const int n = a.order();
    if (n != b.order() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if (a.adjacent(u, v) != b.adjacent(p[u], p[v])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

/// Does `small` embed injectively (edges to edges) into `big`?
inline bool brute_monomorphism(const Graph& small, const Graph& big) {
    const int m = small.order(), n = big.order();
    if (m > n) return false;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    // Enumerate permutations of big's vertices; the first m positions are
    // the images. Duplicates are harmless.
    do {
        bool ok = true;
        for (int u = 0; u < m && ok; ++u)
            for (int v = u + 1; v < m && ok; ++v)
                if (small.adjacent(u, v) && !big.adjacent(p[u], p[v])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

/// Linear forest containment by trying every ordering of the vertices and
/// cutting consecutive blocks for the components.
inline bool brute_contains_forest(const Graph& g, const std::vector<int>& orders) {
    const int n = g.order();
    int total = 0;
    for (int o : orders) total += o;
    if (total > n) return false;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        int pos = 0;
        bool ok = true;
        for (int o : orders) {
            for (int i = 0; i + 1 < o && ok; ++i)
                if (!g.adjacent(p[pos + i], p[pos + i + 1])) ok = false;
            pos += o;
            if (!ok) break;
        }
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

/// Longest path order by trying every ordering.
inline int brute_longest_path(const Graph& g) {
    const int n = g.order();
    if (n == 0) return 0;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    int best = 1;
    do {
        int run = 1;
        for (int i = 1; i < n && g.adjacent(p[i - 1], p[i]); ++i) run = i + 1;
        best = std::max(best, run);
    } while (std::next_permutation(p.begin(), p.end()) && best < n);
    return best;
}

/// Circumference by trying every ordering and every prefix length.
inline int brute_longest_cycle(const Graph& g) {
    const int n = g.order();
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    int best = 0;
    do {
        for (int len = 3; len <= n; ++len) {
            bool ok = g.adjacent(p[len - 1], p[0]);
            for (int i = 1; i < len && ok; ++i) ok = g.adjacent(p[i - 1], p[i]);
            if (ok) best = std::max(best, len);
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

/// Minimum vertex cover size by subset enumeration.
inline int brute_vertex_cover(const Graph& g) {
    const int n = g.order();
    int best = n;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        bool ok = true;
        for (auto [u, v] : g.edges())
            if (!((s >> u) & 1U) && !((s >> v) & 1U)) ok = false;
        if (ok) best = std::min(best, std::popcount(s));
    }
    return best;
}

/// Every labelled graph on n vertices (n <= 6 keeps this at 32768 graphs).
template <typename F>
void all_labelled_graphs(int n, F&& f) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs.size()); ++m) {
        lfstab::GraphBuilder b(n);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if ((m >> i) & 1U) b.add_edge(pairs[i].first, pairs[i].second);
        f(b.build());
    }
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    lfstab::GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) b.add_edge(u, v);
    return b.build();
}

inline Graph random_relabel(const Graph& g, std::mt19937_64& rng) {
    std::vector<int> p(g.order());
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return g.permuted(p);
}

}  // namespace oracle

#endif
