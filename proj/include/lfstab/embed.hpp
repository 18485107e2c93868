#ifndef LFSTAB_EMBED_HPP
#define LFSTAB_EMBED_HPP

#include <optional>
#include <vector>

#include "lfstab/forest.hpp"
#include "lfstab/graph.hpp"

namespace lfstab {

/// One vertex sequence per component of the forest, in the forest's order.
struct EmbeddingCertificate {
    std::vector<std::vector<int>> paths;
};

/// Exact linear forest containment by backtracking. Components are placed
/// longest first; start vertices are tried by descending degree.
std::optional<EmbeddingCertificate> contains_linear_forest(const Graph& g, const LinearForest& f);

/// Checks disjointness, the component orders and every consecutive edge.
bool validate_certificate(const Graph& g, const LinearForest& f, const EmbeddingCertificate& c);

/// Second, independent decision procedure: subset DP for traceable vertex
/// sets followed by an exact packing search. Limited to kDpMaxOrder vertices.
inline constexpr int kDpMaxOrder = 22;
bool contains_linear_forest_dp(const Graph& g, const LinearForest& f);

struct PathResult {
    int order = 0;
    std::vector<int> path;
};

/// Longest path by branch and bound. With an anchor the path must end there
/// (path.back() == anchor).
PathResult longest_path(const Graph& g, std::optional<int> anchor = std::nullopt);

struct CycleResult {
    int length = 0;  ///< 0 for forests
    std::vector<int> cycle;
};

/// Circumference. When stop_at > 0 the search returns as soon as a cycle of
/// length >= stop_at is found, so `length` is then only a lower bound.
CycleResult longest_cycle(const Graph& g, int stop_at = 0);

struct CycleSets {
    int length = 0;
    std::vector<VertexSet> sets;  ///< every vertex set spanned by a longest cycle
};

/// Subset DP over cycles; needs order <= kDpMaxOrder.
CycleSets longest_cycle_sets(const Graph& g);

/// Injective edge-preserving map small -> big. Throws OrderMismatch when
/// small has more vertices than big.
std::optional<std::vector<int>> find_monomorphism(const Graph& small, const Graph& big);
bool monomorphism_exists(const Graph& small, const Graph& big);

/// Some S subset of P with |S| = s whose common neighbourhood outside P has
/// at least m vertices. The common neighbourhood of the empty set is V(g).
std::optional<VertexSet> common_neighborhood_find(const Graph& g, VertexSet p, int s, int m);

}  // namespace lfstab

#endif
