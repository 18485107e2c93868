#ifndef LFSTAB_SRC_CANON_HPP
#define LFSTAB_SRC_CANON_HPP

// Raw-array canonical labelling shared by graph_core and the enumerator.
// Equitable refinement plus individualisation search; leaves are compared
// on the relabelled adjacency rows and the lexicographically largest wins.
// Automorphisms met during the search prune sibling orbits and trigger a
// back-jump to the level where the current path left the best one.

#include <array>
#include <cstdint>

#include "lfstab/graph.hpp"

namespace lfstab::detail {

struct Labelling {
    /// order[i] = vertex at canonical position i.
    std::array<std::int8_t, 64> order{};
    bool has_automorphism = false;
};

void canonical_order(int n, const VertexSet* rows, Labelling& out);

/// Rows of the graph relabelled by `order` (vertex order[i] becomes i).
void relabel(int n, const VertexSet* rows, const std::int8_t* order, VertexSet* out);

/// Upper triangle packed column-wise into one word; needs n <= 11.
std::uint64_t pack_upper(int n, const VertexSet* rows);
void unpack_upper(int n, std::uint64_t code, VertexSet* rows);

/// Canonical packed code for n <= 11.
std::uint64_t canonical_code(int n, const VertexSet* rows, Labelling* labelling = nullptr);

}  // namespace lfstab::detail

#endif
