#ifndef LFSTAB_RECOGNIZE_HPP
#define LFSTAB_RECOGNIZE_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "lfstab/families.hpp"
#include "lfstab/graph.hpp"

namespace lfstab {

/// Exact: branch on a maximum-degree vertex (take it, or take all of its
/// neighbours). Returns a cover with at most h vertices, or nothing.
std::optional<VertexSet> vertex_cover_at_most(const Graph& g, int h);

enum class MatchRoute { Structural, Isomorphism, Monomorphism };

std::string_view to_string(MatchRoute r);

/// Membership of G in a family member of the same order.
struct FamilyMatch {
    FamilySpec spec;
    MatchRoute route = MatchRoute::Structural;
    /// Cover set A for S / SPLUS / K2MATCH / K3MATCH, the centre for LGEN,
    /// empty otherwise.
    VertexSet witness = 0;
    /// mapping[v] is the template vertex that vertex v of G is sent to.
    std::vector<int> mapping;
};

/// Family members of order n for the given h (h is ignored by H1, H2,
/// K2MATCH, K3MATCH and HNLA), in a fixed order.
std::vector<FamilySpec> family_candidates(FamilyKind kind, int n, int h);

/// Cached template graph; safe to call from several threads.
const Graph& family_template(const FamilySpec& spec);

/// "G subset of family" for S, SPLUS, LGEN, FGLUE, TGLUE, H1, H2, K2MATCH,
/// K3MATCH; "G isomorphic to family" for L, U3, HNLA. Structural routes are
/// used where a characterisation exists, templates otherwise.
std::optional<FamilyMatch> recognize_exception(const Graph& g, FamilyKind kind, int h);

/// Same question answered only through templates (monomorphism or
/// isomorphism); the reference the structural routes are checked against.
std::optional<FamilyMatch> recognize_by_template(const Graph& g, FamilyKind kind, int h);

/// Every candidate spec G matches through the template route.
std::vector<FamilySpec> all_matching_specs(const Graph& g, FamilyKind kind, int h);

/// Re-checks a match from scratch: the mapping must send G injectively and
/// edge-preservingly into the generated template (bijectively with equal
/// edge counts for isomorphism kinds), and the witness must satisfy its
/// structural property.
bool validate_match(const Graph& g, const FamilyMatch& m);

/// True for L, U3 and HNLA, whose membership means isomorphism.
bool is_isomorphism_kind(FamilyKind kind);

}  // namespace lfstab

#endif
