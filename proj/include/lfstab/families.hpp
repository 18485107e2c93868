#ifndef LFSTAB_FAMILIES_HPP
#define LFSTAB_FAMILIES_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lfstab/graph.hpp"

namespace lfstab {

/// Named exceptional families. Generated graphs number hubs and centres first.
enum class FamilyKind { S, SPlus, L, LGen, FGlue, TGlue, U3, H1, H2, K2Match, K3Match, Hnla };

inline constexpr FamilyKind kAllFamilies[] = {FamilyKind::S,     FamilyKind::SPlus,   FamilyKind::L,      FamilyKind::LGen,
                                              FamilyKind::FGlue, FamilyKind::TGlue,   FamilyKind::U3,     FamilyKind::H1,
                                              FamilyKind::H2,    FamilyKind::K2Match, FamilyKind::K3Match, FamilyKind::Hnla};

/// Upper-case identifier used in reports, e.g. "SPLUS".
std::string_view to_string(FamilyKind k);
/// Case-insensitive; throws UnknownFamily.
FamilyKind parse_family_kind(std::string_view name);

/// Parameters used by each kind:
///   S, SPLUS: n, h          L: t, h              LGEN: t1, t2, h
///   FGLUE, TGLUE: t1, t2, h (h >= 2)             U3: h
///   H1, H2, K2MATCH, K3MATCH: n                  HNLA: n, l, a
/// Degenerate but well-defined cases are allowed: S with n = h is K_h,
/// L and LGEN with no blocks are K_1, HNLA with a = 0 is K_l plus isolates.
struct FamilySpec {
    FamilyKind kind = FamilyKind::S;
    int n = 0;
    int h = 0;
    int t = 0;
    int t1 = 0;
    int t2 = 0;
    int l = 0;
    int a = 0;

    bool operator==(const FamilySpec&) const = default;
};

/// Builds a spec from "key=value" parameters, derives n where it is
/// determined by the others and validates the result.
FamilySpec make_family_spec(FamilyKind kind, const std::map<std::string, int>& params);
/// Parses "n=7,h=2".
std::map<std::string, int> parse_params(std::string_view text);

/// Throws BadParams naming the violated constraint.
void validate(const FamilySpec& spec);

/// Order of the generated graph (also fills in spec.n for derived kinds).
int family_order(const FamilySpec& spec);

struct FamilySize {
    int order = 0;
    int edges = 0;
    int min_degree = 0;
};

/// Closed-form order, edge count and minimum degree.
FamilySize family_size(const FamilySpec& spec);

Graph generate_family(const FamilySpec& spec);

/// The parameters that matter for the kind, e.g. {"n":7,"h":2}.
std::map<std::string, int> spec_params(const FamilySpec& spec);
/// "SPLUS(n=7,h=2)"
std::string describe(const FamilySpec& spec);

/// h(n,l,a) = C(l-a,2) + a(n-l+a).
int hnla_edges(int n, int l, int a);

}  // namespace lfstab

#endif
