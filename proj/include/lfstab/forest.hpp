#ifndef LFSTAB_FOREST_HPP
#define LFSTAB_FOREST_HPP

#include <string>
#include <string_view>
#include <vector>

namespace lfstab {

/// Disjoint union of paths, stored as path orders in descending order.
struct LinearForest {
    std::vector<int> orders;

    bool operator==(const LinearForest&) const = default;
};

/// Accepts a comma separated list such as "4,4,3"; whitespace is ignored.
/// Throws Empty for no tokens and OrderTooSmall for orders below 2.
LinearForest parse_forest(std::string_view text);
LinearForest make_forest(std::vector<int> orders);
/// "4,4,3" style rendering of the normalised orders.
std::string to_string(const LinearForest& f);
/// Human-readable form such as "2P4 u P3".
std::string describe(const LinearForest& f);

enum class TheoremClass { Even, OneOdd, TwoOdd, OutOfScope };

std::string_view to_string(TheoremClass c);

struct ForestParams {
    int k = 0;                ///< number of even paths
    int l = 0;                ///< number of odd paths
    std::vector<int> a;       ///< even paths have order 2a_i, descending
    std::vector<int> b;       ///< odd paths have order 2b_i + 1, descending
    int h = 0;                ///< sum a_i + sum b_i - 1
    int total_order = 0;
    TheoremClass theorem_class = TheoremClass::OutOfScope;
};

ForestParams forest_params(const LinearForest& f);

}  // namespace lfstab

#endif
