#include "lfstab/forest.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>

#include "lfstab/error.hpp"

namespace lfstab {

LinearForest make_forest(std::vector<int> orders) {
    if (orders.empty()) throw Error(ErrorCode::Empty, "linear forest needs at least one path");
    for (int o : orders)
        if (o < 2) throw Error(ErrorCode::OrderTooSmall, "path order " + std::to_string(o) + " is below 2");
    std::sort(orders.begin(), orders.end(), std::greater<>());
    return LinearForest{std::move(orders)};
}

LinearForest parse_forest(std::string_view text) {
    std::vector<int> orders;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        std::string_view tok = text.substr(pos, comma - pos);
        while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
        while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t')) tok.remove_suffix(1);
        if (!tok.empty()) {
            int value = 0;
            auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc{} || end != tok.data() + tok.size())
                throw Error(ErrorCode::BadParams, "not an integer path order: '" + std::string(tok) + "'");
            orders.push_back(value);
        } else if (comma < text.size()) {
            throw Error(ErrorCode::BadParams, "empty token in forest list");
        }
        pos = comma + 1;
    }
    return make_forest(std::move(orders));
}

std::string to_string(const LinearForest& f) {
    std::string out;
    for (std::size_t i = 0; i < f.orders.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(f.orders[i]);
    }
    return out;
}

std::string describe(const LinearForest& f) {
    std::map<int, int, std::greater<>> mult;
    for (int o : f.orders) ++mult[o];
    std::string out;
    for (auto [o, c] : mult) {
        if (!out.empty()) out += " u ";
        if (c > 1) out += std::to_string(c);
        out += "P" + std::to_string(o);
    }
    return out;
}

std::string_view to_string(TheoremClass c) {
    switch (c) {
    case TheoremClass::Even: return "EVEN";
    case TheoremClass::OneOdd: return "ONE_ODD";
    case TheoremClass::TwoOdd: return "TWO_ODD";
    case TheoremClass::OutOfScope: return "OUT_OF_THEOREM_SCOPE";
    }
    return "OUT_OF_THEOREM_SCOPE";
}

ForestParams forest_params(const LinearForest& f) {
    ForestParams p;
    int sum = 0;
    for (int o : f.orders) {
        if (o % 2 == 0) {
            p.a.push_back(o / 2);
            sum += o / 2;
        } else {
            p.b.push_back(o / 2);
            sum += o / 2;
        }
        p.total_order += o;
    }
    p.k = static_cast<int>(p.a.size());
    p.l = static_cast<int>(p.b.size());
    p.h = sum - 1;
    if (p.total_order != 2 * p.h + 2 + p.l) throw Error(ErrorCode::BadParams, "forest order identity failed");
    if (p.l >= 3 || p.k + p.l < 2)
        p.theorem_class = TheoremClass::OutOfScope;
    else if (p.l == 0)
        p.theorem_class = TheoremClass::Even;
    else if (p.l == 1)
        p.theorem_class = TheoremClass::OneOdd;
    else
        p.theorem_class = TheoremClass::TwoOdd;
    return p;
}

}  // namespace lfstab
