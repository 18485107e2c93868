#include <algorithm>
#include <random>

#include "doctest.h"
#include "lfstab/error.hpp"
#include "lfstab/forest.hpp"

using namespace lfstab;

TEST_CASE("parse_forest examples") {
    CHECK(parse_forest("4,4").orders == std::vector<int>{4, 4});
    CHECK(parse_forest("3,2,3").orders == std::vector<int>{3, 3, 2});
    CHECK(parse_forest(" 6 , 3 ").orders == std::vector<int>{6, 3});
    CHECK(to_string(parse_forest("2,7,3")) == "7,3,2");
    CHECK(describe(parse_forest("4,4,2")) == "2P4 u P2");
}

TEST_CASE("parse_forest errors") {
    auto code = [](std::string_view s) {
        try {
            parse_forest(s);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::IoError;
    };
    CHECK(code("1,4") == ErrorCode::OrderTooSmall);
    CHECK(code("0") == ErrorCode::OrderTooSmall);
    CHECK(code("") == ErrorCode::Empty);
    CHECK(code("  ") == ErrorCode::Empty);
    CHECK(code("4,x") == ErrorCode::BadParams);
    CHECK(code("4,,4") == ErrorCode::BadParams);
}

TEST_CASE("forest_params examples") {
    const auto p = forest_params(parse_forest("4,4"));
    CHECK(p.k == 2);
    CHECK(p.l == 0);
    CHECK(p.h == 3);
    CHECK(p.total_order == 8);
    CHECK(p.theorem_class == TheoremClass::Even);

    const auto q = forest_params(parse_forest("6,3"));
    CHECK(q.k == 1);
    CHECK(q.l == 1);
    CHECK(q.h == 3);
    CHECK(q.total_order == 9);
    CHECK(q.theorem_class == TheoremClass::OneOdd);
    CHECK(q.a == std::vector<int>{3});
    CHECK(q.b == std::vector<int>{1});

    CHECK(forest_params(parse_forest("3,3,3")).theorem_class == TheoremClass::OutOfScope);
    CHECK(forest_params(parse_forest("4")).theorem_class == TheoremClass::OutOfScope);
    CHECK(forest_params(parse_forest("3")).theorem_class == TheoremClass::OutOfScope);
    CHECK(forest_params(parse_forest("5,3")).theorem_class == TheoremClass::TwoOdd);
    CHECK(forest_params(parse_forest("3,3,2")).theorem_class == TheoremClass::TwoOdd);
    CHECK(to_string(TheoremClass::OutOfScope) == "OUT_OF_THEOREM_SCOPE");
}

TEST_CASE("forest_params order identity and permutation invariance") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<int> orders(1 + rng() % 5);
        for (int& o : orders) o = 2 + static_cast<int>(rng() % 9);
        const auto p = forest_params(make_forest(orders));
        CHECK(p.total_order == 2 * p.h + 2 + p.l);
        std::shuffle(orders.begin(), orders.end(), rng);
        const auto q = forest_params(make_forest(orders));
        CHECK(q.h == p.h);
        CHECK(q.k == p.k);
        CHECK(q.l == p.l);
        CHECK(q.theorem_class == p.theorem_class);
    }
}
