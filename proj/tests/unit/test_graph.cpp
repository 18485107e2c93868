#include <random>
#include <set>

#include "doctest.h"
#include "lfstab/error.hpp"
#include "lfstab/graph.hpp"
#include "support/oracles.hpp"

using namespace lfstab;

namespace {

Graph bowtie() { return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}); }

Graph net() {
    return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
}

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::IoError;
}

}  // namespace

TEST_CASE("graph6 parse examples") {
    const Graph k4 = parse_graph6("C~");
    CHECK(k4.order() == 4);
    CHECK(k4.edge_count() == 6);
    CHECK(k4 == complete_graph(4));

    const Graph k1 = parse_graph6("@");
    CHECK(k1.order() == 1);
    CHECK(k1.edge_count() == 0);

    const Graph p4 = parse_graph6("Ch");
    CHECK(p4 == path_graph(4));
    CHECK(p4.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
}

TEST_CASE("graph6 write examples") {
    CHECK(write_graph6(complete_graph(4)) == "C~");
    CHECK(write_graph6(empty_graph(1)) == "@");
    CHECK(write_graph6(path_graph(4)) == "Ch");
    CHECK(write_graph6(Graph(0)) == "?");
}

TEST_CASE("graph6 errors") {
    CHECK(code_of([] { parse_graph6("C~ x"); }) == ErrorCode::InvalidChar);
    CHECK(code_of([] { parse_graph6("C"); }) == ErrorCode::TruncatedBitVector);
    CHECK(code_of([] { parse_graph6("C~~"); }) == ErrorCode::TruncatedBitVector);
    CHECK(code_of([] { parse_graph6("~?@?"); }) == ErrorCode::UnsupportedOrder);
    CHECK(code_of([] { Graph(63); }) == ErrorCode::UnsupportedOrder);
    CHECK(code_of([] { parse_graph6(""); }) == ErrorCode::TruncatedBitVector);
}

TEST_CASE("graph6 round trip against independent decoder") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = static_cast<int>(rng() % 63);
        const Graph g = oracle::random_graph(n, 0.4, rng);
        const std::string s = write_graph6(g);
        int m = 0;
        const auto edges = oracle::decode_graph6(s, m);
        CHECK(m == n);
        CHECK(Graph::from_edges(m, edges) == g);
        CHECK(parse_graph6(s) == g);
        CHECK(write_graph6(parse_graph6(s)) == s);
    }
}

TEST_CASE("degree profile") {
    const Graph s62 = join(complete_graph(2), empty_graph(4));
    const auto d = degree_profile(s62);
    CHECK(d.min_degree == 2);
    CHECK(d.edges == 9);
    CHECK(degree_profile(complete_graph(4)).degrees == std::vector<int>{3, 3, 3, 3});
    CHECK(degree_profile(complete_graph(4)).edges == 6);
    CHECK(degree_profile(path_graph(4)).min_degree == 1);
    CHECK(degree_profile(path_graph(4)).edges == 3);
}

TEST_CASE("handshake on random graphs") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = oracle::random_graph(static_cast<int>(rng() % 20), 0.3, rng);
        int sum = 0;
        for (int v = 0; v < g.order(); ++v) sum += g.degree(v);
        CHECK(sum == 2 * g.edge_count());
    }
}

TEST_CASE("connectivity report") {
    const auto bt = connectivity_report(bowtie());
    CHECK(bt.connected);
    CHECK_FALSE(bt.two_connected);
    CHECK(bt.blocks.cut_vertices == bit(0));
    CHECK(bt.blocks.blocks.size() == 2);
    for (VertexSet b : bt.blocks.blocks) CHECK(popcount(b) == 3);
    CHECK(bt.blocks.end_blocks.size() == 2);

    const auto c6 = connectivity_report(cycle_graph(6));
    CHECK(c6.two_connected);
    CHECK(c6.blocks.blocks.size() == 1);
    CHECK(c6.blocks.cut_vertices == 0);

    const auto two_k3 = connectivity_report(copies(2, complete_graph(3)));
    CHECK_FALSE(two_k3.connected);
    CHECK_FALSE(two_k3.two_connected);

    CHECK_FALSE(is_two_connected(complete_graph(2)));
    CHECK(is_two_connected(complete_graph(3)));
}

TEST_CASE("block decomposition partitions edges") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const Graph g = oracle::random_graph(n, 0.3, rng);
        const auto bd = block_decomposition(g);
        for (auto [u, v] : g.edges()) {
            int owners = 0;
            for (VertexSet b : bd.blocks)
                if ((b & bit(u)) && (b & bit(v))) ++owners;
            CHECK(owners == 1);
        }
        for (int v = 0; v < n; ++v) {
            int count = 0;
            for (VertexSet b : bd.blocks)
                if (b & bit(v)) ++count;
            CHECK(count >= 1);
            CHECK(((bd.cut_vertices >> v) & 1U) == (count >= 2));
            // cut vertex iff removal increases component count
            const Graph h = g.induced(g.vertices() & ~bit(v));
            const bool cut = components(h).size() > components(g).size();
            CHECK(cut == (((bd.cut_vertices >> v) & 1U) != 0));
        }
    }
}

TEST_CASE("block path order") {
    const Graph bt = bowtie();
    const auto bd = block_decomposition(bt);
    CHECK(block_path_order(bt, bd.end_blocks[0], bd.end_blocks[1]) == 1);

    const Graph u = net();
    const auto ub = block_decomposition(u);
    REQUIRE(ub.end_blocks.size() == 3);
    CHECK(block_path_order(u, ub.end_blocks[0], ub.end_blocks[1]) == 3);

    // L_{1,2} = triangle 0,1,2 plus K_3 {3,4,5} hung from the centre by edge 0-3.
    const Graph f = Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {3, 4}, {3, 5}, {4, 5}});
    const auto fb = block_decomposition(f);
    REQUIRE(fb.end_blocks.size() == 2);
    CHECK(block_path_order(f, fb.end_blocks[0], fb.end_blocks[1]) == 2);

    CHECK(code_of([&] { block_path_order(f, fb.end_blocks[0], bit(0) | bit(3)); }) == ErrorCode::NotEndBlock);
}

TEST_CASE("assembly") {
    const Graph s = join(complete_graph(2), complement(complete_graph(4)));
    CHECK(s.order() == 6);
    CHECK(s.edge_count() == 9);
    CHECK(disjoint_union({complete_graph(3), complete_graph(3)}).edge_count() == 6);
    CHECK(complement(empty_graph(5)) == complete_graph(5));
    CHECK(cycle_graph(5).edge_count() == 5);
    CHECK(copies(3, path_graph(2)).edge_count() == 3);
    const Graph a = path_graph(3), b = cycle_graph(4);
    const Graph j = join(a, b);
    CHECK(j.edge_count() == a.edge_count() + b.edge_count() + 12);
    CHECK(code_of([] { disjoint_union({complete_graph(40), complete_graph(30)}); }) == ErrorCode::UnsupportedOrder);
}

TEST_CASE("isomorphism examples") {
    std::mt19937_64 rng(3);
    CHECK(are_isomorphic(cycle_graph(6), oracle::random_relabel(cycle_graph(6), rng)));
    const Graph k13 = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK_FALSE(are_isomorphic(k13, path_graph(4)));
    CHECK(are_isomorphic(join(complete_graph(2), empty_graph(4)), join(empty_graph(4), complete_graph(2))));
}

TEST_CASE("canonical label invariant under 1000 random relabelings") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const double p = 0.1 + 0.8 * static_cast<double>(rng() % 100) / 100.0;
        const Graph g = oracle::random_graph(n, p, rng);
        const Graph h = oracle::random_relabel(g, rng);
        REQUIRE(canonical_label(g) == canonical_label(h));
    }
}

TEST_CASE("canonical label invariant on symmetric graphs") {
    std::mt19937_64 rng(99);
    const std::vector<Graph> graphs = {
        cycle_graph(12), complete_graph(9), copies(4, complete_graph(3)),
        join(empty_graph(5), empty_graph(5)), copies(3, cycle_graph(4)),
        // Petersen graph
        Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8},
                               {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}}),
        // 3-cube
        Graph::from_edges(8, {{0, 1}, {1, 3}, {3, 2}, {2, 0}, {4, 5}, {5, 7}, {7, 6}, {6, 4},
                              {0, 4}, {1, 5}, {2, 6}, {3, 7}}),
        join(complete_graph(3), copies(5, complete_graph(2))),
    };
    for (const Graph& g : graphs) {
        const std::string c = canonical_label(g);
        CHECK(canonical_labelling(g).has_automorphism);
        for (int t = 0; t < 50; ++t) REQUIRE(canonical_label(oracle::random_relabel(g, rng)) == c);
    }
}

TEST_CASE("canonical label equals brute-force isomorphism for n <= 7") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 600; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const Graph a = oracle::random_graph(n, 0.5, rng);
        // Bias towards equal edge counts so the comparison is not trivial.
        Graph b = oracle::random_graph(n, 0.5, rng);
        for (int k = 0; k < 20 && b.edge_count() != a.edge_count(); ++k) b = oracle::random_graph(n, 0.5, rng);
        CHECK((canonical_label(a) == canonical_label(b)) == oracle::brute_isomorphic(a, b));
    }
}

TEST_CASE("canonical labels count isomorphism classes of all 6-vertex graphs") {
    for (int n = 1; n <= 6; ++n) {
        std::set<std::string> labels;
        oracle::all_labelled_graphs(n, [&](const Graph& g) { labels.insert(canonical_label(g)); });
        const std::size_t census[] = {0, 1, 2, 4, 11, 34, 156};
        CHECK(labels.size() == census[n]);
    }
}

TEST_CASE("has_automorphism matches brute force for n <= 6") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const Graph g = oracle::random_graph(n, 0.5, rng);
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        bool nontrivial = false;
        while (std::next_permutation(p.begin(), p.end()) && !nontrivial)
            nontrivial = g.permuted(p) == g;
        CHECK(canonical_labelling(g).has_automorphism == nontrivial);
    }
}
