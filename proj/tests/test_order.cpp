#include "lrw/order.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <numeric>

using namespace lrw;
using namespace testutil;

TEST_CASE("ordered graph validates permutations") {
    Graph g = path(3);
    CHECK_THROWS_AS(OrderedGraph(g, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(OrderedGraph(g, {0, 0, 1}), std::invalid_argument);
    OrderedGraph og(g, {2, 0, 1});
    CHECK(og.rank[2] == 0);
    CHECK(og.adj_at(0).get(2)); // vertex 2 is adjacent to vertex 1 at position 2
}

TEST_CASE("order width examples") {
    CHECK(order_width(identity_order(path(5))).width == 1);
    CHECK(order_width(identity_order(cycle(5))).width == 2);
    Graph k6 = complete(6);
    OrderedGraph shuffled(k6, {3, 0, 5, 1, 4, 2});
    CHECK(order_width(shuffled).width == 1);
    CHECK(order_width(identity_order(edgeless(1))).width == 0);
}

TEST_CASE("lrw exact examples") {
    CHECK(lrw_exact(edgeless(1)).r == 0);
    CHECK(lrw_exact(edgeless(0)).r == 0);
    CHECK(lrw_exact(cycle(5)).r == 2);
    CHECK(lrw_exact(edgeless(6)).r == 0);
    CHECK_THROWS_AS(lrw_exact(edgeless(21)), SizeCapError);
}

TEST_CASE("lrw bruteforce examples") {
    CHECK(lrw_bruteforce(path(4)) == 1);
    CHECK(lrw_bruteforce(complete(4)) == 1);
    CHECK(lrw_bruteforce(cycle(6)) == 2);
    CHECK_THROWS_AS(lrw_bruteforce(edgeless(9)), SizeCapError);
}

TEST_CASE("exact solver agrees with brute force") {
    Rng rng(13);
    for (int n = 2; n <= 8; ++n)
        for (int trial = 0; trial < 12; ++trial) {
            Graph g = random_graph(n, rng);
            auto res = lrw_exact(g);
            CHECK(res.r == lrw_bruteforce(g));
            CHECK(order_width(res.witness).width == res.r);
        }
}

TEST_CASE("any order is at least the optimum") {
    Rng rng(17);
    for (int trial = 0; trial < 15; ++trial) {
        int n = 3 + rng.below(6);
        Graph g = random_graph(n, rng);
        int opt = lrw_exact(g).r;
        std::vector<int> ord(n);
        std::iota(ord.begin(), ord.end(), 0);
        for (int shuffle = 0; shuffle < 5; ++shuffle) {
            for (int i = n - 1; i > 0; --i)
                std::swap(ord[i], ord[rng.below(i + 1)]);
            CHECK(order_width(OrderedGraph(g, ord)).width >= opt);
        }
    }
}

TEST_CASE("induced subgraphs never increase lrw") {
    Rng rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 4 + rng.below(5);
        Graph g = random_graph(n, rng);
        int full = lrw_exact(g).r;
        int drop = rng.below(n);
        std::vector<int> keep;
        for (int v = 0; v < n; ++v)
            if (v != drop) keep.push_back(v);
        CHECK(lrw_exact(g.induced(keep)).r <= full);
    }
}

TEST_CASE("greedy order is valid and reasonable") {
    CHECK(order_width(greedy_order(path(4))).width == 1);
    CHECK(order_width(greedy_order(complete(4))).width == 1);
    CHECK(order_width(greedy_order(cycle(5))).width <= 2);
    Rng rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = random_graph(3 + rng.below(5), rng);
        auto og = greedy_order(g);
        CHECK(order_width(og).width >= lrw_bruteforce(g));
    }
}
