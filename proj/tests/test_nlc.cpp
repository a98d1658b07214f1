#include "lrw/nlc.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace lrw;
using namespace testutil;

namespace {

NlcLetter letter(int v, int c, std::initializer_list<int> e, std::vector<int> r) {
    NlcLetter a;
    a.v = v;
    a.c = c;
    for (int x : e) a.e |= uint32_t(1) << x;
    a.r = std::move(r);
    return a;
}

} // namespace

TEST_CASE("eval examples") {
    // single letter
    NlcExpression one{1, {letter(7, 0, {}, {0})}};
    auto ev = eval_nlc(one);
    CHECK(ev.graph.n == 1);
    CHECK(ev.vlabels[0] == 7);
    CHECK(ev.colors[0] == 0);

    // two letters joined through color 0
    NlcExpression k2{1, {letter(0, 0, {}, {0}), letter(1, 0, {0}, {0})}};
    CHECK(eval_nlc(k2).graph == complete(2));

    // u isolated, edge vw
    NlcExpression a{2, {letter(0, 0, {}, {0, 1}), letter(1, 1, {}, {0, 1}),
                        letter(2, 0, {1}, {0, 1})}};
    auto g = eval_nlc(a).graph;
    CHECK(g.edge_count() == 1);
    CHECK(g.has_edge(1, 2));
}

TEST_CASE("recoloring applies to the letter itself") {
    // first letter recolors 0 -> 1 after insertion; the second letter
    // connects to color 1 and must see the recolored vertex
    NlcExpression a{2, {letter(0, 0, {}, {1, 1}), letter(1, 0, {1}, {0, 1})}};
    CHECK(eval_nlc(a).graph == complete(2));
    NlcExpression b{2, {letter(0, 0, {}, {1, 1}), letter(1, 0, {0}, {0, 1})}};
    CHECK(eval_nlc(b).graph.edge_count() == 0);
}

TEST_CASE("admissibility is enforced") {
    NlcExpression dup{1, {letter(0, 0, {}, {0}), letter(0, 0, {}, {0})}};
    CHECK_THROWS_AS(eval_nlc(dup), std::invalid_argument);
}

TEST_CASE("prefixes evaluate to induced subgraphs") {
    for (int trial = 0; trial < 10; ++trial) {
        auto alpha = random_nlc(20, 3, 600 + trial);
        auto full = eval_nlc(alpha);
        for (int cut : {1, 5, 13, 19}) {
            NlcExpression beta{alpha.k, {alpha.letters.begin(),
                                         alpha.letters.begin() + cut}};
            auto part = eval_nlc(beta);
            std::vector<int> verts(cut);
            for (int i = 0; i < cut; ++i) verts[i] = i;
            CHECK(part.graph == full.graph.induced(verts));
        }
    }
}

TEST_CASE("expression from an order round trips") {
    // edgeless: width-1 expression with empty connection sets
    auto alpha0 = nlc_from_order(identity_order(edgeless(5)));
    CHECK(alpha0.k == 1);
    for (const auto& a : alpha0.letters) CHECK(a.e == 0);
    CHECK(eval_nlc(alpha0).graph == edgeless(5));

    // path: width at most 3 and exact round trip
    auto og = identity_order(path(4));
    auto alpha = nlc_from_order(og);
    CHECK(alpha.k <= 3);
    CHECK(eval_nlc(alpha).graph == og.graph);
}

TEST_CASE("from-order width bound on random instances") {
    for (int trial = 0; trial < 8; ++trial) {
        auto gen = random_nlc(40, 2, 8800 + trial);
        auto ev = eval_nlc(gen);
        auto og = identity_order(ev.graph);
        int w = order_width(og).width;
        auto alpha = nlc_from_order(og);
        CHECK(alpha.k <= (1 << w) + 1);
        auto back = eval_nlc(alpha);
        // letters carry original vertex ids in order
        for (int i = 0; i < og.n(); ++i) CHECK(back.vlabels[i] == og.order[i]);
        CHECK(back.graph == ev.graph);
    }
}

TEST_CASE("from-order round trips under shuffled orders") {
    Rng rng(515);
    for (int trial = 0; trial < 8; ++trial) {
        int n = 4 + rng.below(10);
        Graph g = random_graph(n, rng);
        std::vector<int> ord(n);
        for (int i = 0; i < n; ++i) ord[i] = i;
        for (int i = n - 1; i > 0; --i) std::swap(ord[i], ord[rng.below(i + 1)]);
        OrderedGraph og(g, ord);
        auto alpha = nlc_from_order(og);
        auto back = eval_nlc(alpha);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                CHECK(back.graph.has_edge(i, j) ==
                      g.has_edge(back.vlabels[i], back.vlabels[j]));
    }
}

TEST_CASE("generated instances have order width at most k") {
    for (int trial = 0; trial < 6; ++trial) {
        auto alpha = random_nlc(40, 2, 9900 + trial);
        auto ev = eval_nlc(alpha);
        CHECK(order_width(identity_order(ev.graph)).width <= 2);
    }
}

TEST_CASE("random generator is deterministic") {
    auto a = random_nlc(30, 3, 424242);
    auto b = random_nlc(30, 3, 424242);
    CHECK(expression_to_text(a) == expression_to_text(b));
    auto c = random_nlc(30, 3, 424243);
    CHECK(expression_to_text(a) != expression_to_text(c));
    CHECK(random_nlc(1, 4, 1).letters.size() == 1);
}

TEST_CASE("text format round trips") {
    auto alpha = random_nlc(15, 3, 31337);
    auto text = expression_to_text(alpha);
    auto back = expression_from_text(text);
    CHECK(back.k == alpha.k);
    CHECK(expression_to_text(back) == text);
    CHECK(eval_nlc(back).graph == eval_nlc(alpha).graph);
    CHECK_THROWS_AS(expression_from_text("0 0 oops"), std::invalid_argument);
}
