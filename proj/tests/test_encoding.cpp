#include "lrw/encoding.hpp"
#include "lrw/nlc.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace lrw;
using namespace testutil;

TEST_CASE("palette bound values") {
    CHECK(palette_bound(0) == 18);
    CHECK(palette_bound(1) == 162);
    CHECK(palette_bound(2) == 3888);
}

TEST_CASE("single vertex encoding") {
    auto co = encode(identity_order(edgeless(1)));
    CHECK(co.r == 0);
    REQUIRE(co.triples.size() == 1);
    const auto& t = co.triples[0];
    CHECK(t.gamma == 2); // r+2, the lone vertex is inactive
    CHECK(t.nc.empty());
    CHECK(t.ic == std::vector<int>{2});
}

TEST_CASE("edgeless graphs share one triple") {
    auto co = encode(identity_order(edgeless(5)));
    CHECK(co.distinct_triples() == 1);
    Graph back = decode(co);
    CHECK(back == edgeless(5));
}

TEST_CASE("path encoding round trip and palette") {
    auto og = identity_order(path(4));
    auto co = encode(og);
    CHECK(co.r == 1);
    CHECK(co.distinct_triples() <= palette_bound(1));
    CHECK(decode(co) == og.graph);
}

TEST_CASE("round trip on random NLC instances") {
    for (int trial = 0; trial < 12; ++trial) {
        int k = 1 + trial % 4;
        auto alpha = random_nlc(24 + 3 * trial, k, 7000 + trial);
        auto ev = eval_nlc(alpha);
        auto og = identity_order(ev.graph);
        auto co = encode(og);
        CHECK(decode(co) == og.graph);
        CHECK((uint64_t)co.distinct_triples() <= palette_bound(co.r));
    }
}

TEST_CASE("round trip under a shuffled order") {
    Rng rng(404);
    for (int trial = 0; trial < 8; ++trial) {
        int n = 5 + rng.below(9);
        Graph g = random_graph(n, rng);
        std::vector<int> ord(n);
        for (int i = 0; i < n; ++i) ord[i] = i;
        for (int i = n - 1; i > 0; --i) std::swap(ord[i], ord[rng.below(i + 1)]);
        OrderedGraph og(g, ord);
        auto co = encode(og);
        Graph back = decode(co);
        // decode works in position space
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q)
                CHECK(back.has_edge(p, q) == g.has_edge(ord[p], ord[q]));
    }
}

TEST_CASE("class set structure constraints") {
    for (int trial = 0; trial < 6; ++trial) {
        auto alpha = random_nlc(30, 3, 1234 + trial);
        auto ev = eval_nlc(alpha);
        auto co = encode(identity_order(ev.graph));
        for (const auto& t : co.triples) {
            for (int i = 1; i <= co.r; ++i) {
                CHECK((int)t.cls[i - 1].size() <= co.r + 1 - i);
                if (t.gamma <= co.r + 1)
                    for (int c : t.cls[i - 1]) CHECK(c != t.gamma);
            }
            CHECK(std::includes(t.ic.begin(), t.ic.end(), t.nc.begin(), t.nc.end()));
        }
    }
}

TEST_CASE("encoding json is canonical and parses back") {
    auto og = identity_order(path(4));
    auto co = encode(og);
    std::string a = encoding_to_json(co);
    std::string b = encoding_to_json(encode(og));
    CHECK(a == b);
    auto back = encoding_from_json(a);
    CHECK(back.n == co.n);
    CHECK(back.r == co.r);
    CHECK(back.triples == co.triples);
    CHECK(decode(back) == og.graph);
}

TEST_CASE("decode rejects malformed encodings") {
    auto co = encode(identity_order(path(4)));
    auto bad = co;
    bad.triples[2].gamma = 99;
    CHECK_THROWS_AS(decode(bad), DecodingError);
    bad = co;
    bad.triples[1].nc.push_back(bad.triples[1].ic.back() + 1);
    std::sort(bad.triples[1].nc.begin(), bad.triples[1].nc.end());
    CHECK_THROWS_AS(decode(bad), DecodingError);
}
