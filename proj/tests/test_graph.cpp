#include "lrw/constructions.hpp"
#include "lrw/graph.hpp"
#include "lrw/nlc.hpp"
#include "lrw/oracles.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <sstream>

using namespace lrw;
using namespace testutil;

namespace {

// dense elimination over a full 0/1 matrix, independent of Gf2Basis
int dense_rank(std::vector<std::vector<int>> m) {
    if (m.empty()) return 0;
    int rows = (int)m.size(), cols = (int)m[0].size(), rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c]) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        for (int r = 0; r < rows; ++r)
            if (r != rank && m[r][c])
                for (int cc = 0; cc < cols; ++cc) m[r][cc] ^= m[rank][cc];
        ++rank;
    }
    return rank;
}

int cut_rank_oracle(const Graph& g, const std::vector<int>& x) {
    std::vector<int> comp;
    std::vector<bool> in(g.n, false);
    for (int v : x) in[v] = true;
    for (int v = 0; v < g.n; ++v)
        if (!in[v]) comp.push_back(v);
    std::vector<std::vector<int>> m;
    for (int v : x) {
        std::vector<int> row;
        for (int u : comp) row.push_back(g.has_edge(v, u) ? 1 : 0);
        m.push_back(row);
    }
    return dense_rank(m);
}

} // namespace

TEST_CASE("make_graph examples and errors") {
    Graph k2 = make_graph(2, {{0, 1}});
    CHECK(k2.edge_count() == 1);
    Graph p4 = path(4);
    CHECK(p4.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
    Graph c5 = cycle(5);
    CHECK(c5.edge_count() == 5);
    CHECK_THROWS_AS(make_graph(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(make_graph(2, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("cut_rank examples") {
    Graph c5 = cycle(5);
    CHECK(cut_rank(c5, std::vector<int>{}) == 0);
    // P4 a-b-c-d, X = {a,b}: rows {}, {c} -> rank 1
    Graph p4 = path(4);
    CHECK(cut_rank(p4, std::vector<int>{0, 1}) == 1);
    // half graph H_3, a-side: triangular pattern, full rank
    Graph h3 = half_graph(3);
    CHECK(cut_rank(h3, std::vector<int>{0, 1, 2}) == 3);
}

TEST_CASE("cut_rank symmetry and oracle agreement") {
    Rng rng(11);
    for (int trial = 0; trial < 12; ++trial) {
        int n = 4 + rng.below(5); // up to 8
        Graph g = random_graph(n, rng);
        for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask) {
            std::vector<int> x, xc;
            for (int v = 0; v < n; ++v)
                (mask >> v & 1 ? x : xc).push_back(v);
            int r1 = cut_rank(g, x);
            CHECK(r1 == cut_rank(g, xc));
            CHECK(r1 == cut_rank_oracle(g, x));
        }
    }
}

TEST_CASE("edge list io") {
    Graph g = make_graph(5, {{0, 3}, {1, 2}});
    std::string text = edge_list_string(g);
    CHECK(text == "n 5\n0 3\n1 2\n");
    std::istringstream in("# comment\nn 5\n1 2\n0 3 # trailing\n");
    Graph back = read_edge_list(in);
    CHECK(back == g);
    // no header: n = max index + 1
    std::istringstream in2("0 1\n2 3\n");
    CHECK(read_edge_list(in2).n == 4);
    std::istringstream bad("0\n");
    CHECK_THROWS_AS(read_edge_list(bad), std::invalid_argument);
}

TEST_CASE("max clique examples") {
    CHECK(max_clique(edgeless(5)) == 1);
    CHECK(max_clique(cycle(5)) == 2);
    auto c5c5 = lex_product(cycle(5), cycle(5));
    CHECK(max_clique(c5c5.graph) == 4);
    CHECK_THROWS_AS(max_clique(edgeless(65)), SizeCapError);
}

TEST_CASE("chromatic number examples") {
    CHECK(chromatic_number(complete(4)) == 4);
    CHECK(chromatic_number(cycle(5)) == 3);
    CHECK_THROWS_AS(chromatic_number(edgeless(26)), SizeCapError);
}

TEST_CASE("omega <= chi on random instances") {
    Rng rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = random_graph(3 + rng.below(10), rng);
        CHECK(max_clique(g) <= chromatic_number(g));
    }
}

TEST_CASE("cograph check examples") {
    auto r = is_cograph(path(4));
    CHECK(!r.is_cograph);
    REQUIRE(r.p4.has_value());
    auto& p = *r.p4;
    // the witness is an induced path
    Graph p4 = path(4);
    CHECK(p4.has_edge(p[0], p[1]));
    CHECK(p4.has_edge(p[1], p[2]));
    CHECK(p4.has_edge(p[2], p[3]));
    CHECK(!p4.has_edge(p[0], p[2]));
    CHECK(!p4.has_edge(p[0], p[3]));
    CHECK(!p4.has_edge(p[1], p[3]));

    CHECK(is_cograph(biclique(3, 3)).is_cograph);
    CHECK(is_cograph(edgeless(6)).is_cograph);
}

TEST_CASE("single-color NLC graphs without recoloring are cographs") {
    // k = 1, r = identity: every expression builds a cograph
    Rng rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + rng.below(12);
        NlcExpression alpha;
        alpha.k = 1;
        for (int i = 0; i < n; ++i) {
            NlcLetter a;
            a.v = i;
            a.c = 0;
            a.e = rng.coin() ? 1u : 0u;
            a.r = {0};
            alpha.letters.push_back(a);
        }
        auto ev = eval_nlc(alpha);
        CHECK(is_cograph(ev.graph).is_cograph);
    }
}
