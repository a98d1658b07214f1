#pragma once

#include "lrw/graph.hpp"

namespace lrw {

// A graph together with a linear order. order[p] = vertex at position p,
// rank[v] = position of vertex v; rank . order = identity.
struct OrderedGraph {
    Graph graph;
    std::vector<int> order;
    std::vector<int> rank;

    OrderedGraph() = default;
    OrderedGraph(Graph g, std::vector<int> ord);

    int n() const { return graph.n; }
    // Adjacency row of the vertex at position p, expressed in positions.
    BitVec adj_at(int p) const;
};

OrderedGraph identity_order(Graph g);

// Cut-ranks of all prefixes {v_1..v_i}, i = 1..n-1, and their maximum.
struct WidthProfile {
    std::vector<int> per_prefix;
    int width = 0;
};

WidthProfile order_width(const OrderedGraph& og);

// Exact linear rankwidth by subset DP, f(S) = min_{v in S} max(f(S\v), rho(S)).
// n <= 20.
struct LrwResult {
    int r;
    OrderedGraph witness;
};
LrwResult lrw_exact(const Graph& g);

// Independent oracle: minimum order width over all n! permutations. n <= 8.
int lrw_bruteforce(const Graph& g);

// Heuristic order: append the vertex minimizing the next prefix cut-rank,
// ties by smallest index. Valid order, no optimality claim.
OrderedGraph greedy_order(const Graph& g);

} // namespace lrw
