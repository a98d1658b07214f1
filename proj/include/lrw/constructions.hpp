#pragma once

#include "lrw/order.hpp"

#include <optional>

namespace lrw {

// Disjoint union of g and h plus all edges between the two copies.
Graph join(const Graph& g, const Graph& h);

// Lexicographic product. Vertex (u,v) is flattened to u*|h|+v; (u,v)~(u',v')
// iff u~u' in g, or u=u' and v~v' in h. When orders are given, the returned
// order is lexicographic on (position in og, position in oh) and its width is
// checked against width(og)+width(oh) for n <= width_check_cap.
struct LexProduct {
    Graph graph;
    OrderedGraph ordered; // composed order
};
LexProduct lex_product(const Graph& g, const Graph& h,
                       const std::optional<OrderedGraph>& og = std::nullopt,
                       const std::optional<OrderedGraph>& oh = std::nullopt,
                       int width_check_cap = 2048);

// G^{.m}: G^{.1} = G, G^{.(i+1)} = G^{.i} . G. Caps |G|^m by max_vertices.
LexProduct iterated_lex(const Graph& g, int m, int max_vertices = 4096);

// Half-graph H_l: a_1..a_l, b_1..b_l with a_i ~ b_j iff i <= j.
// a_i = vertex i-1, b_j = vertex l+j-1.
Graph half_graph(int l);

// Lozin families H_{a,m} / ~H_{a,m} with the column-major canonical order.
struct LozinGraph {
    Graph graph;
    OrderedGraph ordered;
    // vertex id of v_{i,j}, 1-based i in [a], j in [m]
    int vid(int i, int j) const { return (i - 1) * m + (j - 1); }
    int a = 0, m = 0;
};
LozinGraph lozin(int a, int m, bool tilde);

// Semi-induced half-graph witness: a_i ~ b_j iff i <= j; nothing is required
// within the a side or the b side.
struct SemiInducedWitness {
    std::vector<int> a, b;
};

// Exhaustive search over ordered disjoint 2l-tuples. l <= 3, n <= 14.
std::optional<SemiInducedWitness> find_semi_induced_half_graph(const Graph& g, int l);

bool check_semi_induced(const Graph& g, const SemiInducedWitness& w);

// Checks that every m-coloring of iterated_lex(g, m) contains a monochromatic
// induced copy of g. Enumerates all m^{|G'|} colorings; m <= 3 and the
// coloring count is capped.
struct RamseyReport {
    bool ok = false;
    uint64_t colorings_checked = 0;
    std::optional<std::vector<int>> failing_coloring;
};
RamseyReport ramsey_check(const Graph& g, int m, uint64_t max_colorings = 1 << 21);

// true iff g has an induced subgraph isomorphic to pattern
bool has_induced_copy(const Graph& g, const Graph& pattern);
bool has_induced_copy_in(const Graph& g, const std::vector<int>& verts,
                         const Graph& pattern);

} // namespace lrw
