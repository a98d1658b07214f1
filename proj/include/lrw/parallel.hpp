#pragma once

#include "lrw/constructions.hpp"
#include "lrw/encoding.hpp"
#include "lrw/nlc.hpp"
#include "lrw/order.hpp"

namespace lrw {

// OpenMP twins of the hot verification kernels. Each has a serial reference
// next to it; the _omp variant must agree with it bit for bit and the tests
// hold them to that.

// Rebuild all adjacency rows of a colored order. decode() is the serial
// reference; the parallel version distributes the row loop.
Graph decode_omp(const ColoredOrder& co);

// Agreement of decode_edge with the graph on every vertex pair.
bool decode_edges_agree_serial(const FTree& ft, const OrderedGraph& og);
bool decode_edges_agree_omp(const FTree& ft, const OrderedGraph& og);

// Minimum order width over all permutations; serial reference is
// lrw_bruteforce. The parallel version splits the permutation space by the
// first element.
int lrw_bruteforce_omp(const Graph& g);

// Monochromatic-induced-copy check over every m-coloring of G^{.m};
// serial reference is ramsey_check. Colorings are range-partitioned.
RamseyReport ramsey_check_omp(const Graph& g, int m, uint64_t max_colorings = 1 << 21);

// scode_edge against the evaluated adjacency on all letter pairs.
bool scode_agrees_serial(const FactorizationTree& ft, const NlcExpression& alpha);
bool scode_agrees_omp(const FactorizationTree& ft, const NlcExpression& alpha);

} // namespace lrw
