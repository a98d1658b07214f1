#pragma once

#include "lrw/order.hpp"

#include <unordered_map>

namespace lrw {

// All of the structures below live in position space: vertex p means the
// vertex at position p of the order, and comparisons are integer comparisons.

// Per position t, the active basis B_t (lexicographically least neighbor
// basis of V^{>t}) and, for every v <= t outside B_t, the unique subset of
// B_t whose future neighborhoods sum to N^{>t}(v).
struct NeighborBases {
    int n = 0;
    std::vector<std::vector<int>> basis;          // basis[t]: B_t ascending
    std::vector<BitVec> basis_mask;               // membership per position
    std::vector<std::vector<std::vector<int>>> expr; // expr[t][v], empty for v in B_t or v > t
    int width = 0;                                // max |B_t|

    bool in_basis(int t, int v) const { return basis_mask[t].get(v); }
};

NeighborBases neighbor_bases(const OrderedGraph& og);

// tau(v) = least t >= v with v outside B_t; I_v = [v, tau(v)];
// F_0(v) = the unique subset of B_{tau(v)} with N^{>tau(v)}(v) = sum over it.
struct ActivityIndex {
    int n = 0;
    std::vector<int> tau;
    std::vector<bool> active; // tau(v) > v
    std::vector<std::vector<int>> f0;
};

ActivityIndex activity_index(const OrderedGraph& og, const NeighborBases& nb);

struct VecIntHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= (std::size_t)x + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// The F-tree on Z = { all active sets, all singletons, the empty set }.
// F(M) = M xor {v} xor F_0(v) for the unique v in M with tau(v) = tau(M).
struct FTree {
    std::vector<std::vector<int>> nodes; // sorted vertex sets; nodes[0] = {}
    std::vector<int> f;                  // F-image node id
    std::vector<int> singleton;          // singleton[v] = node id of {v}
    std::vector<int> tau_set;            // tau(M); n for the empty set
    std::vector<int> max_set;            // max M; -1 for the empty set
    bool complete = true;                // whether every active set was enumerated
    std::unordered_map<std::vector<int>, int, VecIntHash> index;

    int root() const { return 0; }
    std::size_t size() const { return nodes.size(); }
    // -1 when absent
    int node_id(const std::vector<int>& sorted_set) const;
};

// Budget for materializing all active sets; beyond it only the closure of
// the singletons under F is kept and `complete` is false.
FTree f_tree(const OrderedGraph& og, const ActivityIndex& ai,
             std::size_t budget = std::size_t(1) << 20);

// xi(u,v) = min { k : v in I_{F^k(u)} or F^k(u) = empty }.
int xi(const FTree& ft, const ActivityIndex& ai, int u, int v);

// Corollary-style adjacency from the F-tree alone:
// for u < v, edge iff v in N_xor(F^{xi(u,v)}(u)).
bool decode_edge(const FTree& ft, const OrderedGraph& og, int u, int v);

// Intersection graph of the activity intervals with the gamma coloring.
// Colors are 1..r+2; color r+2 exactly on inactive vertices; overlapping
// intervals get distinct colors.
struct IntervalGraphH {
    int n = 0;
    int r = 0;
    std::vector<int> point_load; // number of intervals covering position t
    std::vector<int> gamma;      // color per vertex, in 1..r+2
};

IntervalGraphH interval_graph(const OrderedGraph& og, const ActivityIndex& ai,
                              int width);

// One pass over the whole chain; every later stage reuses these.
struct OrderPipeline {
    OrderedGraph og;
    NeighborBases nb;
    ActivityIndex ai;
    FTree ft;
    IntervalGraphH ig;
    int width = 0;
};

OrderPipeline build_pipeline(const OrderedGraph& og,
                             std::size_t ftree_budget = std::size_t(1) << 20);

} // namespace lrw
