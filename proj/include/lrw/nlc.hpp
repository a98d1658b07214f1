#pragma once

#include "lrw/constructions.hpp"
#include "lrw/order.hpp"
#include "lrw/semigroup.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace lrw {

// One letter (v, c, e, r): insert vertex v colored c, connect it to every
// vertex whose current color is in e, then recolor all vertices (including v)
// through r. Colors are 0-based, c in [0,k), e a subset mask of [0,k).
struct NlcLetter {
    int v = 0;
    int c = 0;
    uint32_t e = 0;
    std::vector<int> r;
};

struct NlcExpression {
    int k = 1;
    std::vector<NlcLetter> letters;
};

// Throws std::invalid_argument on duplicate v-values or out-of-range fields.
void validate_expression(const NlcExpression& alpha);

// Vertex i of the graph is the i-th letter; vlabels maps back to v-values.
struct NlcEval {
    Graph graph;
    std::vector<int> vlabels;
    std::vector<int> colors; // final colors, 0-based
};

NlcEval eval_nlc(const NlcExpression& alpha);

// Expression with Xi equal to og.graph (letters in order, v = vertex id) and
// width at most 2^w + 1 where w is the order width.
NlcExpression nlc_from_order(const OrderedGraph& og);

// Uniform random admissible expression, deterministic in seed;
// letter i has v = i.
NlcExpression random_nlc(int n, int k, uint64_t seed);

// Text format, one letter per line: "v c e={i,j} r=[imgs]"; colors 0-based.
std::string expression_to_text(const NlcExpression& alpha);
NlcExpression expression_from_text(const std::string& text);

// Ramseyan factorization tree for the morphism h(letter) = r_letter into
// Gamma_k. Every node is a leaf, binary, or has all children mapped to one
// common idempotent; node depth (leaf = 1) is at most 3 k^k.
struct FactorizationTree {
    struct Node {
        int parent = -1;
        std::vector<int> children;
        int lo = 0, hi = 0; // letter span [lo, hi)
        int value = 0;      // semigroup element id
        int letter = -1;    // leaf only
        int kappa = 0;      // 1 or 2, alternating along each child list
        bool leaf() const { return letter >= 0; }
    };
    int k = 1;
    std::vector<Node> nodes;
    int root = -1;
    std::vector<int> leaf_of; // letter index -> node id
    std::vector<int> depth_of; // node depth, root = 1
    int depth = 0;

    int lca(int na, int nb) const;
    // child of ancestor `anc` on the path to node `nd` (nd != anc)
    int child_towards(int anc, int nd) const;
};

FactorizationTree simon_factorize(const NlcExpression& alpha);

// Verifies the Ramseyan conditions and the leaf order; used by tests.
bool is_ramseyan(const FactorizationTree& ft, const GammaK& gk,
                 const NlcExpression& alpha, std::string* why = nullptr);

// Adjacency of letters z1 < z2 decided from their least common ancestor and
// the col/eset data of the tree, without evaluating the expression.
bool scode_edge(const FactorizationTree& ft, const NlcExpression& alpha,
                int z1, int z2);

// Per-vertex vector of (kappa, col, eset) triples along the root-leaf path,
// interned into class ids. Each class induces a cograph in Xi(alpha).
struct Cog0Coloring {
    std::vector<int> class_of;                       // per letter
    std::vector<std::vector<std::array<int, 3>>> classes; // class id -> vector
};

Cog0Coloring cog0_coloring(const FactorizationTree& ft, const NlcExpression& alpha);

// Check report for the cog0 classes: P4-freeness and restricted-tree height.
struct Cog0Report {
    bool all_p4_free = true;
    bool heights_ok = true;  // every class height <= 3 k^k
    bool marks_ok = true;    // join/union per LCA node consistent with Xi
    int max_height = 0;
    std::size_t class_count = 0;
};

Cog0Report cog0_verify(const FactorizationTree& ft, const NlcExpression& alpha,
                       const Cog0Coloring& col);

// Searches for letters x_1,y_1,...,x_l,y_l under a common node, in pairwise
// distinct children, with constant (col,eset) profiles satisfying
// c_x in e_y and c_y not in e_x. On success returns a validated semi-induced
// half-graph witness (letter indices) of order at least max(1, l/3).
std::optional<SemiInducedWitness> find_half_graph_pattern_in_tree(
    const FactorizationTree& ft, const NlcExpression& alpha, int l);

} // namespace lrw
