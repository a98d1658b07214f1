#pragma once

#include "lrw/activity.hpp"

#include <cstdint>
#include <string>

namespace lrw {

// Thrown by decode on inconsistent color data; pos is the offending position.
struct DecodingError : std::runtime_error {
    int pos;
    DecodingError(const std::string& msg, int p) : std::runtime_error(msg), pos(p) {}
};

// Per-vertex color triple. cls holds (gamma(v), Gamma(F(v)), ..., Gamma(F^r(v)));
// nc = { gamma(u) : u adjacent to v, v in I_u }; ic = { gamma(u) : v in I_u }.
// All sets sorted ascending; colors are 1..r+2.
struct VertexTriple {
    int gamma = 0;
    std::vector<std::vector<int>> cls; // r sets, Gamma(F^i(v)) for i = 1..r
    std::vector<int> nc;
    std::vector<int> ic;

    bool operator==(const VertexTriple& o) const = default;
    bool operator<(const VertexTriple& o) const;
};

// The order plus per-position triples; carries no adjacency data.
struct ColoredOrder {
    int n = 0;
    int r = 0;
    std::vector<VertexTriple> triples; // by position

    std::size_t distinct_triples() const;
};

ColoredOrder encode(const OrderedGraph& og);
ColoredOrder encode(const OrderPipeline& pipe);

// Rebuilds the graph from colors and order alone. Positions and vertices
// coincide in the result (vertex p = position p of the encoded order).
Graph decode(const ColoredOrder& co);

// Validated resolution tables shared by the serial and parallel decoders.
// edge(u, v) for u < v is a pure function after construction.
struct DecodeContext {
    const ColoredOrder* co = nullptr;
    std::vector<std::vector<std::vector<int>>> fsets; // per u: r resolved sets
    std::vector<std::vector<int>> next_same;          // per position, per color

    bool edge(int u, int v) const;
};
DecodeContext make_decode_context(const ColoredOrder& co);

// f'(r) = (r+2)! * 2^C(r,2) * 3^(r+2); saturates at uint64 max.
uint64_t palette_bound(int r);

// Canonical JSON: {"n", "r", "palette": [...], "vertex_palette_index": [...]},
// palette sorted, sets sorted; byte-identical across runs.
std::string encoding_to_json(const ColoredOrder& co);
ColoredOrder encoding_from_json(const std::string& text);

} // namespace lrw
