#pragma once

#include "lrw/graph.hpp"

#include <optional>
#include <array>

namespace lrw {

// Exact clique number, branch and bound with greedy coloring bound. n <= 64.
int max_clique(const Graph& g);

// Exact chromatic number, DSATUR branch and bound. n <= 25.
int chromatic_number(const Graph& g);

// P4-free test. When g contains an induced P4, returns its four vertices in
// path order a-b-c-d.
struct CographCheck {
    bool is_cograph;
    std::optional<std::array<int, 4>> p4;
};
CographCheck is_cograph(const Graph& g);

} // namespace lrw
