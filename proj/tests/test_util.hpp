#pragma once

#include "lrw/graph.hpp"

#include <cstdint>

namespace testutil {

// stable PRNG for reproducible instances (splitmix64)
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    int below(int n) { return (int)(next() % (uint64_t)n); }
    bool coin() { return next() & 1; }
};

inline lrw::Graph random_graph(int n, Rng& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.coin()) edges.emplace_back(i, j);
    return lrw::make_graph(n, edges);
}

inline lrw::Graph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return lrw::make_graph(n, e);
}

inline lrw::Graph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return lrw::make_graph(n, e);
}

inline lrw::Graph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return lrw::make_graph(n, e);
}

inline lrw::Graph edgeless(int n) { return lrw::make_graph(n, {}); }

inline lrw::Graph biclique(int a, int b) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return lrw::make_graph(a + b, e);
}

} // namespace testutil
