#include "lrw/oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace lrw {

namespace {

// --- max clique on <= 64 vertices, single-word bitsets ---

struct CliqueSolver {
    int n;
    std::vector<uint64_t> adj;
    int best = 0;

    // Greedy coloring upper bound on P; vertices bucketed by color class.
    // Fills order/bound so that expanding in reverse prunes well (Tomita).
    void color_sort(uint64_t p, std::vector<int>& order, std::vector<int>& bound) {
        order.clear();
        bound.clear();
        int color = 0;
        while (p) {
            ++color;
            uint64_t q = p;
            while (q) {
                int v = std::countr_zero(q);
                q &= q - 1;
                p &= ~(uint64_t(1) << v);
                q &= ~adj[v];
                order.push_back(v);
                bound.push_back(color);
            }
        }
    }

    void expand(uint64_t p, int size) {
        std::vector<int> order, bound;
        color_sort(p, order, bound);
        for (int i = (int)order.size() - 1; i >= 0; --i) {
            if (size + bound[i] <= best) return;
            int v = order[i];
            uint64_t np = p & adj[v];
            if (np)
                expand(np, size + 1);
            else
                best = std::max(best, size + 1);
            p &= ~(uint64_t(1) << v);
        }
    }
};

// --- exact chromatic number by DSATUR branch and bound ---

struct ColorSolver {
    int n;
    std::vector<uint64_t> adj;
    std::vector<int> color;     // 0 = uncolored, else 1..k
    std::vector<uint64_t> used; // used[v]: colors adjacent to v (bit c-1)
    int best;                   // best complete coloring found so far
    int lower;

    bool done() const { return best == lower; }

    void solve(int colored, int maxused) {
        if (done()) return;
        if (maxused >= best) return;
        if (colored == n) {
            best = maxused;
            return;
        }
        // pick uncolored vertex with max saturation, break ties by degree
        int pick = -1, sat = -1, deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v]) continue;
            int s = std::popcount(used[v]);
            int d = std::popcount(adj[v]);
            if (s > sat || (s == sat && d > deg)) {
                pick = v;
                sat = s;
                deg = d;
            }
        }
        int limit = std::min(maxused + 1, best - 1);
        for (int c = 1; c <= limit; ++c) {
            if (used[pick] & (uint64_t(1) << (c - 1))) continue;
            color[pick] = c;
            std::vector<int> touched;
            uint64_t nb = adj[pick];
            while (nb) {
                int u = std::countr_zero(nb);
                nb &= nb - 1;
                if (!(used[u] & (uint64_t(1) << (c - 1)))) {
                    used[u] |= uint64_t(1) << (c - 1);
                    touched.push_back(u);
                }
            }
            solve(colored + 1, std::max(maxused, c));
            for (int u : touched) used[u] &= ~(uint64_t(1) << (c - 1));
            color[pick] = 0;
            if (done()) return;
        }
    }
};

int greedy_coloring_bound(const Graph& g) {
    // largest-degree-first greedy
    std::vector<int> vs(g.n);
    std::iota(vs.begin(), vs.end(), 0);
    std::sort(vs.begin(), vs.end(),
              [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> color(g.n, 0);
    int k = 0;
    for (int v : vs) {
        uint64_t forbidden = 0;
        for (std::size_t u : g.adj[v].ones())
            if (color[u]) forbidden |= uint64_t(1) << (color[u] - 1);
        int c = 1;
        while (forbidden & (uint64_t(1) << (c - 1))) ++c;
        color[v] = c;
        k = std::max(k, c);
    }
    return k;
}

} // namespace

int max_clique(const Graph& g) {
    if (g.n > 64) throw SizeCapError("max_clique: exact search capped at n <= 64");
    if (g.n == 0) return 0;
    CliqueSolver s;
    s.n = g.n;
    s.adj.assign(g.n, 0);
    for (int i = 0; i < g.n; ++i)
        for (std::size_t j : g.adj[i].ones()) s.adj[i] |= uint64_t(1) << j;
    uint64_t all = (g.n == 64) ? ~uint64_t(0) : ((uint64_t(1) << g.n) - 1);
    s.best = 1;
    s.expand(all, 0);
    return s.best;
}

int chromatic_number(const Graph& g) {
    if (g.n > 25) throw SizeCapError("chromatic_number: exact search capped at n <= 25");
    if (g.n == 0) return 0;
    ColorSolver s;
    s.n = g.n;
    s.adj.assign(g.n, 0);
    for (int i = 0; i < g.n; ++i)
        for (std::size_t j : g.adj[i].ones()) s.adj[i] |= uint64_t(1) << j;
    s.color.assign(g.n, 0);
    s.used.assign(g.n, 0);
    s.best = greedy_coloring_bound(g);
    s.lower = max_clique(g);
    if (s.best > s.lower) s.solve(0, 0);
    return s.best;
}

CographCheck is_cograph(const Graph& g) {
    // O(n^4) induced-P4 scan with early exit. A 4-set induces P4 iff it has
    // exactly 3 edges with degree multiset {1,1,2,2}.
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b)
            for (int c = b + 1; c < g.n; ++c)
                for (int d = c + 1; d < g.n; ++d) {
                    int v[4] = {a, b, c, d};
                    int deg[4] = {0, 0, 0, 0};
                    int edges = 0;
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (g.has_edge(v[i], v[j])) {
                                ++edges;
                                ++deg[i];
                                ++deg[j];
                            }
                    if (edges != 3) continue;
                    int ones = 0, twos = 0;
                    for (int i = 0; i < 4; ++i) {
                        if (deg[i] == 1) ++ones;
                        if (deg[i] == 2) ++twos;
                    }
                    if (ones != 2 || twos != 2) continue;
                    // order as a path: endpoint, then walk
                    std::array<int, 4> path{};
                    int e0 = -1;
                    for (int i = 0; i < 4; ++i)
                        if (deg[i] == 1) { e0 = i; break; }
                    path[0] = v[e0];
                    bool seen[4] = {false, false, false, false};
                    seen[e0] = true;
                    for (int step = 1; step < 4; ++step) {
                        for (int i = 0; i < 4; ++i)
                            if (!seen[i] && g.has_edge(path[step - 1], v[i])) {
                                path[step] = v[i];
                                seen[i] = true;
                                break;
                            }
                    }
                    return {false, path};
                }
    return {true, std::nullopt};
}

} // namespace lrw
