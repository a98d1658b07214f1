#include "lrw/order.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace lrw {

OrderedGraph::OrderedGraph(Graph g, std::vector<int> ord)
    : graph(std::move(g)), order(std::move(ord)) {
    if ((int)order.size() != graph.n)
        throw std::invalid_argument("order length does not match vertex count");
    rank.assign(graph.n, -1);
    for (int p = 0; p < graph.n; ++p) {
        int v = order[p];
        if (v < 0 || v >= graph.n || rank[v] != -1)
            throw std::invalid_argument("order is not a permutation of the vertices");
        rank[v] = p;
    }
}

BitVec OrderedGraph::adj_at(int p) const {
    BitVec row(graph.n);
    for (std::size_t u : graph.adj[order[p]].ones()) row.set(rank[u]);
    return row;
}

OrderedGraph identity_order(Graph g) {
    std::vector<int> ord(g.n);
    std::iota(ord.begin(), ord.end(), 0);
    return OrderedGraph(std::move(g), std::move(ord));
}

WidthProfile order_width(const OrderedGraph& og) {
    const int n = og.n();
    WidthProfile wp;
    if (n < 2) return wp;
    std::vector<BitVec> rows(n);
    for (int p = 0; p < n; ++p) rows[p] = og.adj_at(p);
    wp.per_prefix.resize(n - 1);
    for (int t = 0; t < n - 1; ++t) {
        Gf2Basis basis(n);
        for (int p = 0; p <= t; ++p) {
            BitVec r = rows[p];
            r.keep_above(t);
            basis.insert(r, (uint32_t)p);
        }
        wp.per_prefix[t] = (int)basis.rank();
        wp.width = std::max(wp.width, wp.per_prefix[t]);
    }
    return wp;
}

namespace {

// rank over GF(2) of up-to-64-column rows, destructive
int rank64(std::vector<uint64_t>& rows) {
    int r = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        uint64_t v = rows[i];
        for (int j = 0; j < r; ++j)
            v = std::min(v, v ^ rows[j]);
        if (v) {
            rows[r++] = v;
            // keep rows sorted descending by leading bit for the min trick
            for (int j = r - 1; j > 0 && rows[j] > rows[j - 1]; --j)
                std::swap(rows[j], rows[j - 1]);
        }
    }
    return r;
}

int rho_mask(const std::vector<uint64_t>& adj, uint64_t s) {
    std::vector<uint64_t> rows;
    uint64_t rest = s;
    while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        uint64_t row = adj[v] & ~s;
        if (row) rows.push_back(row);
    }
    return rank64(rows);
}

int width_of_order64(const std::vector<uint64_t>& adj, const std::vector<int>& ord,
                     int cap) {
    // max prefix cut-rank; early exit when exceeding cap
    int n = (int)ord.size();
    int w = 0;
    uint64_t s = 0;
    for (int i = 0; i + 1 < n; ++i) {
        s |= uint64_t(1) << ord[i];
        w = std::max(w, rho_mask(adj, s));
        if (w > cap) return w;
    }
    return w;
}

std::vector<uint64_t> to_mask_adj(const Graph& g) {
    std::vector<uint64_t> adj(g.n, 0);
    for (int i = 0; i < g.n; ++i)
        for (std::size_t j : g.adj[i].ones()) adj[i] |= uint64_t(1) << j;
    return adj;
}

} // namespace

LrwResult lrw_exact(const Graph& g) {
    const int n = g.n;
    if (n > 20) throw SizeCapError("lrw_exact: subset DP capped at n <= 20");
    if (n < 2) {
        std::vector<int> ord(n);
        std::iota(ord.begin(), ord.end(), 0);
        return {0, OrderedGraph(g, ord)};
    }
    auto adj = to_mask_adj(g);
    const uint32_t full = (n == 32) ? ~uint32_t(0) : ((uint32_t(1) << n) - 1);
    std::vector<uint8_t> f(std::size_t(full) + 1, 0);
    std::vector<uint8_t> rho(std::size_t(full) + 1, 0);
    for (uint32_t s = 1; s <= full; ++s) {
        rho[s] = (uint8_t)rho_mask(adj, s);
        int best = 255;
        uint32_t rest = s;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            int cand = std::max<int>(f[s & ~(uint32_t(1) << v)], rho[s]);
            if (cand < best) best = cand;
        }
        f[s] = (uint8_t)best;
    }
    // reconstruct: repeatedly remove the smallest vertex attaining the optimum
    std::vector<int> ord(n);
    uint32_t s = full;
    for (int i = n - 1; i >= 0; --i) {
        uint32_t rest = s;
        int picked = -1;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (std::max<int>(f[s & ~(uint32_t(1) << v)], rho[s]) == f[s]) {
                picked = v;
                break;
            }
        }
        ord[i] = picked;
        s &= ~(uint32_t(1) << picked);
    }
    return {(int)f[full], OrderedGraph(g, ord)};
}

int lrw_bruteforce(const Graph& g) {
    const int n = g.n;
    if (n > 8) throw SizeCapError("lrw_bruteforce: capped at n <= 8");
    if (n < 2) return 0;
    auto adj = to_mask_adj(g);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    int best = n;
    do {
        best = std::min(best, width_of_order64(adj, perm, best - 1));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

OrderedGraph greedy_order(const Graph& g) {
    const int n = g.n;
    std::vector<int> ord;
    ord.reserve(n);
    BitVec placed(std::max(n, 1));
    for (int step = 0; step < n; ++step) {
        int best_v = -1, best_r = -1;
        for (int v = 0; v < n; ++v) {
            if (placed.get(v)) continue;
            placed.set(v);
            int r = cut_rank(g, placed);
            placed.clear(v);
            if (best_v == -1 || r < best_r) {
                best_v = v;
                best_r = r;
            }
        }
        placed.set(best_v);
        ord.push_back(best_v);
    }
    return OrderedGraph(g, ord);
}

} // namespace lrw
