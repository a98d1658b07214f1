#include "lrw/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lrw {

Graph decode_omp(const ColoredOrder& co) {
    const int n = co.n;
    DecodeContext ctx = make_decode_context(co);
    std::vector<uint8_t> upper((std::size_t)n * n, 0);
#pragma omp parallel for schedule(dynamic)
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            upper[(std::size_t)u * n + v] = ctx.edge(u, v);
    Graph g;
    g.n = n;
    g.adj.assign(n, BitVec(std::max(n, 1)));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (upper[(std::size_t)u * n + v]) {
                g.adj[u].set(v);
                g.adj[v].set(u);
            }
    return g;
}

bool decode_edges_agree_serial(const FTree& ft, const OrderedGraph& og) {
    const int n = og.n();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (decode_edge(ft, og, u, v) != og.adj_at(u).get(v)) return false;
    return true;
}

bool decode_edges_agree_omp(const FTree& ft, const OrderedGraph& og) {
    const int n = og.n();
    std::vector<BitVec> rows(n);
    for (int p = 0; p < n; ++p) rows[p] = og.adj_at(p);
    std::atomic<bool> ok{true};
#pragma omp parallel for schedule(dynamic)
    for (int u = 0; u < n; ++u) {
        if (!ok.load(std::memory_order_relaxed)) continue;
        for (int v = u + 1; v < n; ++v)
            if (decode_edge(ft, og, u, v) != rows[u].get(v)) {
                ok.store(false, std::memory_order_relaxed);
                break;
            }
    }
    return ok.load();
}

namespace {

// width over all orders with a fixed first vertex
int brute_fixed_first(const std::vector<uint64_t>& adj, int first, int n, int cap) {
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if (v != first) rest.push_back(v);
    int best = cap;
    do {
        uint64_t s = uint64_t(1) << first;
        int w = 0;
        // prefix cut-ranks, early exit on best
        for (int i = 0; i + 1 < n; ++i) {
            if (i > 0) s |= uint64_t(1) << rest[i - 1];
            std::vector<uint64_t> rows;
            uint64_t rem = s;
            while (rem) {
                int v = std::countr_zero(rem);
                rem &= rem - 1;
                uint64_t row = adj[v] & ~s;
                if (row) rows.push_back(row);
            }
            int rank = 0;
            for (uint64_t r : rows) {
                uint64_t x = r;
                for (int j = 0; j < rank; ++j) x = std::min(x, x ^ rows[j]);
                if (x) {
                    rows[rank++] = x;
                    for (int j = rank - 1; j > 0 && rows[j] > rows[j - 1]; --j)
                        std::swap(rows[j], rows[j - 1]);
                }
            }
            w = std::max(w, rank);
            if (w >= best) break;
        }
        best = std::min(best, w);
    } while (std::next_permutation(rest.begin(), rest.end()));
    return best;
}

} // namespace

int lrw_bruteforce_omp(const Graph& g) {
    const int n = g.n;
    if (n > 8) throw SizeCapError("lrw_bruteforce_omp: capped at n <= 8");
    if (n < 2) return 0;
    std::vector<uint64_t> adj(n, 0);
    for (int i = 0; i < n; ++i)
        for (std::size_t j : g.adj[i].ones()) adj[i] |= uint64_t(1) << j;
    std::vector<int> per_first(n, n);
#pragma omp parallel for schedule(dynamic)
    for (int first = 0; first < n; ++first)
        per_first[first] = brute_fixed_first(adj, first, n, n);
    return *std::min_element(per_first.begin(), per_first.end());
}

RamseyReport ramsey_check_omp(const Graph& g, int m, uint64_t max_colorings) {
    if (m < 1 || m > 3) throw SizeCapError("ramsey_check_omp: m <= 3 required");
    auto prod = iterated_lex(g, m);
    const int np = prod.graph.n;
    double total = 1;
    for (int i = 0; i < np; ++i) {
        total *= m;
        if (total > (double)max_colorings)
            throw SizeCapError("ramsey_check_omp: coloring budget exceeded");
    }
    const uint64_t count = (uint64_t)total;
    std::atomic<bool> all_ok{true};
    std::atomic<uint64_t> first_bad{~uint64_t(0)};
#pragma omp parallel for schedule(dynamic, 64)
    for (long long code = 0; code < (long long)count; ++code) {
        if (!all_ok.load(std::memory_order_relaxed)) continue;
        std::vector<int> coloring(np);
        uint64_t c = (uint64_t)code;
        for (int i = 0; i < np; ++i) {
            coloring[i] = (int)(c % m);
            c /= m;
        }
        bool found = false;
        for (int color = 0; color < m && !found; ++color) {
            std::vector<int> verts;
            for (int i = 0; i < np; ++i)
                if (coloring[i] == color) verts.push_back(i);
            found = has_induced_copy_in(prod.graph, verts, g);
        }
        if (!found) {
            all_ok.store(false, std::memory_order_relaxed);
            uint64_t expect = ~uint64_t(0);
            first_bad.compare_exchange_strong(expect, (uint64_t)code);
        }
    }
    RamseyReport rep;
    rep.ok = all_ok.load();
    rep.colorings_checked = count;
    if (!rep.ok) {
        std::vector<int> coloring(np);
        uint64_t c = first_bad.load();
        for (int i = 0; i < np; ++i) {
            coloring[i] = (int)(c % m);
            c /= m;
        }
        rep.failing_coloring = coloring;
    }
    return rep;
}

bool scode_agrees_serial(const FactorizationTree& ft, const NlcExpression& alpha) {
    auto eval = eval_nlc(alpha);
    const int n = (int)alpha.letters.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (scode_edge(ft, alpha, i, j) != eval.graph.has_edge(i, j)) return false;
    return true;
}

bool scode_agrees_omp(const FactorizationTree& ft, const NlcExpression& alpha) {
    auto eval = eval_nlc(alpha);
    const int n = (int)alpha.letters.size();
    std::atomic<bool> ok{true};
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
        if (!ok.load(std::memory_order_relaxed)) continue;
        for (int j = i + 1; j < n; ++j)
            if (scode_edge(ft, alpha, i, j) != eval.graph.has_edge(i, j)) {
                ok.store(false, std::memory_order_relaxed);
                break;
            }
    }
    return ok.load();
}

} // namespace lrw
