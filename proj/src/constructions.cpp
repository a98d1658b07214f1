#include "lrw/constructions.hpp"

#include <algorithm>
#include <numeric>

namespace lrw {

Graph join(const Graph& g, const Graph& h) {
    std::vector<std::pair<int, int>> edges = g.edges();
    for (auto [u, v] : h.edges()) edges.emplace_back(g.n + u, g.n + v);
    for (int u = 0; u < g.n; ++u)
        for (int v = 0; v < h.n; ++v) edges.emplace_back(u, g.n + v);
    return make_graph(g.n + h.n, edges);
}

LexProduct lex_product(const Graph& g, const Graph& h,
                       const std::optional<OrderedGraph>& og,
                       const std::optional<OrderedGraph>& oh,
                       int width_check_cap) {
    if (og && og->graph.n != g.n)
        throw std::invalid_argument("lex_product: order does not fit g");
    if (oh && oh->graph.n != h.n)
        throw std::invalid_argument("lex_product: order does not fit h");
    const int n = g.n * h.n;
    std::vector<std::pair<int, int>> edges;
    for (auto [u, up] : g.edges())
        for (int v = 0; v < h.n; ++v)
            for (int vp = 0; vp < h.n; ++vp)
                edges.emplace_back(u * h.n + v, up * h.n + vp);
    for (int u = 0; u < g.n; ++u)
        for (auto [v, vp] : h.edges())
            edges.emplace_back(u * h.n + v, u * h.n + vp);
    Graph prod = make_graph(n, edges);

    std::vector<int> gord(g.n), hord(h.n);
    if (og) gord = og->order; else std::iota(gord.begin(), gord.end(), 0);
    if (oh) hord = oh->order; else std::iota(hord.begin(), hord.end(), 0);
    std::vector<int> ord;
    ord.reserve(n);
    for (int gu : gord)
        for (int hv : hord) ord.push_back(gu * h.n + hv);
    OrderedGraph oprod(prod, ord);

    if (og && oh && n <= width_check_cap && n > 0) {
        // the composed order satisfies width <= w(og) + w(oh) + 1; the +1
        // covers the cross edges into the remainder of the current block
        // (a single extra vector per cut). Plain w(og)+w(oh) is not an
        // invariant: K3 . 2K1 is the octahedron, of linear rankwidth 2.
        int wg = order_width(*og).width;
        int wh = order_width(*oh).width;
        int wp = order_width(oprod).width;
        if (wp > wg + wh + 1)
            throw std::logic_error("lex_product: composed order width exceeds factor sum + 1");
    }
    return {std::move(prod), std::move(oprod)};
}

LexProduct iterated_lex(const Graph& g, int m, int max_vertices) {
    if (m < 1) throw std::invalid_argument("iterated_lex: m >= 1 required");
    double size = g.n;
    for (int i = 1; i < m; ++i) {
        size *= g.n;
        if (size > max_vertices)
            throw SizeCapError("iterated_lex: vertex budget exceeded");
    }
    LexProduct acc{g, identity_order(g)};
    for (int i = 1; i < m; ++i)
        acc = lex_product(acc.graph, g, acc.ordered, identity_order(g));
    return acc;
}

Graph half_graph(int l) {
    if (l < 1) throw std::invalid_argument("half_graph: l >= 1 required");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= l; ++i)
        for (int j = i; j <= l; ++j) edges.emplace_back(i - 1, l + j - 1);
    return make_graph(2 * l, edges);
}

LozinGraph lozin(int a, int m, bool tilde) {
    if (a < 1 || m < 1) throw std::invalid_argument("lozin: a, m >= 1 required");
    LozinGraph lg;
    lg.a = a;
    lg.m = m;
    std::vector<std::pair<int, int>> edges;
    // v_{i,j} ~ v_{i+1,j'} iff j' <= j
    for (int i = 1; i < a; ++i)
        for (int j = 1; j <= m; ++j)
            for (int jp = 1; jp <= j; ++jp)
                edges.emplace_back(lg.vid(i, j), lg.vid(i + 1, jp));
    if (tilde)
        for (int i = 1; i <= a; ++i)
            for (int j = 1; j <= m; ++j)
                for (int jp = j + 1; jp <= m; ++jp)
                    edges.emplace_back(lg.vid(i, j), lg.vid(i, jp));
    lg.graph = make_graph(a * m, edges);
    // canonical order: v_{i,j} < v_{i',j'} iff j < j' or (j = j' and i < i')
    std::vector<int> ord;
    for (int j = 1; j <= m; ++j)
        for (int i = 1; i <= a; ++i) ord.push_back(lg.vid(i, j));
    lg.ordered = OrderedGraph(lg.graph, ord);
    return lg;
}

bool check_semi_induced(const Graph& g, const SemiInducedWitness& w) {
    if (w.a.size() != w.b.size()) return false;
    const int l = (int)w.a.size();
    std::vector<int> all;
    all.insert(all.end(), w.a.begin(), w.a.end());
    all.insert(all.end(), w.b.begin(), w.b.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            if (g.has_edge(w.a[i], w.b[j]) != (i <= j)) return false;
    return true;
}

namespace {

bool extend_half(const Graph& g, int l, std::vector<int>& a, std::vector<int>& b,
                 std::vector<bool>& used) {
    // a and b are grown together: a_1, b_1, a_2, b_2, ...
    if ((int)a.size() == l && (int)b.size() == l) return true;
    bool grow_a = a.size() == b.size();
    int idx = grow_a ? (int)a.size() : (int)b.size();
    for (int v = 0; v < g.n; ++v) {
        if (used[v]) continue;
        bool ok = true;
        if (grow_a) {
            // a_{idx+1}: adjacency to all chosen b_j: edge iff idx+1 <= j
            for (int j = 0; j < (int)b.size() && ok; ++j)
                ok = g.has_edge(v, b[j]) == (idx <= j);
        } else {
            for (int i = 0; i < (int)a.size() && ok; ++i)
                ok = g.has_edge(a[i], v) == (i <= idx);
        }
        if (!ok) continue;
        used[v] = true;
        if (grow_a) a.push_back(v); else b.push_back(v);
        if (extend_half(g, l, a, b, used)) return true;
        if (grow_a) a.pop_back(); else b.pop_back();
        used[v] = false;
    }
    return false;
}

} // namespace

std::optional<SemiInducedWitness> find_semi_induced_half_graph(const Graph& g, int l) {
    if (l < 1) throw std::invalid_argument("find_semi_induced_half_graph: l >= 1");
    if (l > 3 || g.n > 14)
        throw SizeCapError("find_semi_induced_half_graph: capped at l <= 3, n <= 14");
    std::vector<int> a, b;
    std::vector<bool> used(g.n, false);
    if (extend_half(g, l, a, b, used)) {
        SemiInducedWitness w{a, b};
        if (!check_semi_induced(g, w))
            throw std::logic_error("find_semi_induced_half_graph: witness failed validation");
        return w;
    }
    return std::nullopt;
}

namespace {

bool extend_iso(const Graph& g, const std::vector<int>& verts, const Graph& pat,
                std::vector<int>& img, std::vector<bool>& used) {
    int k = (int)img.size();
    if (k == pat.n) return true;
    for (std::size_t c = 0; c < verts.size(); ++c) {
        if (used[c]) continue;
        int v = verts[c];
        bool ok = true;
        for (int i = 0; i < k && ok; ++i)
            ok = g.has_edge(img[i], v) == pat.has_edge(i, k);
        if (!ok) continue;
        used[c] = true;
        img.push_back(v);
        if (extend_iso(g, verts, pat, img, used)) return true;
        img.pop_back();
        used[c] = false;
    }
    return false;
}

} // namespace

bool has_induced_copy_in(const Graph& g, const std::vector<int>& verts,
                         const Graph& pattern) {
    if (pattern.n == 0) return true;
    if ((int)verts.size() < pattern.n) return false;
    std::vector<int> img;
    std::vector<bool> used(verts.size(), false);
    return extend_iso(g, verts, pattern, img, used);
}

bool has_induced_copy(const Graph& g, const Graph& pattern) {
    std::vector<int> verts(g.n);
    std::iota(verts.begin(), verts.end(), 0);
    return has_induced_copy_in(g, verts, pattern);
}

RamseyReport ramsey_check(const Graph& g, int m, uint64_t max_colorings) {
    if (m < 1 || m > 3) throw SizeCapError("ramsey_check: m <= 3 required");
    auto prod = iterated_lex(g, m);
    const int np = prod.graph.n;
    double total = 1;
    for (int i = 0; i < np; ++i) {
        total *= m;
        if (total > (double)max_colorings)
            throw SizeCapError("ramsey_check: coloring budget exceeded");
    }
    RamseyReport rep;
    std::vector<int> coloring(np, 0);
    uint64_t count = (uint64_t)total;
    for (uint64_t code = 0; code < count; ++code) {
        uint64_t c = code;
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
        ++rep.colorings_checked;
        if (!found) {
            rep.ok = false;
            rep.failing_coloring = coloring;
            return rep;
        }
    }
    rep.ok = true;
    return rep;
}

} // namespace lrw
