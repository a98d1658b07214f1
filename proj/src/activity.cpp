#include "lrw/activity.hpp"

#include <algorithm>
#include <stdexcept>

namespace lrw {

NeighborBases neighbor_bases(const OrderedGraph& og) {
    const int n = og.n();
    NeighborBases nb;
    nb.n = n;
    nb.basis.resize(n);
    nb.basis_mask.assign(n, BitVec(std::max(n, 1)));
    nb.expr.resize(n);
    std::vector<BitVec> rows(n);
    for (int p = 0; p < n; ++p) rows[p] = og.adj_at(p);

    for (int t = 0; t < n; ++t) {
        Gf2Basis basis(n, /*track_combos=*/true);
        nb.expr[t].resize(t + 1);
        for (int v = 0; v <= t; ++v) {
            BitVec fut = rows[v];
            fut.keep_above(t);
            if (basis.insert(fut, (uint32_t)v)) {
                nb.basis[t].push_back(v);
                nb.basis_mask[t].set(v);
            } else {
                auto tags = basis.express(fut);
                // fut is in the span of the rows inserted so far (all < v)
                nb.expr[t][v].assign(tags->begin(), tags->end());
                std::sort(nb.expr[t][v].begin(), nb.expr[t][v].end());
            }
        }
        nb.width = std::max(nb.width, (int)nb.basis[t].size());
    }
    return nb;
}

ActivityIndex activity_index(const OrderedGraph& og, const NeighborBases& nb) {
    const int n = og.n();
    ActivityIndex ai;
    ai.n = n;
    ai.tau.resize(n);
    ai.active.resize(n);
    ai.f0.resize(n);
    for (int v = 0; v < n; ++v) {
        int t = v;
        while (t < n && nb.in_basis(t, v)) ++t;
        if (t == n)
            throw std::logic_error("activity_index: tau undefined; B at the last position must be empty");
        ai.tau[v] = t;
        ai.active[v] = t > v;
        ai.f0[v] = nb.expr[t][v];
        // eq (interval): a nonempty F_0(v) sits strictly below v and outlives tau(v)
        if (!ai.f0[v].empty()) {
            int mx = ai.f0[v].back();
            if (!(mx < v))
                throw std::logic_error("activity_index: max F_0(v) < v violated");
        }
    }
    return ai;
}

namespace {

int tau_of(const ActivityIndex& ai, const std::vector<int>& set) {
    int t = ai.n; // convention for the empty set
    for (int v : set) t = std::min(t, ai.tau[v]);
    return t;
}

std::vector<int> sym_diff(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    return out;
}

} // namespace

int FTree::node_id(const std::vector<int>& sorted_set) const {
    auto it = index.find(sorted_set);
    return it == index.end() ? -1 : it->second;
}

FTree f_tree(const OrderedGraph& og, const ActivityIndex& ai, std::size_t budget) {
    const int n = og.n();
    FTree ft;
    auto add_node = [&](std::vector<int> set) -> int {
        auto it = ft.index.find(set);
        if (it != ft.index.end()) return it->second;
        int id = (int)ft.nodes.size();
        ft.index.emplace(set, id);
        ft.tau_set.push_back(tau_of(ai, set));
        ft.max_set.push_back(set.empty() ? -1 : set.back());
        ft.nodes.push_back(std::move(set));
        ft.f.push_back(-1);
        return id;
    };

    add_node({}); // root, id 0
    ft.singleton.resize(n);
    for (int v = 0; v < n; ++v) ft.singleton[v] = add_node({v});

    // All active sets: M with max M = m is {m} plus any subset of
    // { u in B_m : u < m }, provided m itself is active.
    std::size_t estimate = 0;
    // membership u in B_m for u <= m is equivalent to tau(u) > m
    std::vector<std::vector<int>> below(n);
    for (int m = 0; m < n && estimate <= budget; ++m) {
        if (!ai.active[m]) continue;
        for (int u = 0; u < m; ++u)
            if (ai.tau[u] > m) below[m].push_back(u);
        if (below[m].size() < 63)
            estimate += std::size_t(1) << below[m].size();
        else
            estimate = budget + 1;
    }
    ft.complete = estimate <= budget;
    if (ft.complete) {
        for (int m = 0; m < n; ++m) {
            if (!ai.active[m]) continue;
            const auto& cand = below[m];
            std::size_t subsets = std::size_t(1) << cand.size();
            for (std::size_t mask = 0; mask < subsets; ++mask) {
                std::vector<int> set;
                for (std::size_t i = 0; i < cand.size(); ++i)
                    if (mask & (std::size_t(1) << i)) set.push_back(cand[i]);
                set.push_back(m);
                add_node(std::move(set));
            }
        }
    }

    // F on every node; closure inserts any image not yet present.
    for (std::size_t id = 0; id < ft.nodes.size(); ++id) {
        if (ft.nodes[id].empty()) {
            ft.f[id] = 0;
            continue;
        }
        const auto& set = ft.nodes[id];
        int t = ft.tau_set[id];
        int pivot = -1;
        for (int v : set)
            if (ai.tau[v] == t) {
                if (pivot != -1)
                    throw std::logic_error("f_tree: two members share tau(M); contradicts tau injectivity on active vertices");
                pivot = v;
            }
        std::vector<int> image = sym_diff(set, sym_diff({pivot}, ai.f0[pivot]));
        bool multi = set.size() > 1;
        int img_id = add_node(std::move(image));
        ft.f[id] = img_id;
        // Lemma claim:tauinc; inactive singletons only reach "max M <= tau(M)"
        // per eq. (interval), active sets get the strict middle inequality
        if (img_id != 0 && !ft.nodes[img_id].empty()) {
            bool mid = multi ? ft.max_set[id] < t : ft.max_set[id] <= t;
            if (!(ft.max_set[img_id] <= ft.max_set[id] && mid &&
                  t < ft.tau_set[img_id]))
                throw std::logic_error("f_tree: tau monotonicity violated");
        }
    }
    return ft;
}

int xi(const FTree& ft, const ActivityIndex& ai, int u, int v) {
    (void)ai;
    int node = ft.singleton[u];
    int k = 0;
    while (true) {
        if (ft.nodes[node].empty()) return k;
        if (ft.max_set[node] <= v && v <= ft.tau_set[node]) return k;
        node = ft.f[node];
        ++k;
        if (k > (int)ft.size())
            throw std::logic_error("xi: F-iteration failed to reach the empty set");
    }
}

bool decode_edge(const FTree& ft, const OrderedGraph& og, int u, int v) {
    if (u == v) throw std::invalid_argument("decode_edge: u == v");
    int a = std::min(u, v), b = std::max(u, v);
    int node = ft.singleton[a];
    while (!ft.nodes[node].empty() &&
           !(ft.max_set[node] <= b && b <= ft.tau_set[node]))
        node = ft.f[node];
    // parity of adjacency between b and the members of F^xi(a)
    int par = 0;
    BitVec brow = og.adj_at(b);
    for (int x : ft.nodes[node]) par ^= (int)brow.get(x);
    return par != 0;
}

IntervalGraphH interval_graph(const OrderedGraph& og, const ActivityIndex& ai,
                              int width) {
    const int n = og.n();
    IntervalGraphH ig;
    ig.n = n;
    ig.r = width;
    ig.point_load.assign(n, 0);
    ig.gamma.assign(n, 0);
    for (int v = 0; v < n; ++v)
        for (int t = v; t <= ai.tau[v]; ++t) ++ig.point_load[t];
    for (int t = 0; t < n; ++t)
        if (ig.point_load[t] > width + 2)
            throw std::logic_error("interval_graph: point load exceeds r+2");

    // inactive vertices take color r+2; active ones are colored greedily by
    // interval start with the least free color in 1..r+1
    for (int v = 0; v < n; ++v) {
        if (!ai.active[v]) {
            ig.gamma[v] = width + 2;
            continue;
        }
        std::vector<bool> taken(width + 2, false);
        for (int u = 0; u < v; ++u)
            if (ai.active[u] && ai.tau[u] >= v) taken[ig.gamma[u]] = true;
        int c = 1;
        while (c <= width + 1 && taken[c]) ++c;
        if (c > width + 1)
            throw std::logic_error("interval_graph: active vertex needs more than r+1 colors");
        ig.gamma[v] = c;
    }
    return ig;
}

OrderPipeline build_pipeline(const OrderedGraph& og, std::size_t ftree_budget) {
    OrderPipeline p{og, {}, {}, {}, {}, 0};
    p.nb = neighbor_bases(og);
    p.width = p.nb.width;
    p.ai = activity_index(og, p.nb);
    p.ft = f_tree(og, p.ai, ftree_budget);
    p.ig = interval_graph(og, p.ai, p.width);
    return p;
}

} // namespace lrw
