#include "lrw/nlc.hpp"
#include "lrw/oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace lrw {

namespace {

// Builder for Ramseyan factorization trees. Works over sequences of already
// built subtrees ("items"); every created node is validated on the spot.
struct SimonBuilder {
    const GammaK& gk;
    std::vector<FactorizationTree::Node>& nodes;
    std::vector<int> below; // subtree depth per node, leaves = 1

    struct Item {
        int node;
        int value;
    };
    using Seq = std::vector<Item>;

    int depth_below(int node) const { return below[node]; }

    int make_node(const std::vector<int>& children) {
        if (children.size() == 1) return children[0];
        if (children.size() < 2) throw std::logic_error("simon: empty node");
        int value = nodes[children[0]].value;
        bool all_equal = true;
        int deep = 0;
        for (std::size_t i = 0; i < children.size(); ++i) {
            if (i > 0) {
                if (nodes[children[i]].value != value) all_equal = false;
                value = gk.compose(value, nodes[children[i]].value);
            }
            deep = std::max(deep, below[children[i]]);
        }
        if (children.size() > 2) {
            int v0 = nodes[children[0]].value;
            if (!all_equal || !gk.idempotent(v0))
                throw std::logic_error("simon: wide node without a common idempotent");
        }
        FactorizationTree::Node nd;
        nd.children = children;
        nd.lo = nodes[children.front()].lo;
        nd.hi = nodes[children.back()].hi;
        nd.value = value;
        int id = (int)nodes.size();
        nodes.push_back(std::move(nd));
        below.push_back(deep + 1);
        return id;
    }

    // balanced binary combination when it beats the structured tree; any
    // binary node is unconditionally Ramseyan
    int pick_shallower(int structured, const Seq& items) {
        int tallest = 0;
        for (const auto& it : items) tallest = std::max(tallest, below[it.node]);
        int comb_depth = tallest;
        for (std::size_t m = 1; m < items.size(); m <<= 1) ++comb_depth;
        if (comb_depth < below[structured]) return comb(items, 0, items.size());
        return structured;
    }

    int product(const Seq& items, std::size_t lo, std::size_t hi) {
        int v = items[lo].value;
        for (std::size_t i = lo + 1; i < hi; ++i) v = gk.compose(v, items[i].value);
        return v;
    }

    Item fold(const Seq& items) {
        int node = build(items);
        return {node, nodes[node].value};
    }

    // balanced binary combination; any binary node is Ramseyan
    int comb(const Seq& items, std::size_t lo, std::size_t hi) {
        if (hi - lo == 1) return items[lo].node;
        std::size_t mid = lo + (hi - lo) / 2;
        return make_node({comb(items, lo, mid), comb(items, mid, hi)});
    }

    // collapse idempotent-value runs of length >= 3 into one wide node; all
    // other repeats are left flat (a run of a non-idempotent folds through
    // the identity cuts of group_build, or drops a J-class and chunks)
    Seq compress(Seq items) {
        bool changed = true;
        while (changed) {
            changed = false;
            Seq out;
            std::size_t i = 0;
            while (i < items.size()) {
                std::size_t j = i + 1;
                while (j < items.size() && items[j].value == items[i].value) ++j;
                if (j - i >= 3 && gk.idempotent(items[i].value)) {
                    std::vector<int> ch;
                    for (std::size_t t = i; t < j; ++t) ch.push_back(items[t].node);
                    int node = make_node(ch);
                    out.push_back({node, nodes[node].value});
                    changed = true;
                } else {
                    for (std::size_t t = i; t < j; ++t) out.push_back(items[t]);
                }
                i = j;
            }
            items = std::move(out);
        }
        return items;
    }

    int build(const Seq& raw) {
        Seq items = compress(raw);
        std::size_t n = items.size();
        if (n == 1) return items[0].node;
        if (n == 2) return make_node({items[0].node, items[1].node});

        std::vector<int> values;
        for (const auto& it : items) values.push_back(it.value);
        SubSemigroup S = generated_subsemigroup(gk, values);

        if (S.is_group) return pick_shallower(group_build(items, S), items);

        // J-classes of the item values, relative to S
        std::vector<int> jcs;
        for (const auto& it : items) jcs.push_back(S.jclass[S.index_of(it.value)]);
        std::vector<int> distinct = jcs;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

        if (distinct.size() == 1)
            return pick_shallower(jc_build(items, S, distinct[0]), items);

        // pick a maximal class among the item classes
        int jc = -1;
        for (int cand : distinct) {
            bool maximal = true;
            for (int other : distinct)
                if (other != cand && S.j_below[cand][other]) maximal = false;
            if (maximal) {
                jc = cand;
                break;
            }
        }

        // glue each maximal jc-run onto the following low item; the products
        // leave jc, so the recursion runs on a strictly smaller subsemigroup
        Seq paired;
        std::size_t i = 0;
        while (i < n) {
            if (jcs_of(items[i], S) != jc) {
                paired.push_back(items[i]);
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < n && jcs_of(items[j], S) == jc) ++j;
            Seq run(items.begin() + i, items.begin() + j);
            int run_node = jc_build(run, S, jc);
            if (j < n) {
                int node = make_node({run_node, items[j].node});
                paired.push_back({node, nodes[node].value});
                i = j + 1;
            } else {
                // trailing run: attach to everything before it
                Item rest = fold(paired);
                return pick_shallower(make_node({rest.node, run_node}), items);
            }
        }
        return pick_shallower(build(paired), items);
    }

    int jcs_of(const Item& it, const SubSemigroup& S) {
        return S.jclass[S.index_of(it.value)];
    }

    // all item values in J-class jc of S: chop into minimal chunks whose
    // product falls out of jc; chunk interiors are jc-smooth
    int jc_build(const Seq& items, const SubSemigroup& S, int jc) {
        std::size_t n = items.size();
        if (n == 1) return items[0].node;
        {
            std::vector<int> values;
            for (const auto& it : items) values.push_back(it.value);
            SubSemigroup local = generated_subsemigroup(gk, values);
            if (local.is_group) return pick_shallower(group_build(items, local), items);
        }
        auto in_jc = [&](int val) {
            int idx = S.index_of(val);
            return idx >= 0 && S.jclass[idx] == jc;
        };
        Seq chunks;
        Seq cur;
        int prod = -1;
        for (std::size_t i = 0; i < n; ++i) {
            prod = cur.empty() ? items[i].value : gk.compose(prod, items[i].value);
            cur.push_back(items[i]);
            if (!in_jc(prod)) {
                int interior = -1;
                if (cur.size() > 1) {
                    Seq head(cur.begin(), cur.end() - 1);
                    interior = smooth_build(head, S, jc);
                }
                int node = interior == -1
                               ? cur.back().node
                               : make_node({interior, cur.back().node});
                chunks.push_back({node, nodes[node].value});
                cur.clear();
            }
        }
        if (chunks.empty()) return smooth_build(cur, S, jc);
        int core = chunks.size() == 1 ? chunks[0].node : build(chunks);
        if (cur.empty()) return core;
        int tail = smooth_build(cur, S, jc);
        return make_node({core, tail});
    }

    // all item values in jc and all prefix products stay in jc; label every
    // cut by (L-class of the prefix, R-class of the next value) and split at
    // the most frequent label; blocks between equal labels multiply inside
    // one H-class, which is a group
    int smooth_build(const Seq& items, const SubSemigroup& S, int jc) {
        std::size_t n = items.size();
        if (n == 1) return items[0].node;
        if (n == 2) return make_node({items[0].node, items[1].node});
        {
            // one H-class (e.g. a unit run) needs none of the label splitting
            std::vector<int> values;
            for (const auto& it : items) values.push_back(it.value);
            SubSemigroup local = generated_subsemigroup(gk, values);
            if (local.is_group) return pick_shallower(group_build(items, local), items);
        }

        std::vector<std::pair<int, int>> label(n - 1); // cut after item t
        int prefix = items[0].value;
        for (std::size_t t = 0; t + 1 < n; ++t) {
            if (t > 0) prefix = gk.compose(prefix, items[t].value);
            int pi = S.index_of(prefix);
            int ni = S.index_of(items[t + 1].value);
            if (pi < 0 || ni < 0 || S.jclass[pi] != jc)
                throw std::logic_error("simon: smooth_build precondition violated");
            label[t] = {S.lclass[pi], S.rclass[ni]};
        }
        std::map<std::pair<int, int>, std::vector<std::size_t>> where;
        for (std::size_t t = 0; t + 1 < n; ++t) where[label[t]].push_back(t);

        // cuts whose prefix value is one fixed idempotent e: the leading part
        // and every block between them multiply to e, one wide node over all
        {
            std::map<int, std::vector<std::size_t>> ecuts;
            int q = items[0].value;
            for (std::size_t t = 0; t + 1 < n; ++t) {
                if (t > 0) q = gk.compose(q, items[t].value);
                if (gk.idempotent(q)) ecuts[q].push_back(t);
            }
            const std::vector<std::size_t>* bestc = nullptr;
            int beste = -1;
            for (auto& [e, cuts] : ecuts)
                if (!bestc || cuts.size() > bestc->size()) {
                    bestc = &cuts;
                    beste = e;
                }
            if (bestc && !bestc->empty()) {
                std::vector<Seq> parts;
                std::size_t start = 0;
                bool values_ok = true;
                for (std::size_t c : *bestc) {
                    parts.emplace_back(items.begin() + start, items.begin() + c + 1);
                    start = c + 1;
                }
                for (auto& p : parts) {
                    int prod = p[0].value;
                    for (std::size_t i = 1; i < p.size(); ++i)
                        prod = gk.compose(prod, p[i].value);
                    if (prod != beste) values_ok = false;
                }
                if (values_ok) {
                    Seq post(items.begin() + start, items.end());
                    std::vector<int> ch;
                    for (auto& p : parts) ch.push_back(smooth_build(p, S, jc));
                    int core = ch.size() == 1 ? ch[0] : make_node(ch);
                    int whole = post.empty()
                                    ? core
                                    : make_node({core, smooth_build(post, S, jc)});
                    return pick_shallower(whole, items);
                }
            }
        }

        auto best = where.begin();
        for (auto it = where.begin(); it != where.end(); ++it)
            if (it->second.size() > best->second.size()) best = it;

        if (best->second.size() < 2) {
            // all labels distinct: halve
            std::size_t mid = n / 2;
            Seq left(items.begin(), items.begin() + mid);
            Seq right(items.begin() + mid, items.end());
            return make_node({smooth_build(left, S, jc), smooth_build(right, S, jc)});
        }

        const auto& cuts = best->second;
        Seq pre(items.begin(), items.begin() + cuts.front() + 1);
        Seq post(items.begin() + cuts.back() + 1, items.end());
        Seq mids;
        for (std::size_t ci = 0; ci + 1 < cuts.size(); ++ci) {
            Seq mid(items.begin() + cuts[ci] + 1, items.begin() + cuts[ci + 1] + 1);
            int node = smooth_build(mid, S, jc);
            mids.push_back({node, nodes[node].value});
        }
        int mid_core = group_seq(mids);
        int left = make_node({smooth_build(pre, S, jc), mid_core});
        int whole = post.empty() ? left : make_node({left, smooth_build(post, S, jc)});
        return pick_shallower(whole, items);
    }

    // combine a sequence whose values generate a group
    int group_seq(Seq items) {
        std::size_t n = items.size();
        if (n == 1) return items[0].node;
        std::vector<int> values;
        for (const auto& it : items) values.push_back(it.value);
        SubSemigroup G = generated_subsemigroup(gk, values);
        return group_build(items, G);
    }

    int group_build(const Seq& items, const SubSemigroup& G) {
        std::size_t n = items.size();
        if (n == 1) return items[0].node;
        if (n == 2) return make_node({items[0].node, items[1].node});

        int e = -1; // identity of the group = its unique idempotent
        for (std::size_t i = 0; i < G.elements.size(); ++i)
            if (G.is_idem[i]) e = G.elements[i];
        if (e == -1) throw std::logic_error("simon: group without idempotent");

        bool all_e = true;
        for (const auto& it : items)
            if (it.value != e) all_e = false;
        if (all_e) {
            std::vector<int> ch;
            for (const auto& it : items) ch.push_back(it.node);
            return make_node(ch);
        }

        // prefix values at proper cuts
        std::vector<int> q(n);
        q[0] = items[0].value;
        for (std::size_t i = 1; i < n; ++i) q[i] = gk.compose(q[i - 1], items[i].value);
        std::map<int, std::vector<std::size_t>> occ; // value -> proper cut list
        for (std::size_t t = 0; t + 1 < n; ++t) occ[q[t]].push_back(t);

        std::vector<std::size_t> cuts;
        if (occ.count(e)) {
            cuts = occ[e];
        } else {
            auto best = occ.begin();
            for (auto it = occ.begin(); it != occ.end(); ++it)
                if (it->second.size() > best->second.size()) best = it;
            cuts = best->second;
        }
        bool splitting_at_e = occ.count(e) > 0;

        // parts: [0..cuts0], (cuts0..cuts1], ..., (cutsLast..n)
        std::vector<Seq> parts;
        std::size_t start = 0;
        for (std::size_t c : cuts) {
            parts.emplace_back(items.begin() + start, items.begin() + c + 1);
            start = c + 1;
        }
        Seq tail(items.begin() + start, items.end());

        std::vector<int> part_nodes;
        for (auto& p : parts) part_nodes.push_back(group_build(p, G));

        int core;
        if (splitting_at_e) {
            // every part multiplies to e
            core = part_nodes.size() == 1 ? part_nodes[0] : make_node(part_nodes);
        } else {
            // first part has value g, the others multiply to e
            int head = part_nodes[0];
            if (part_nodes.size() > 1) {
                std::vector<int> mids(part_nodes.begin() + 1, part_nodes.end());
                int mid_core = mids.size() == 1 ? mids[0] : make_node(mids);
                core = make_node({head, mid_core});
            } else {
                core = head;
            }
        }
        int whole = tail.empty() ? core : make_node({core, group_build(tail, G)});
        return pick_shallower(whole, items);
    }
};

} // namespace

int FactorizationTree::lca(int na, int nb) const {
    while (na != nb) {
        if (depth_of[na] >= depth_of[nb])
            na = nodes[na].parent;
        else
            nb = nodes[nb].parent;
    }
    return na;
}

int FactorizationTree::child_towards(int anc, int nd) const {
    int cur = nd;
    while (nodes[cur].parent != anc) cur = nodes[cur].parent;
    return cur;
}

FactorizationTree simon_factorize(const NlcExpression& alpha) {
    validate_expression(alpha);
    if (alpha.k > 4)
        throw SizeCapError("simon_factorize: k <= 4 (k <= 3 supported, 4 best-effort)");
    GammaK gk(alpha.k);
    FactorizationTree ft;
    ft.k = alpha.k;
    const int n = (int)alpha.letters.size();

    SimonBuilder::Seq items;
    for (int i = 0; i < n; ++i) {
        FactorizationTree::Node leaf;
        leaf.lo = i;
        leaf.hi = i + 1;
        leaf.letter = i;
        leaf.value = gk.encode(alpha.letters[i].r);
        ft.nodes.push_back(leaf);
        items.push_back({i, ft.nodes[i].value});
    }
    SimonBuilder builder{gk, ft.nodes, std::vector<int>(ft.nodes.size(), 1)};
    ft.root = builder.build(items);

    // parents, depths, kappa
    ft.depth_of.assign(ft.nodes.size(), 0);
    ft.leaf_of.assign(n, -1);
    std::vector<int> stack{ft.root};
    ft.nodes[ft.root].parent = -1;
    ft.depth_of[ft.root] = 1;
    ft.depth = 1;
    while (!stack.empty()) {
        int id = stack.back();
        stack.pop_back();
        auto& nd = ft.nodes[id];
        if (nd.leaf()) ft.leaf_of[nd.letter] = id;
        for (std::size_t ci = 0; ci < nd.children.size(); ++ci) {
            int ch = nd.children[ci];
            ft.nodes[ch].parent = id;
            ft.nodes[ch].kappa = 1 + (int)(ci % 2);
            ft.depth_of[ch] = ft.depth_of[id] + 1;
            ft.depth = std::max(ft.depth, ft.depth_of[ch]);
            stack.push_back(ch);
        }
    }
    ft.nodes[ft.root].kappa = 1;

    for (int i = 0; i < n; ++i)
        if (ft.leaf_of[i] == -1)
            throw std::logic_error("simon_factorize: tree does not cover the word");

    int bound = 3 * gk.size();
    if (ft.depth > bound)
        throw std::logic_error("simon_factorize: depth " + std::to_string(ft.depth) +
                               " exceeds 3|T| = " + std::to_string(bound));
    return ft;
}

bool is_ramseyan(const FactorizationTree& ft, const GammaK& gk,
                 const NlcExpression& alpha, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    // leaves read the word left to right
    std::vector<int> leaves;
    std::vector<int> stack{ft.root};
    while (!stack.empty()) {
        int id = stack.back();
        stack.pop_back();
        const auto& nd = ft.nodes[id];
        if (nd.leaf()) {
            leaves.push_back(nd.letter);
            continue;
        }
        for (auto it = nd.children.rbegin(); it != nd.children.rend(); ++it)
            stack.push_back(*it);
    }
    if ((int)leaves.size() != (int)alpha.letters.size())
        return fail("leaf count mismatch");
    for (std::size_t i = 0; i < leaves.size(); ++i)
        if (leaves[i] != (int)i) return fail("leaves out of order");
    // node conditions and values
    for (std::size_t id = 0; id < ft.nodes.size(); ++id) {
        const auto& nd = ft.nodes[id];
        if (nd.leaf()) {
            if (nd.value != gk.encode(alpha.letters[nd.letter].r))
                return fail("leaf value mismatch");
            continue;
        }
        if (nd.children.size() < 2) return fail("internal node with < 2 children");
        int prod = ft.nodes[nd.children[0]].value;
        for (std::size_t i = 1; i < nd.children.size(); ++i)
            prod = gk.compose(prod, ft.nodes[nd.children[i]].value);
        if (prod != nd.value) return fail("node value is not the product of children");
        if (nd.children.size() > 2) {
            int v0 = ft.nodes[nd.children[0]].value;
            if (!gk.idempotent(v0)) return fail("wide node child value not idempotent");
            for (int ch : nd.children)
                if (ft.nodes[ch].value != v0)
                    return fail("wide node children values differ");
        }
    }
    return true;
}

namespace {

// color of letter z after processing letters [z..hi)
int col_after(const GammaK& gk, const NlcExpression& alpha, int z, int hi) {
    int c = alpha.letters[z].c;
    for (int i = z; i < hi; ++i) c = gk.apply(gk.encode(alpha.letters[i].r), c);
    return c;
}

// recoloring accumulated over letters [lo..z)
int recol_range(const GammaK& gk, const NlcExpression& alpha, int lo, int z) {
    int f = gk.identity();
    for (int i = lo; i < z; ++i)
        f = gk.compose(f, gk.encode(alpha.letters[i].r));
    return f;
}

} // namespace

bool scode_edge(const FactorizationTree& ft, const NlcExpression& alpha,
                int z1, int z2) {
    if (!(z1 < z2)) throw std::invalid_argument("scode_edge: needs z1 before z2");
    GammaK gk(alpha.k);
    int beta = ft.lca(ft.leaf_of[z1], ft.leaf_of[z2]);
    int d1 = ft.child_towards(beta, ft.leaf_of[z1]);
    int d2 = ft.child_towards(beta, ft.leaf_of[z2]);
    const auto& ch = ft.nodes[beta].children;
    std::size_t i1 = std::find(ch.begin(), ch.end(), d1) - ch.begin();
    std::size_t i2 = std::find(ch.begin(), ch.end(), d2) - ch.begin();
    bool consecutive = i1 + 1 == i2;
    int col = consecutive ? col_after(gk, alpha, z1, ft.nodes[d1].hi)
                          : col_after(gk, alpha, z1, ft.nodes[beta].hi);
    int recol = recol_range(gk, alpha, ft.nodes[d2].lo, z2);
    int at_arrival = gk.apply(recol, col);
    return (alpha.letters[z2].e >> at_arrival) & 1;
}

namespace {

// prefix[i] = product of children[0..i) values, suffix[i] = children[i..) product
struct ChildProducts {
    std::vector<std::vector<int>> prefix, suffix;

    ChildProducts(const FactorizationTree& ft, const GammaK& gk) {
        prefix.resize(ft.nodes.size());
        suffix.resize(ft.nodes.size());
        for (std::size_t id = 0; id < ft.nodes.size(); ++id) {
            const auto& ch = ft.nodes[id].children;
            if (ch.empty()) continue;
            auto& pre = prefix[id];
            auto& suf = suffix[id];
            pre.resize(ch.size() + 1);
            suf.resize(ch.size() + 1);
            pre[0] = gk.identity();
            for (std::size_t i = 0; i < ch.size(); ++i)
                pre[i + 1] = gk.compose(pre[i], ft.nodes[ch[i]].value);
            suf[ch.size()] = gk.identity();
            for (std::size_t i = ch.size(); i-- > 0;)
                suf[i] = gk.compose(ft.nodes[ch[i]].value, suf[i + 1]);
        }
    }
};

// child index of `child` within `parent`
std::size_t child_index(const FactorizationTree& ft, int parent, int child) {
    const auto& ch = ft.nodes[parent].children;
    return std::find(ch.begin(), ch.end(), child) - ch.begin();
}

} // namespace

Cog0Coloring cog0_coloring(const FactorizationTree& ft, const NlcExpression& alpha) {
    GammaK gk(alpha.k);
    ChildProducts cp(ft, gk);
    const int n = (int)alpha.letters.size();
    Cog0Coloring out;
    out.class_of.resize(n);
    std::map<std::vector<std::array<int, 3>>, int> intern;
    for (int z = 0; z < n; ++z) {
        // walk leaf -> root keeping col (color of z at the end of the node)
        // and recol (recoloring between the start of the node's child on the
        // path and z); build the vector leaf-first, then flip to root-first
        std::vector<std::array<int, 3>> vec;
        int node = ft.leaf_of[z];
        int col = gk.apply(ft.nodes[node].value, alpha.letters[z].c);
        int recol = gk.identity(); // the leaf's own entry uses e_z directly
        int below_ci = -1;         // index of the path child within node
        while (true) {
            int eset = 0;
            for (int c = 0; c < alpha.k; ++c)
                if ((alpha.letters[z].e >> gk.apply(recol, c)) & 1) eset |= 1 << c;
            vec.push_back({ft.nodes[node].kappa, col, eset});
            int parent = ft.nodes[node].parent;
            if (parent == -1) break;
            // recol relative to the parent spans [node.lo, z): extend by the
            // part of node before its own path child
            if (below_ci >= 0)
                recol = gk.compose(cp.prefix[node][below_ci], recol);
            std::size_t ci = child_index(ft, parent, node);
            col = gk.apply(cp.suffix[parent][ci + 1], col);
            below_ci = (int)ci;
            node = parent;
        }
        std::reverse(vec.begin(), vec.end());
        auto it = intern.find(vec);
        if (it == intern.end()) {
            int id = (int)out.classes.size();
            out.classes.push_back(vec);
            intern.emplace(std::move(vec), id);
            out.class_of[z] = id;
        } else {
            out.class_of[z] = it->second;
        }
    }
    return out;
}

Cog0Report cog0_verify(const FactorizationTree& ft, const NlcExpression& alpha,
                       const Cog0Coloring& col) {
    GammaK gk(alpha.k);
    Cog0Report rep;
    rep.class_count = col.classes.size();
    auto eval = eval_nlc(alpha);
    const int n = (int)alpha.letters.size();
    std::vector<std::vector<int>> members(col.classes.size());
    for (int z = 0; z < n; ++z) members[col.class_of[z]].push_back(z);

    int bound = 3 * gk.size();
    for (std::size_t cid = 0; cid < members.size(); ++cid) {
        const auto& mem = members[cid];
        const auto& vec = col.classes[cid];
        int height = 0;
        for (int z : mem) height = std::max(height, ft.depth_of[ft.leaf_of[z]]);
        rep.max_height = std::max(rep.max_height, height);
        if (height > bound) rep.heights_ok = false;
        if (mem.size() < 2) continue;

        // class members never sit in consecutive children of their meet
        // (the kappa component forces it); verified directly
        std::map<int, std::vector<int>> childset;
        bool kappa_ok = true;
        for (int z : mem)
            for (int nd = ft.leaf_of[z]; ft.nodes[nd].parent != -1;
                 nd = ft.nodes[nd].parent)
                childset[ft.nodes[nd].parent].push_back(
                    (int)child_index(ft, ft.nodes[nd].parent, nd));
        for (auto& [node, cis] : childset) {
            std::sort(cis.begin(), cis.end());
            cis.erase(std::unique(cis.begin(), cis.end()), cis.end());
            for (std::size_t i = 0; i + 1 < cis.size(); ++i)
                if (cis[i + 1] == cis[i] + 1) kappa_ok = false;
        }
        if (!kappa_ok) {
            rep.marks_ok = false;
            rep.all_p4_free = false;
            continue;
        }

        // adjacency inside the class must follow the join/union decision of
        // the meet node, read off the shared vector: join iff col in eset
        BitVec memmask(n);
        for (int z : mem) memmask.set(z);
        bool consistent = true;
        for (int y : mem) {
            BitVec expected(n);
            int nd = ft.leaf_of[y];
            while (ft.nodes[nd].parent != -1) {
                int parent = ft.nodes[nd].parent;
                int d = ft.depth_of[parent]; // vector index d-1
                bool join = (vec[d - 1][2] >> vec[d - 1][1]) & 1;
                if (join) {
                    expected.set_range(ft.nodes[parent].lo, ft.nodes[nd].lo);
                    expected.set_range(ft.nodes[nd].hi, ft.nodes[parent].hi);
                }
                nd = parent;
            }
            expected.mask_and(memmask);
            BitVec actual = eval.graph.adj[y];
            actual.mask_and(memmask);
            if (!(expected == actual)) consistent = false;
        }
        if (!consistent) rep.marks_ok = false;
        // a consistent cotree certifies the class is a cograph; small classes
        // get the independent P4 scan on top
        bool p4free = consistent;
        if (mem.size() <= 64) p4free = is_cograph(eval.graph.induced(mem)).is_cograph;
        if (!p4free) rep.all_p4_free = false;
    }
    return rep;
}

std::optional<SemiInducedWitness> find_half_graph_pattern_in_tree(
    const FactorizationTree& ft, const NlcExpression& alpha, int l) {
    if (l < 1) throw std::invalid_argument("find_half_graph_pattern_in_tree: l >= 1");
    GammaK gk(alpha.k);
    auto eval = eval_nlc(alpha);

    for (std::size_t beta = 0; beta < ft.nodes.size(); ++beta) {
        const auto& nd = ft.nodes[beta];
        if (nd.leaf() || nd.children.size() < 2) continue;
        // per child, the (col, eset) profiles present, with one witness letter
        int nch = (int)nd.children.size();
        std::vector<std::map<std::pair<int, int>, int>> prof(nch);
        for (int ci = 0; ci < nch; ++ci) {
            int child = nd.children[ci];
            for (int z = ft.nodes[child].lo; z < ft.nodes[child].hi; ++z) {
                int colv = col_after(gk, alpha, z, nd.hi);
                int recol = recol_range(gk, alpha, ft.nodes[child].lo, z);
                int eset = 0;
                for (int c = 0; c < alpha.k; ++c)
                    if ((alpha.letters[z].e >> gk.apply(recol, c)) & 1) eset |= 1 << c;
                prof[ci].try_emplace({colv, eset}, z);
            }
        }
        // candidate profile pairs
        for (int cx = 0; cx < alpha.k; ++cx)
            for (uint32_t ex = 0; ex < (uint32_t(1) << alpha.k); ++ex)
                for (int cy = 0; cy < alpha.k; ++cy)
                    for (uint32_t ey = 0; ey < (uint32_t(1) << alpha.k); ++ey) {
                        if (!((ey >> cx) & 1)) continue; // need c_x in e_y
                        if ((ex >> cy) & 1) continue;    // need c_y not in e_x
                        // greedy alternating scan over the children, first with
                        // gap 1 (the pattern), then thinned to gap >= 2
                        auto scan = [&](int gap) {
                            std::vector<int> xs, ys;
                            int last = -gap - 1;
                            bool want_x = true;
                            for (int ci = 0; ci < nch; ++ci) {
                                if (ci - last < gap + 1) continue;
                                auto key = want_x ? std::make_pair(cx, (int)ex)
                                                  : std::make_pair(cy, (int)ey);
                                auto it = prof[ci].find(key);
                                if (it == prof[ci].end()) continue;
                                (want_x ? xs : ys).push_back(it->second);
                                last = ci;
                                want_x = !want_x;
                            }
                            if (!want_x) xs.pop_back(); // drop unmatched x
                            return std::make_pair(xs, ys);
                        };
                        auto [xs1, ys1] = scan(0);
                        if ((int)xs1.size() < l) continue;
                        auto [xs, ys] = scan(1);
                        int order = (int)xs.size();
                        int target = std::max(1, l / 3);
                        if (order < target) continue;
                        SemiInducedWitness w{xs, ys};
                        if (check_semi_induced(eval.graph, w)) return w;
                    }
    }
    return std::nullopt;
}

} // namespace lrw
