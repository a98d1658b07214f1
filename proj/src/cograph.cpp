#include "lrw/cograph.hpp"

#include <json.hpp>

#include <algorithm>

namespace lrw {

namespace {

// root-ward F-chain of a singleton, ending at the empty set
std::vector<int> chain_of(const FTree& ft, int v) {
    std::vector<int> chain;
    int node = ft.singleton[v];
    while (true) {
        chain.push_back(node);
        if (ft.nodes[node].empty()) break;
        node = ft.f[node];
    }
    return chain;
}

int lca_node(const FTree& ft, const std::vector<int>& cu, const std::vector<int>& cv) {
    for (int a : cu)
        for (int b : cv)
            if (a == b) return a;
    return ft.root();
}

} // namespace

CographPartition cograph_partition(const OrderedGraph& og) {
    auto pipe = build_pipeline(og);
    auto co = encode(pipe);
    return cograph_partition(pipe, co);
}

CographPartition cograph_partition(const OrderPipeline& pipe, const ColoredOrder& co) {
    const int n = pipe.og.n();
    CographPartition cp;
    cp.r = pipe.width;

    // classes keyed by (Class, NC); Class(v) starts with gamma(v)
    std::map<std::tuple<int, std::vector<std::vector<int>>, std::vector<int>>,
             std::vector<int>> groups;
    for (int v = 0; v < n; ++v) {
        const auto& t = co.triples[v];
        groups[{t.gamma, t.cls, t.nc}].push_back(v);
    }

    std::vector<std::vector<int>> classes;
    for (auto& [k, members] : groups) classes.push_back(members);
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    std::vector<BitVec> rows(n);
    for (int p = 0; p < n; ++p) rows[p] = pipe.og.adj_at(p);

    for (auto& members : classes) {
        ClassCotree ct;
        ct.members = members;
        std::vector<std::vector<int>> chains;
        for (int v : members) chains.push_back(chain_of(pipe.ft, v));
        for (const auto& c : chains) ct.height = std::max(ct.height, (int)c.size());
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                int node = lca_node(pipe.ft, chains[i], chains[j]);
                bool edge = rows[members[i]].get(members[j]);
                CotreeMark m = edge ? CotreeMark::join : CotreeMark::cup;
                auto it = ct.marks.find(node);
                if (it == ct.marks.end())
                    ct.marks.emplace(node, m);
                else if (it->second != m)
                    throw std::logic_error(
                        "cograph_partition: join/union mark conflict at an F-tree node");
            }
        cp.classes.push_back(std::move(ct));
    }
    return cp;
}

uint64_t f_bound(int r) {
    if (r < 0) throw std::invalid_argument("f_bound: negative r");
    unsigned __int128 x = 3;
    const unsigned __int128 cap = ~uint64_t(0);
    for (int i = 2; i <= r + 2; ++i) {
        x *= i;
        if (x > cap) return ~uint64_t(0);
    }
    for (int i = 0; i < (r + 1) * r / 2; ++i) {
        x *= 2;
        if (x > cap) return ~uint64_t(0);
    }
    return (uint64_t)x;
}

bool PartitionReport::all_ok() const {
    bool base = partition_ok && all_p4_free && heights_ok && count_ok && cotree_consistent;
    if (chi_bound_ok.has_value()) base = base && *chi_bound_ok;
    return base;
}

std::string PartitionReport::to_json() const {
    nlohmann::ordered_json j;
    j["r"] = r;
    j["class_count"] = class_count;
    j["class_bound"] = class_bound;
    j["partition_ok"] = partition_ok;
    j["all_p4_free"] = all_p4_free;
    j["heights_ok"] = heights_ok;
    j["count_ok"] = count_ok;
    j["cotree_consistent"] = cotree_consistent;
    j["class_sizes"] = class_sizes;
    j["cotree_heights"] = cotree_heights;
    j["class_p4_free"] = class_p4_free;
    if (chi) j["chi"] = *chi; else j["chi"] = nullptr;
    if (omega) j["omega"] = *omega; else j["omega"] = nullptr;
    if (chi_bound_ok) j["chi_bound_ok"] = *chi_bound_ok; else j["chi_bound_ok"] = nullptr;
    j["all_ok"] = all_ok();
    return j.dump(2) + "\n";
}

PartitionReport verify_partition(const OrderPipeline& pipe, const CographPartition& cp) {
    const int n = pipe.og.n();
    PartitionReport rep;
    rep.r = cp.r;
    rep.class_count = cp.classes.size();
    rep.class_bound = f_bound(cp.r);
    rep.count_ok = rep.class_count <= rep.class_bound;

    // partition property
    std::vector<int> seen(n, 0);
    for (const auto& c : cp.classes)
        for (int v : c.members) ++seen[v];
    rep.partition_ok = std::all_of(seen.begin(), seen.end(), [](int x) { return x == 1; });

    // position-space graph
    std::vector<std::pair<int, int>> pedges;
    for (int p = 0; p < n; ++p)
        for (std::size_t q : pipe.og.adj_at(p).ones())
            if ((int)q > p) pedges.emplace_back(p, (int)q);
    Graph gpos = make_graph(n, pedges);

    rep.all_p4_free = true;
    rep.heights_ok = true;
    rep.cotree_consistent = true;
    for (const auto& c : cp.classes) {
        rep.class_sizes.push_back((int)c.members.size());
        rep.cotree_heights.push_back(c.height);
        Graph sub = gpos.induced(c.members);
        bool p4free = is_cograph(sub).is_cograph;
        rep.class_p4_free.push_back(p4free);
        rep.all_p4_free = rep.all_p4_free && p4free;
        rep.heights_ok = rep.heights_ok && c.height <= cp.r + 2;
        // marks against adjacency, every pair
        std::vector<std::vector<int>> chains;
        for (int v : c.members) chains.push_back(chain_of(pipe.ft, v));
        for (std::size_t i = 0; i < c.members.size() && rep.cotree_consistent; ++i)
            for (std::size_t j = i + 1; j < c.members.size(); ++j) {
                int node = lca_node(pipe.ft, chains[i], chains[j]);
                auto it = c.marks.find(node);
                bool edge = gpos.has_edge(c.members[i], c.members[j]);
                if (it == c.marks.end() ||
                    (it->second == CotreeMark::join) != edge) {
                    rep.cotree_consistent = false;
                    break;
                }
            }
    }

    if (n <= 25 && n > 0) {
        rep.chi = chromatic_number(gpos);
        rep.omega = max_clique(gpos);
        bool ok = (uint64_t)*rep.chi <= rep.class_count * (uint64_t)*rep.omega;
        if (rep.class_bound != ~uint64_t(0))
            ok = ok && (uint64_t)*rep.chi <= rep.class_bound * (uint64_t)*rep.omega;
        rep.chi_bound_ok = ok;
    }
    return rep;
}

PartitionReport verify_partition(const OrderedGraph& og) {
    auto pipe = build_pipeline(og);
    auto co = encode(pipe);
    auto cp = cograph_partition(pipe, co);
    return verify_partition(pipe, cp);
}

} // namespace lrw
