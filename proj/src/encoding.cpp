#include "lrw/encoding.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace lrw {

bool VertexTriple::operator<(const VertexTriple& o) const {
    if (gamma != o.gamma) return gamma < o.gamma;
    if (cls != o.cls) return cls < o.cls;
    if (nc != o.nc) return nc < o.nc;
    return ic < o.ic;
}

std::size_t ColoredOrder::distinct_triples() const {
    std::set<VertexTriple> s(triples.begin(), triples.end());
    return s.size();
}

ColoredOrder encode(const OrderedGraph& og) { return encode(build_pipeline(og)); }

ColoredOrder encode(const OrderPipeline& pipe) {
    const int n = pipe.og.n();
    const int r = pipe.width;
    ColoredOrder co;
    co.n = n;
    co.r = r;
    co.triples.resize(n);

    std::vector<BitVec> rows(n);
    for (int p = 0; p < n; ++p) rows[p] = pipe.og.adj_at(p);

    for (int v = 0; v < n; ++v) {
        VertexTriple t;
        t.gamma = pipe.ig.gamma[v];
        t.cls.resize(r);
        int node = pipe.ft.singleton[v];
        for (int i = 1; i <= r; ++i) {
            node = pipe.ft.f[node];
            auto& set = t.cls[i - 1];
            for (int x : pipe.ft.nodes[node]) set.push_back(pipe.ig.gamma[x]);
            std::sort(set.begin(), set.end());
        }
        for (int u = 0; u <= v; ++u) {
            if (pipe.ai.tau[u] < v) continue; // v not in I_u
            t.ic.push_back(pipe.ig.gamma[u]);
            if (u != v && rows[u].get(v)) t.nc.push_back(pipe.ig.gamma[u]);
        }
        std::sort(t.ic.begin(), t.ic.end());
        std::sort(t.nc.begin(), t.nc.end());
        co.triples[v] = std::move(t);
    }
    return co;
}

DecodeContext make_decode_context(const ColoredOrder& co) {
    const int n = co.n;
    const int r = co.r;

    // validate triples
    for (int v = 0; v < n; ++v) {
        const auto& t = co.triples[v];
        if (t.gamma < 1 || t.gamma > r + 2)
            throw DecodingError("gamma out of range", v);
        if ((int)t.cls.size() != r)
            throw DecodingError("Class has wrong arity", v);
        for (const auto& s : t.cls) {
            for (int c : s)
                if (c < 1 || c > r + 1)
                    throw DecodingError("Class set color out of range", v);
            if (std::adjacent_find(s.begin(), s.end()) != s.end())
                throw DecodingError("Class set with repeated color", v);
        }
        if (!std::includes(t.ic.begin(), t.ic.end(), t.nc.begin(), t.nc.end()))
            throw DecodingError("NC not contained in IC", v);
        if (!std::binary_search(t.ic.begin(), t.ic.end(), t.gamma))
            throw DecodingError("gamma(v) missing from IC(v)", v);
    }

    DecodeContext ctx;
    ctx.co = &co;

    // prev_same[v][c], next_same[v][c]: nearest position with color c strictly
    // before / after v; -1 / n when none.
    auto color_of = [&](int v) { return co.triples[v].gamma; };
    std::vector<std::vector<int>> prev_same(n, std::vector<int>(r + 3, -1));
    ctx.next_same.assign(n, std::vector<int>(r + 3, n));
    {
        std::vector<int> last(r + 3, -1);
        for (int v = 0; v < n; ++v) {
            prev_same[v] = last;
            last[color_of(v)] = v;
        }
        std::vector<int> nxt(r + 3, n);
        for (int v = n - 1; v >= 0; --v) {
            ctx.next_same[v] = nxt;
            nxt[color_of(v)] = v;
        }
    }

    // resolve F^i(u) for i = 1..r: the member with color a is the maximum
    // position below u carrying color a
    ctx.fsets.resize(n);
    for (int u = 0; u < n; ++u) {
        ctx.fsets[u].resize(r);
        for (int i = 1; i <= r; ++i) {
            for (int a : co.triples[u].cls[i - 1]) {
                int w = prev_same[u][a];
                if (w < 0)
                    throw DecodingError("Class references a color with no occurrence below", u);
                ctx.fsets[u][i - 1].push_back(w);
            }
        }
    }
    return ctx;
}

bool DecodeContext::edge(int u, int v) const {
    const int r = co->r;
    const auto& tv = co->triples[v];
    auto color_of = [&](int x) { return co->triples[x].gamma; };
    // xi(u,v): least k with F^k(u) empty or v in I_{F^k(u)};
    // v in I_x iff gamma(x) in IC(v) and no z in (x, v] has gamma(x)
    std::vector<int> self{u};
    for (int k = 0; k <= r; ++k) {
        const std::vector<int>* set = k == 0 ? &self : &fsets[u][k - 1];
        if (k > 0 && set->empty()) return false;
        bool inside = true;
        for (int x : *set) {
            int a = color_of(x);
            if (!std::binary_search(tv.ic.begin(), tv.ic.end(), a) ||
                next_same[x][a] <= v) {
                inside = false;
                break;
            }
        }
        if (inside) {
            int p = 0;
            for (int x : *set)
                if (std::binary_search(tv.nc.begin(), tv.nc.end(), color_of(x)))
                    p ^= 1;
            return p != 0;
        }
    }
    return false; // F^{r+1} is always empty
}

Graph decode(const ColoredOrder& co) {
    const int n = co.n;
    DecodeContext ctx = make_decode_context(co);
    Graph g;
    g.n = n;
    g.adj.assign(n, BitVec(std::max(n, 1)));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (ctx.edge(u, v)) {
                g.adj[u].set(v);
                g.adj[v].set(u);
            }
    return g;
}

uint64_t palette_bound(int r) {
    if (r < 0) throw std::invalid_argument("palette_bound: negative r");
    unsigned __int128 x = 1;
    const unsigned __int128 cap = ~uint64_t(0);
    for (int i = 2; i <= r + 2; ++i) {
        x *= i;
        if (x > cap) return ~uint64_t(0);
    }
    for (int i = 0; i < r * (r - 1) / 2; ++i) {
        x *= 2;
        if (x > cap) return ~uint64_t(0);
    }
    for (int i = 0; i < r + 2; ++i) {
        x *= 3;
        if (x > cap) return ~uint64_t(0);
    }
    return (uint64_t)x;
}

namespace {

nlohmann::ordered_json triple_to_json(const VertexTriple& t) {
    nlohmann::ordered_json j;
    j["gamma"] = t.gamma;
    j["cls"] = t.cls;
    j["nc"] = t.nc;
    j["ic"] = t.ic;
    return j;
}

VertexTriple triple_from_json(const nlohmann::json& j) {
    VertexTriple t;
    t.gamma = j.at("gamma").get<int>();
    t.cls = j.at("cls").get<std::vector<std::vector<int>>>();
    t.nc = j.at("nc").get<std::vector<int>>();
    t.ic = j.at("ic").get<std::vector<int>>();
    return t;
}

} // namespace

std::string encoding_to_json(const ColoredOrder& co) {
    std::vector<VertexTriple> palette(co.triples.begin(), co.triples.end());
    std::sort(palette.begin(), palette.end());
    palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
    std::map<VertexTriple, int> idx;
    for (std::size_t i = 0; i < palette.size(); ++i) idx[palette[i]] = (int)i;

    nlohmann::ordered_json j;
    j["n"] = co.n;
    j["r"] = co.r;
    auto& pal = j["palette"] = nlohmann::ordered_json::array();
    for (const auto& t : palette) pal.push_back(triple_to_json(t));
    auto& vpi = j["vertex_palette_index"] = nlohmann::ordered_json::array();
    for (const auto& t : co.triples) vpi.push_back(idx[t]);
    return j.dump(2) + "\n";
}

ColoredOrder encoding_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    ColoredOrder co;
    co.n = j.at("n").get<int>();
    co.r = j.at("r").get<int>();
    if (co.n < 0 || co.r < 0) throw std::invalid_argument("bad encoding header");
    std::vector<VertexTriple> palette;
    for (const auto& tj : j.at("palette")) palette.push_back(triple_from_json(tj));
    for (const auto& ij : j.at("vertex_palette_index")) {
        int i = ij.get<int>();
        if (i < 0 || i >= (int)palette.size())
            throw std::invalid_argument("palette index out of range");
        co.triples.push_back(palette[i]);
    }
    if ((int)co.triples.size() != co.n)
        throw std::invalid_argument("vertex_palette_index length mismatch");
    return co;
}

} // namespace lrw
