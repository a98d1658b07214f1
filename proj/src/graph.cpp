#include "lrw/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace lrw {

std::size_t Graph::edge_count() const {
    std::size_t s = 0;
    for (const auto& row : adj) s += row.count();
    return s / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i)
        for (std::size_t j : adj[i].ones())
            if ((int)j > i) out.emplace_back(i, (int)j);
    return out;
}

Graph Graph::induced(const std::vector<int>& verts) const {
    Graph h;
    h.n = (int)verts.size();
    h.adj.assign(h.n, BitVec(h.n));
    for (int a = 0; a < h.n; ++a)
        for (int b = a + 1; b < h.n; ++b)
            if (has_edge(verts[a], verts[b])) {
                h.adj[a].set(b);
                h.adj[b].set(a);
            }
    return h;
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g;
    g.n = n;
    g.adj.assign(n, BitVec(n));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge index out of range");
        if (u == v) throw std::invalid_argument("self-loop rejected");
        g.adj[u].set(v);
        g.adj[v].set(u);
    }
    return g;
}

int cut_rank(const Graph& g, const BitVec& x) {
    if ((int)x.len != g.n) throw std::invalid_argument("cut_rank: bad subset length");
    Gf2Basis basis(g.n);
    for (std::size_t v : x.ones()) {
        BitVec row = g.adj[v];
        row.mask_andnot(x);
        if (row.any()) basis.insert(row, (uint32_t)v);
    }
    return (int)basis.rank();
}

int cut_rank(const Graph& g, const std::vector<int>& x) {
    BitVec mask(g.n);
    for (int v : x) {
        if (v < 0 || v >= g.n) throw std::invalid_argument("cut_rank: vertex out of range");
        mask.set(v);
    }
    return cut_rank(g, mask);
}

Graph read_edge_list(std::istream& in) {
    std::vector<std::pair<int, int>> edges;
    int declared_n = -1;
    int max_idx = -1;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "n") {
            if (!(ls >> declared_n) || declared_n < 0)
                throw std::invalid_argument("bad 'n' header in edge list");
            continue;
        }
        int u, v;
        try {
            u = std::stoi(first);
        } catch (...) {
            throw std::invalid_argument("bad token in edge list: " + first);
        }
        if (!(ls >> v)) throw std::invalid_argument("edge line with a single endpoint");
        edges.emplace_back(u, v);
        max_idx = std::max({max_idx, u, v});
    }
    int n = declared_n >= 0 ? declared_n : max_idx + 1;
    return make_graph(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "n " << g.n << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

std::string edge_list_string(const Graph& g) {
    std::ostringstream ss;
    write_edge_list(ss, g);
    return ss.str();
}

} // namespace lrw
