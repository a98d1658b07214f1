#pragma once

#include "lrw/bitvec.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lrw {

// Thrown when an exact solver is asked for more than its hard size cap.
struct SizeCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Simple undirected graph on vertices 0..n-1, adjacency rows as GF(2) vectors.
struct Graph {
    int n = 0;
    std::vector<BitVec> adj; // adj[i].get(j): i and j adjacent

    bool has_edge(int i, int j) const { return adj[i].get(j); }
    int degree(int i) const { return (int)adj[i].count(); }
    std::size_t edge_count() const;
    std::vector<std::pair<int, int>> edges() const; // sorted, u < v

    bool operator==(const Graph& o) const { return n == o.n && adj == o.adj; }

    Graph induced(const std::vector<int>& verts) const;
};

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges);

// GF(2) rank of the bipartite adjacency matrix between X and its complement.
int cut_rank(const Graph& g, const BitVec& x);
int cut_rank(const Graph& g, const std::vector<int>& x);

// Edge-list text format: optional "n <count>" header, one "u v" per line,
// '#' starts a comment.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
std::string edge_list_string(const Graph& g);

} // namespace lrw
