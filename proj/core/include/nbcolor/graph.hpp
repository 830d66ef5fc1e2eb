#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nbcolor {

// Simple undirected graph with sorted adjacency lists. Immutable once built;
// every operation in the library takes it by const reference.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {}

    // Builds from an (unordered) edge list. Self-loops are rejected,
    // duplicate edges collapsed.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    std::int64_t edge_count() const { return edge_count_; }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    double average_degree() const;

    bool has_edge(int u, int v) const;

    // Edges as (u, v) with u < v, ascending.
    std::vector<std::pair<int, int>> edges() const;

    // Asserts simplicity, adjacency symmetry and the edge count identity.
    // Throws std::logic_error on violation; cheap enough to run on every
    // construction path.
    void check_invariants() const;

  private:
    std::vector<std::vector<int>> adj_;
    std::int64_t edge_count_ = 0;
};

// --- ingestion / serialization ---------------------------------------------

// Lines "u v" with 0-based ids, '#' comments, blank lines allowed, optional
// header "n <N>". Vertex count defaults to 1 + max id.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
Graph parse_edge_list_file(const std::string& path);

// Canonical serialization: "n <N>" header then "u v" with u < v, ascending.
// Round-trips bit-exactly and is the digest preimage for certificates.
std::string serialize_edge_list(const Graph& g);

// --- random generation ------------------------------------------------------

// G(n, d/n): every pair independently with probability d/n. Deterministic
// for a fixed seed.
Graph sample_er(int n, double d, std::uint64_t seed);

// --- structural analyses ----------------------------------------------------

struct TwoCoreResult {
    Graph core;
    std::vector<int> old_to_new; // -1 for peeled vertices
    std::vector<int> new_to_old;
};
TwoCoreResult two_core(const Graph& g);

// Length of the shortest cycle; nullopt when acyclic.
std::optional<int> girth(const Graph& g);

struct BfsBall {
    std::vector<int> dist;   // -1 outside the radius
    std::vector<int> parent; // unique predecessor on a shortest path, -1 at root/outside
};
BfsBall bfs_ball(const Graph& g, int root, int radius);

bool is_connected(const Graph& g);

// Two-coloring (values 0/1) when bipartite, nullopt otherwise.
std::optional<std::vector<int>> bipartition(const Graph& g);

std::vector<std::vector<int>> connected_components(const Graph& g);

// Induced subgraph on `vertices` (need not be sorted); optional old->new map
// over all of g (non-members get -1).
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices,
                       std::vector<int>* old_to_new = nullptr);

// Proper 3-coloring (values 1..3) of a graph with empty 3-core, obtained by
// coloring in reverse peeling order. Throws eligibility_error when the
// 3-core is nonempty.
std::vector<int> greedy_color_2degenerate(const Graph& g);

} // namespace nbcolor
