#ifndef EQUILIST_GRAPH_HPP
#define EQUILIST_GRAPH_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace equilist {

using Vertex = int;

/// Simple undirected graph on vertex ids 0..n-1 with sorted adjacency lists.
struct Graph {
    int n = 0;
    std::vector<std::vector<Vertex>> adj;

    Graph() = default;
    explicit Graph(int n_) : n(n_), adj(n_) {}

    static Graph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

    void add_edge(Vertex u, Vertex v);
    bool has_edge(Vertex u, Vertex v) const;
    int degree(Vertex v) const { return static_cast<int>(adj[v].size()); }
    int max_degree() const;
    long long edge_count() const;
    /// Edges as sorted (u,v) pairs with u<v.
    std::vector<std::pair<Vertex, Vertex>> edges() const;
};

/// Vertex of minimum degree; ties broken by smallest id.
Vertex min_degree_vertex(const Graph& g);

/// Induced subgraph on V-v. Returns the new graph and the old->new id map
/// (entry for v is -1; remaining ids keep their relative order).
std::pair<Graph, std::vector<int>> delete_vertex(const Graph& g, Vertex v);

/// Number of edges with one end in X and the other in Y. X and Y must be disjoint.
long long cut_edges(const Graph& g, const std::vector<Vertex>& X, const std::vector<Vertex>& Y);

struct BMembership {
    enum class Verdict { InB, NotInB, Unknown };
    Verdict verdict;
    std::string certificate;          // InB: how membership was established
    std::vector<Vertex> witness_x;    // NotInB: disjoint sets violating the cut bound
    std::vector<Vertex> witness_y;
    std::string reason;               // Unknown: why the check was skipped
};

/// Exact membership test for class B: every pair of disjoint X,Y with
/// |X u Y| >= 3 spans at most 2|X u Y|-4 edges. Enumerates all 3^n
/// assignments when n <= max_n_budget, otherwise returns Unknown.
BMembership verify_class_B(const Graph& g, int max_n_budget = 16);

/// Finds a (not necessarily induced) K_{3,3} subgraph, if any.
std::optional<std::pair<std::array<Vertex, 3>, std::array<Vertex, 3>>> contains_K33(const Graph& g);

} // namespace equilist

#endif
