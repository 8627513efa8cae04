#include "equilist/graph.hpp"

#include <algorithm>
#include <numeric>

#include "equilist/errors.hpp"

namespace equilist {

Graph Graph::from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges)
{
    Graph g(n);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

void Graph::add_edge(Vertex u, Vertex v)
{
    if (u == v)
        fail(ErrKind::InvalidInstance, "self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
        fail(ErrKind::InvalidInstance, "edge endpoint out of range");
    if (has_edge(u, v))
        return;
    adj[u].insert(std::upper_bound(adj[u].begin(), adj[u].end(), v), v);
    adj[v].insert(std::upper_bound(adj[v].begin(), adj[v].end(), u), u);
}

bool Graph::has_edge(Vertex u, Vertex v) const
{
    if (u < 0 || v < 0 || u >= n || v >= n)
        return false;
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

int Graph::max_degree() const
{
    int d = 0;
    for (const auto& a : adj)
        d = std::max<int>(d, static_cast<int>(a.size()));
    return d;
}

long long Graph::edge_count() const
{
    long long twice = 0;
    for (const auto& a : adj)
        twice += static_cast<long long>(a.size());
    return twice / 2;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const
{
    std::vector<std::pair<Vertex, Vertex>> es;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : adj[u])
            if (u < v)
                es.emplace_back(u, v);
    return es;
}

Vertex min_degree_vertex(const Graph& g)
{
    if (g.n < 1)
        fail(ErrKind::InvalidInstance, "min_degree_vertex on empty graph");
    Vertex best = 0;
    for (Vertex v = 1; v < g.n; ++v)
        if (g.degree(v) < g.degree(best))
            best = v;
    return best;
}

std::pair<Graph, std::vector<int>> delete_vertex(const Graph& g, Vertex v)
{
    if (v < 0 || v >= g.n)
        fail(ErrKind::InvalidInstance, "delete_vertex: vertex out of range");
    std::vector<int> remap(g.n, -1);
    int next = 0;
    for (Vertex u = 0; u < g.n; ++u)
        if (u != v)
            remap[u] = next++;
    Graph h(g.n - 1);
    for (Vertex u = 0; u < g.n; ++u) {
        if (u == v)
            continue;
        for (Vertex w : g.adj[u])
            if (w != v && u < w)
                h.add_edge(remap[u], remap[w]);
    }
    return {std::move(h), std::move(remap)};
}

long long cut_edges(const Graph& g, const std::vector<Vertex>& X, const std::vector<Vertex>& Y)
{
    std::vector<char> inY(g.n, 0), inX(g.n, 0);
    for (Vertex v : X) {
        if (v < 0 || v >= g.n)
            fail(ErrKind::InvalidInstance, "cut_edges: vertex out of range");
        inX[v] = 1;
    }
    for (Vertex v : Y) {
        if (v < 0 || v >= g.n)
            fail(ErrKind::InvalidInstance, "cut_edges: vertex out of range");
        if (inX[v])
            fail(ErrKind::InvalidInstance, "cut_edges: X and Y overlap at " + std::to_string(v));
        inY[v] = 1;
    }
    long long count = 0;
    for (Vertex u : X)
        for (Vertex w : g.adj[u])
            if (inY[w])
                ++count;
    return count;
}

namespace {

// DFS over assignments of vertices to {neither, X, Y}, maintaining the cut
// size incrementally. Stops at the first violation of the class-B bound.
struct BSearch {
    const Graph& g;
    std::vector<int> side; // 0 none, 1 X, 2 Y
    std::vector<Vertex> X, Y;
    long long cut = 0;

    explicit BSearch(const Graph& g_) : g(g_), side(g_.n, 0) {}

    bool violated() const
    {
        long long size = static_cast<long long>(X.size() + Y.size());
        return size >= 3 && cut > 2 * size - 4;
    }

    bool dfs(Vertex v)
    {
        if (violated())
            return true;
        if (v == g.n)
            return false;
        if (dfs(v + 1))
            return true;
        for (int s : {1, 2}) {
            long long gained = 0;
            for (Vertex w : g.adj[v])
                if (w < v && side[w] == 3 - s)
                    ++gained;
            side[v] = s;
            cut += gained;
            (s == 1 ? X : Y).push_back(v);
            if (dfs(v + 1))
                return true;
            (s == 1 ? X : Y).pop_back();
            cut -= gained;
            side[v] = 0;
        }
        return false;
    }
};

} // namespace

BMembership verify_class_B(const Graph& g, int max_n_budget)
{
    if (g.n > max_n_budget) {
        return {BMembership::Verdict::Unknown, "", {}, {},
                "n=" + std::to_string(g.n) + " exceeds enumeration budget " +
                    std::to_string(max_n_budget)};
    }
    BSearch search(g);
    if (search.dfs(0)) {
        std::sort(search.X.begin(), search.X.end());
        std::sort(search.Y.begin(), search.Y.end());
        return {BMembership::Verdict::NotInB, "", search.X, search.Y, ""};
    }
    return {BMembership::Verdict::InB, "exhaustive", {}, {}, ""};
}

std::optional<std::pair<std::array<Vertex, 3>, std::array<Vertex, 3>>> contains_K33(const Graph& g)
{
    if (g.n < 6)
        return std::nullopt;
    // For every triple, collect the common neighborhood; any 3 common
    // neighbors (disjoint from the triple) complete a K_{3,3}.
    std::vector<char> mark(g.n, 0);
    for (Vertex a = 0; a < g.n; ++a) {
        for (Vertex b = a + 1; b < g.n; ++b) {
            for (Vertex c = b + 1; c < g.n; ++c) {
                std::array<Vertex, 3> left{a, b, c};
                std::vector<Vertex> common;
                for (Vertex w : g.adj[a])
                    mark[w] = 1;
                for (Vertex w : g.adj[b])
                    if (mark[w])
                        mark[w] = 2;
                for (Vertex w : g.adj[c])
                    if (mark[w] == 2 && w != a && w != b && w != c)
                        common.push_back(w);
                for (Vertex w : g.adj[a])
                    mark[w] = 0;
                if (common.size() >= 3) {
                    std::array<Vertex, 3> right{common[0], common[1], common[2]};
                    return std::make_pair(left, right);
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace equilist
