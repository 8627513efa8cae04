#include "equilist/coloring.hpp"

#include <algorithm>

#include "equilist/errors.hpp"

namespace equilist {

std::vector<Color> Instance::palette() const
{
    std::vector<Color> gamma;
    for (const auto& l : lists)
        gamma.insert(gamma.end(), l.begin(), l.end());
    std::sort(gamma.begin(), gamma.end());
    gamma.erase(std::unique(gamma.begin(), gamma.end()), gamma.end());
    return gamma;
}

bool Instance::list_has(Vertex v, Color c) const
{
    return std::binary_search(lists[v].begin(), lists[v].end(), c);
}

void Instance::validate() const
{
    if (r < 1)
        fail(ErrKind::InvalidInstance, "color budget r must be >= 1");
    if (static_cast<int>(lists.size()) != g.n)
        fail(ErrKind::InvalidInstance, "list table size does not match vertex count");
    for (Vertex v = 0; v < g.n; ++v) {
        if (static_cast<int>(lists[v].size()) != r)
            fail(ErrKind::InvalidInstance,
                 "list of vertex " + std::to_string(v) + " has " +
                     std::to_string(lists[v].size()) + " colors, expected " + std::to_string(r));
        for (size_t i = 0; i < lists[v].size(); ++i) {
            if (lists[v][i] < 0)
                fail(ErrKind::InvalidInstance, "negative color in list");
            if (i > 0 && lists[v][i] <= lists[v][i - 1])
                fail(ErrKind::InvalidInstance, "list not sorted/unique at vertex " + std::to_string(v));
        }
    }
}

int mod_star(long long n, int r)
{
    if (r < 1)
        fail(ErrKind::InvalidInstance, "mod_star: r must be >= 1");
    if (n < 0)
        fail(ErrKind::InvalidInstance, "mod_star: n must be >= 0");
    long long m = n % r;
    return m == 0 ? r : static_cast<int>(m);
}

std::optional<std::pair<Vertex, Vertex>> check_proper(const Graph& g, const Coloring& c)
{
    if (static_cast<int>(c.color.size()) != g.n)
        fail(ErrKind::InvalidInstance, "coloring is not total");
    for (Vertex u = 0; u < g.n; ++u)
        for (Vertex v : g.adj[u])
            if (u < v && c.color[u] == c.color[v])
                return std::make_pair(u, v);
    return std::nullopt;
}

std::optional<Vertex> check_lists(const Instance& inst, const Coloring& c)
{
    if (static_cast<int>(c.color.size()) != inst.g.n)
        fail(ErrKind::InvalidInstance, "coloring is not total");
    for (Vertex v = 0; v < inst.g.n; ++v)
        if (!inst.list_has(v, c.color[v]))
            return v;
    return std::nullopt;
}

ClassPartition partition_classes(const Instance& inst, const Coloring& c)
{
    ClassPartition part;
    part.s = inst.g.n == 0 ? 0 : static_cast<int>((inst.g.n + inst.r - 1) / inst.r);
    for (Color gamma : inst.palette())
        part.classes[gamma] = {};
    for (Vertex v = 0; v < inst.g.n; ++v)
        part.classes[c.color[v]].push_back(v);
    return part;
}

SEReport check_SE(const Instance& inst, const Coloring& c)
{
    SEReport rep;
    rep.bad_edge = check_proper(inst.g, c);
    rep.proper = !rep.bad_edge.has_value();
    rep.bad_vertex = check_lists(inst, c);
    rep.lists_ok = !rep.bad_vertex.has_value();
    int n = inst.g.n;
    rep.cap = n == 0 ? 0 : static_cast<int>((n + inst.r - 1) / inst.r);
    rep.allowed_full = mod_star(n, inst.r);
    if (!rep.proper || !rep.lists_ok)
        return rep;
    auto part = partition_classes(inst, c);
    for (const auto& [gamma, members] : part.classes) {
        int size = static_cast<int>(members.size());
        if (size > rep.cap)
            rep.overfull.push_back(gamma);
        else if (n > 0 && size == rep.cap)
            ++rep.full_count;
    }
    rep.valid = rep.overfull.empty() && rep.full_count <= rep.allowed_full;
    return rep;
}

} // namespace equilist
