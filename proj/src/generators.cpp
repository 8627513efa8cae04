#include "equilist/generators.hpp"

#include <algorithm>
#include <random>

#include "equilist/errors.hpp"

namespace equilist {

namespace {

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t m)
{
    return rng() % m;
}

bool draw_bernoulli(std::mt19937_64& rng, double p)
{
    return (rng() >> 11) * 0x1.0p-53 < p;
}

} // namespace

std::pair<Graph, Certificate> gen_stacked_planar(int n, std::uint64_t seed,
                                                 double delete_fraction, int max_degree)
{
    if (n < 3)
        fail(ErrKind::InvalidInstance, "stacked triangulation needs at least three vertices");
    if (delete_fraction < 0.0 || delete_fraction >= 1.0)
        fail(ErrKind::InvalidInstance, "delete fraction must lie in [0,1)");
    if (max_degree > 0 && max_degree < 3)
        fail(ErrKind::InvalidInstance, "degree cap below three leaves no usable face");

    std::mt19937_64 rng(seed);
    Graph g(n);
    Certificate cert;
    cert.kind = Certificate::Kind::StackedTriangulation;

    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    std::vector<std::array<Vertex, 3>> faces{{0, 1, 2}, {0, 1, 2}}; // both sides
    auto face_ok = [&](const std::array<Vertex, 3>& f) {
        if (max_degree <= 0)
            return true;
        for (Vertex c : f)
            if (g.degree(c) >= max_degree)
                return false;
        return true;
    };
    for (Vertex v = 3; v < n; ++v) {
        size_t idx = static_cast<size_t>(draw_below(rng, faces.size()));
        if (!face_ok(faces[idx])) {
            // Re-draw among the faces that respect the degree cap.
            std::vector<size_t> usable;
            for (size_t i = 0; i < faces.size(); ++i)
                if (face_ok(faces[i]))
                    usable.push_back(i);
            if (usable.empty())
                fail(ErrKind::InvalidInstance, "degree cap exhausted every face");
            idx = usable[static_cast<size_t>(draw_below(rng, usable.size()))];
        }
        auto face = faces[idx];
        cert.insertions.push_back(face);
        for (Vertex c : face)
            g.add_edge(v, c);
        faces[idx] = {face[0], face[1], v};
        faces.push_back({face[0], face[2], v});
        faces.push_back({face[1], face[2], v});
    }

    if (delete_fraction > 0.0) {
        auto all = g.edges();
        Graph kept(n);
        for (auto [u, v] : all) {
            if (draw_bernoulli(rng, delete_fraction))
                cert.deleted_edges.emplace_back(u, v);
            else
                kept.add_edge(u, v);
        }
        g = std::move(kept);
    }
    return {std::move(g), std::move(cert)};
}

std::pair<Graph, Certificate> gen_subdivision(const Graph& h)
{
    auto base_edges = h.edges();
    int m = static_cast<int>(base_edges.size());
    Graph g(h.n + m);
    Certificate cert;
    cert.kind = Certificate::Kind::Subdivision;
    cert.base_n = h.n;
    cert.base_edges = base_edges;
    for (int i = 0; i < m; ++i) {
        auto [u, v] = base_edges[i];
        Vertex w = h.n + i;
        g.add_edge(u, w);
        g.add_edge(v, w);
    }
    return {std::move(g), std::move(cert)};
}

std::vector<std::vector<Color>> gen_lists(int n, int r, int palette_size, std::uint64_t seed)
{
    if (palette_size < r)
        fail(ErrKind::InvalidInstance, "palette smaller than the color budget");
    std::mt19937_64 rng(seed);
    std::vector<std::vector<Color>> lists(n);
    std::vector<Color> pool(palette_size);
    for (int i = 0; i < palette_size; ++i)
        pool[i] = i;
    for (Vertex v = 0; v < n; ++v) {
        // Partial Fisher-Yates: the first r entries become the list.
        for (int i = 0; i < r; ++i) {
            int j = i + static_cast<int>(draw_below(rng, palette_size - i));
            std::swap(pool[i], pool[j]);
        }
        lists[v].assign(pool.begin(), pool.begin() + r);
        std::sort(lists[v].begin(), lists[v].end());
    }
    return lists;
}

} // namespace equilist
