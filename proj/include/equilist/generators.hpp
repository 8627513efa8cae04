#ifndef EQUILIST_GENERATORS_HPP
#define EQUILIST_GENERATORS_HPP

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "equilist/coloring.hpp"

namespace equilist {

/// Construction record proving how a generated graph was built (and hence
/// why it satisfies the cross-edge bound).
struct Certificate {
    enum class Kind { None, StackedTriangulation, Subdivision };
    Kind kind = Kind::None;
    // StackedTriangulation: corners of the face each vertex 3..n-1 split,
    // plus the edges removed afterwards.
    std::vector<std::array<Vertex, 3>> insertions;
    std::vector<std::pair<Vertex, Vertex>> deleted_edges;
    // Subdivision: the base graph.
    int base_n = 0;
    std::vector<std::pair<Vertex, Vertex>> base_edges;
};

/// Random planar 3-tree (stacked triangulation): start from a triangle and
/// repeatedly insert a vertex into a uniformly chosen triangular face; then
/// delete each edge independently with probability delete_fraction.
/// When max_degree > 0, faces whose corners would exceed that degree are
/// skipped (re-drawn); if no face qualifies the call raises InvalidInstance.
/// Deterministic under seed. n < 3 raises InvalidInstance.
std::pair<Graph, Certificate> gen_stacked_planar(int n, std::uint64_t seed,
                                                 double delete_fraction = 0.0,
                                                 int max_degree = 0);

/// Subdivides every edge of h once: vertex |h|+i splits the i-th edge in
/// sorted order. The result is bipartite and satisfies the cross-edge bound.
std::pair<Graph, Certificate> gen_subdivision(const Graph& h);

/// Uniform random r-subsets of {0..palette_size-1}, one per vertex, sorted.
/// palette_size == r yields plain lists. palette_size < r raises
/// InvalidInstance.
std::vector<std::vector<Color>> gen_lists(int n, int r, int palette_size, std::uint64_t seed);

} // namespace equilist

#endif
