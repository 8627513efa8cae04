#ifndef EQUILIST_COLORING_HPP
#define EQUILIST_COLORING_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "equilist/graph.hpp"

namespace equilist {

using Color = int;

/// A graph together with a color budget r and per-vertex lists of exactly r colors.
struct Instance {
    Graph g;
    int r = 0;
    std::vector<std::vector<Color>> lists; // sorted, one list per vertex

    /// Sorted union of all lists.
    std::vector<Color> palette() const;
    bool list_has(Vertex v, Color c) const;
    /// Throws InvalidInstance unless every list has exactly r colors.
    void validate() const;
};

struct Coloring {
    std::vector<Color> color;
};

/// Color class partition of a vertex set, one entry per palette color.
struct ClassPartition {
    std::map<Color, std::vector<Vertex>> classes;
    int s = 0;
};

/// The unique i in [1,r] with n-i divisible by r.
int mod_star(long long n, int r);

/// First monochromatic edge, or nullopt if the coloring is proper.
std::optional<std::pair<Vertex, Vertex>> check_proper(const Graph& g, const Coloring& c);

/// First vertex colored outside its list, or nullopt.
std::optional<Vertex> check_lists(const Instance& inst, const Coloring& c);

struct SEReport {
    bool valid = false;
    bool proper = false;
    bool lists_ok = false;
    std::optional<std::pair<Vertex, Vertex>> bad_edge;
    std::optional<Vertex> bad_vertex;
    std::vector<Color> overfull;  // classes above ceil(n/r)
    int full_count = 0;           // classes of size exactly ceil(n/r)
    int allowed_full = 0;         // n mod* r
    int cap = 0;                  // ceil(n/r)
};

/// Strong-equitability check: proper, list-respecting, every class at most
/// ceil(n/r) vertices, and at most (n mod* r) classes of that size. Class
/// sizes are counted over the whole palette; empty classes are never full.
SEReport check_SE(const Instance& inst, const Coloring& c);

ClassPartition partition_classes(const Instance& inst, const Coloring& c);

} // namespace equilist

#endif
