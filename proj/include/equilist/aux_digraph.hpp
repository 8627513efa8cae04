#ifndef EQUILIST_AUX_DIGRAPH_HPP
#define EQUILIST_AUX_DIGRAPH_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <boost/container/flat_map.hpp>

#include "equilist/coloring.hpp"

namespace equilist {

/// Auxiliary digraph H(f) on colors. Arc (alpha,beta) exists when some
/// vertex of class alpha is movable to class beta; the witnesses map holds
/// exactly those vertices, sorted. Flat maps keep the rebuild-per-insertion
/// cheap; both are ordered and expose the usual map interface.
struct AuxDigraph {
    std::vector<Color> nodes;
    boost::container::flat_map<Color, std::vector<Color>> out;
    boost::container::flat_map<std::pair<Color, Color>, std::vector<Vertex>> witnesses;

    bool has_arc(Color a, Color b) const { return witnesses.count({a, b}) > 0; }
};

/// Coloring state of an induced subgraph during the inductive extension.
/// `active` marks the colored vertices; `pending` is the vertex currently
/// being inserted (uncolored, excluded from all class bookkeeping).
struct PartialState {
    const Instance* inst = nullptr;
    std::vector<char> active;
    std::vector<Color> color; // -1 when inactive
    int active_count = 0;
    std::optional<Vertex> pending;
    int color_bound = 0; // one past the largest color in any list

    // Level data, maintained by rebuild_level / the engine ops.
    std::vector<Color> gamma; // union of lists over active vertices and pending
    int s = 0;                // light/full threshold: ceil((active + pending) / r)
    std::map<Color, std::vector<Vertex>> classes;

    // Analysis data, recomputed by analyze(). Stale after any mutation.
    AuxDigraph H;
    std::vector<Color> lambda0, lambda, phi; // sorted
    long long A_size = 0;
    int a = 0, b = 0;

    explicit PartialState(const Instance& instance);

    const Instance& instance() const { return *inst; }
    int r() const { return inst->r; }
    int class_size(Color c) const;
    bool in_gamma(Color c) const;
    bool is_light(Color c) const { return class_size(c) < s; }
    bool in_lambda(Color c) const;
    bool in_phi(Color c) const;

    /// Recomputes gamma, s and the class partition from active/color/pending.
    void rebuild_level();
    /// Rebuilds H and the lambda/phi split. `s_override` substitutes the
    /// light threshold (used when re-analyzing right after an insertion).
    void analyze(int s_override = -1);

    /// Raw class mutation; keeps `classes` consistent, invalidates analysis.
    void set_color(Vertex v, Color c);
    void activate(Vertex v, Color c);

    Coloring to_coloring() const; // requires all vertices active
};

/// True iff beta is in L(x), differs from f(x), and x has no active neighbor
/// colored beta.
bool is_movable(const PartialState& st, Vertex x, Color beta);

/// True iff the (uncolored) vertex p may be inserted into class beta.
bool is_insertable(const PartialState& st, Vertex p, Color beta);

AuxDigraph build_H(const PartialState& st);

/// Colors from which some light color is reachable by a directed path.
std::vector<Color> accessible_colors(const PartialState& st, const AuxDigraph& H);

/// All colors reachable from theta, including theta itself.
std::vector<Color> forward_closure(const AuxDigraph& H, const std::vector<Color>& theta);

struct ColorPath {
    std::vector<Color> colors;      // gamma_1 ... gamma_t
    std::vector<Vertex> witnesses;  // witness i carries arc colors[i] -> colors[i+1]
};

/// Shortest directed path (BFS, lexicographic tie-break) from gamma to a
/// light color; per-arc witness is the first in the sorted witness list.
/// Throws NotAccessible when gamma is not in Lambda.
ColorPath path_to_light(const PartialState& st, const AuxDigraph& H, Color gamma);

/// Shortest directed path from a color of `sources` to a color of `targets`.
std::optional<ColorPath> shortest_color_path(const AuxDigraph& H,
                                             const std::vector<Color>& sources,
                                             const std::vector<Color>& targets);

} // namespace equilist

#endif
