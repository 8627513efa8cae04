#ifndef EQUILIST_RECOLOR_HPP
#define EQUILIST_RECOLOR_HPP

#include <tuple>
#include <vector>

#include "equilist/aux_digraph.hpp"
#include "equilist/trace.hpp"

namespace equilist {

/// Lexicographic optimization key: (|A|, nonempty accessible classes).
struct Potential {
    long long a_size = 0;
    int nonempty = 0;

    friend bool operator==(const Potential& l, const Potential& r)
    {
        return l.a_size == r.a_size && l.nonempty == r.nonempty;
    }
    friend bool operator<(const Potential& l, const Potential& r)
    {
        return std::tie(l.a_size, l.nonempty) < std::tie(r.a_size, r.nonempty);
    }
};

/// Requires st.analyze() to have run since the last mutation.
Potential potential(const PartialState& st);

/// True iff the current classes satisfy the strong-equitability bound for
/// the active vertex count (every class at most ceil(k/r), at most
/// (k mod* r) full classes).
bool level_SE_ok(const PartialState& st);

void move_vertex(PartialState& st, Vertex v, Color beta, Trace& trace);

/// Shifts each witness one step along the path, far end first so no move
/// invalidates a later witness. Trivial paths are a no-op.
void shift_witnesses(PartialState& st, const ColorPath& path, Trace& trace);

void insert_vertex(PartialState& st, Vertex p, Color beta, Trace& trace);

/// Applies a batch of recolorings as one atomic event; properness is only
/// required after the whole batch. from == -1 inserts the pending vertex.
void apply_swap(PartialState& st, const std::vector<std::tuple<Vertex, Color, Color>>& moves,
                Trace& trace);

/// Solo neighbors of z: vertices y of B blocked by z (f(z) in L(y) and z is
/// y's unique neighbor in z's class).
std::vector<Vertex> solo_neighbors(const PartialState& st, Vertex z);

/// Useful subset: members of S_z nonadjacent to some other member.
std::vector<Vertex> useful_subset(const PartialState& st, const std::vector<Vertex>& sz);

/// Solo vertices in ascending id order. When a full accessible class exists
/// a solo vertex must belong to it; with two or more full accessible
/// classes there are none.
std::vector<Vertex> solo_vertices(const PartialState& st);

/// Tries the cataloged improvement moves in priority order (empty-class
/// move, full-accessible-class move, solo-to-accessible swap, useful-solo
/// swap, solo-shift composite). Applies the first one whose guard fires and
/// re-analyzes; the potential must strictly increase and the level must stay
/// strongly equitable, otherwise InternalInvariantViolation. Returns false
/// when no guard fires.
bool improve(PartialState& st, Trace& trace);

} // namespace equilist

#endif
