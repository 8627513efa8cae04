#include "equilist/recolor.hpp"

#include <algorithm>

#include "equilist/errors.hpp"

namespace equilist {

Potential potential(const PartialState& st)
{
    Potential pot;
    pot.a_size = st.A_size;
    for (Color c : st.lambda)
        if (st.class_size(c) > 0)
            ++pot.nonempty;
    return pot;
}

bool level_SE_ok(const PartialState& st)
{
    int k = st.active_count;
    if (k == 0)
        return true;
    int cap = (k + st.r() - 1) / st.r();
    int allowed = mod_star(k, st.r());
    int full = 0;
    for (const auto& [c, members] : st.classes) {
        int size = static_cast<int>(members.size());
        if (size > cap)
            return false;
        if (size == cap)
            ++full;
    }
    return full <= allowed;
}

namespace {

void push_event(PartialState& st, Trace& trace, TraceEvent e)
{
    e.step = trace.next_step++;
    e.snapshot_hash = snapshot_hash(st);
    trace.events.push_back(std::move(e));
}

bool proper_here(const PartialState& st, Vertex v)
{
    for (Vertex w : st.inst->g.adj[v])
        if (st.active[w] && st.color[w] == st.color[v])
            return false;
    return true;
}

} // namespace

void move_vertex(PartialState& st, Vertex v, Color beta, Trace& trace)
{
    if (!st.active[v] || !is_movable(st, v, beta))
        fail(ErrKind::IllegalMove,
             "vertex " + std::to_string(v) + " is not movable to color " + std::to_string(beta));
    TraceEvent e;
    e.kind = TraceEvent::Kind::MoveVertex;
    e.v = v;
    e.from = st.color[v];
    e.to = beta;
    st.set_color(v, beta);
    push_event(st, trace, std::move(e));
}

void shift_witnesses(PartialState& st, const ColorPath& path, Trace& trace)
{
    if (path.colors.size() != path.witnesses.size() + 1)
        fail(ErrKind::IllegalMove, "malformed witness path");
    if (path.witnesses.empty())
        return;
    for (int i = static_cast<int>(path.witnesses.size()) - 1; i >= 0; --i) {
        Vertex w = path.witnesses[i];
        if (st.color[w] != path.colors[i] || !is_movable(st, w, path.colors[i + 1]))
            fail(ErrKind::IllegalMove,
                 "stale witness " + std::to_string(w) + " for arc " +
                     std::to_string(path.colors[i]) + "->" + std::to_string(path.colors[i + 1]));
        st.set_color(w, path.colors[i + 1]);
    }
    TraceEvent e;
    e.kind = TraceEvent::Kind::ShiftPath;
    e.path_colors = path.colors;
    e.path_witnesses = path.witnesses;
    push_event(st, trace, std::move(e));
}

void insert_vertex(PartialState& st, Vertex p, Color beta, Trace& trace)
{
    if (!st.pending || *st.pending != p)
        fail(ErrKind::IllegalMove, "insert_vertex: vertex is not pending");
    if (!is_insertable(st, p, beta))
        fail(ErrKind::IllegalMove, "vertex " + std::to_string(p) +
                                       " cannot be inserted into color " + std::to_string(beta));
    TraceEvent e;
    e.kind = TraceEvent::Kind::InsertVertex;
    e.v = p;
    e.to = beta;
    st.activate(p, beta);
    push_event(st, trace, std::move(e));
}

void apply_swap(PartialState& st, const std::vector<std::tuple<Vertex, Color, Color>>& moves,
                Trace& trace)
{
    for (auto [v, from, to] : moves) {
        if (!st.inst->list_has(v, to))
            fail(ErrKind::IllegalMove, "swap assigns color outside list");
        if (from == -1) {
            if (!st.pending || *st.pending != v)
                fail(ErrKind::IllegalMove, "swap inserts a vertex that is not pending");
            st.activate(v, to);
        } else {
            if (st.color[v] != from)
                fail(ErrKind::IllegalMove, "swap has stale source color");
            st.set_color(v, to);
        }
    }
    for (auto [v, from, to] : moves)
        if (!proper_here(st, v))
            fail(ErrKind::InternalInvariantViolation,
                 "swap left vertex " + std::to_string(v) + " in conflict");
    TraceEvent e;
    e.kind = TraceEvent::Kind::SwapSolo;
    e.moves = moves;
    push_event(st, trace, std::move(e));
}

std::vector<Vertex> solo_neighbors(const PartialState& st, Vertex z)
{
    std::vector<Vertex> sz;
    Color fz = st.color[z];
    for (Vertex y = 0; y < st.inst->g.n; ++y) {
        if (!st.active[y] || !st.in_phi(st.color[y]) || !st.inst->list_has(y, fz))
            continue;
        int in_class = 0;
        bool z_seen = false;
        for (Vertex w : st.inst->g.adj[y]) {
            if (st.active[w] && st.color[w] == fz) {
                ++in_class;
                if (w == z)
                    z_seen = true;
            }
        }
        if (in_class == 1 && z_seen)
            sz.push_back(y);
    }
    return sz;
}

std::vector<Vertex> useful_subset(const PartialState& st, const std::vector<Vertex>& sz)
{
    std::vector<Vertex> useful;
    for (Vertex y : sz) {
        for (Vertex y2 : sz) {
            if (y2 != y && !st.inst->g.has_edge(y, y2)) {
                useful.push_back(y);
                break;
            }
        }
    }
    return useful;
}

std::vector<Vertex> solo_vertices(const PartialState& st)
{
    std::vector<Color> full_lambda;
    for (Color c : st.lambda)
        if (st.class_size(c) == st.s && st.s > 0)
            full_lambda.push_back(c);
    if (full_lambda.size() >= 2)
        return {};
    std::vector<Vertex> solos;
    for (Vertex z = 0; z < st.inst->g.n; ++z) {
        if (!st.active[z] || !st.in_lambda(st.color[z]))
            continue;
        if (!full_lambda.empty() && st.color[z] != full_lambda[0])
            continue;
        if (!solo_neighbors(st, z).empty())
            solos.push_back(z);
    }
    return solos;
}

namespace {

// Applies `body` and enforces the improvement contract.
template <typename Body>
bool commit_improvement(PartialState& st, const char* what, Body&& body)
{
    Potential before = potential(st);
    body();
    st.analyze();
    Potential after = potential(st);
    if (!(before < after))
        fail(ErrKind::InternalInvariantViolation,
             std::string(what) + " move did not increase the potential");
    if (!level_SE_ok(st))
        fail(ErrKind::InternalInvariantViolation,
             std::string(what) + " move broke strong equitability");
    return true;
}

} // namespace

bool improve(PartialState& st, Trace& trace)
{
    const Graph& g = st.inst->g;

    // Empty accessible class: relocating any vertex of a class of size >= 2
    // into it adds a nonempty accessible class.
    for (Color lam : st.lambda) {
        if (st.class_size(lam) != 0)
            continue;
        for (Vertex v = 0; v < g.n; ++v) {
            if (!st.active[v] || !st.inst->list_has(v, lam) || st.class_size(st.color[v]) < 2)
                continue;
            return commit_improvement(st, "empty-class",
                                      [&] { move_vertex(st, v, lam, trace); });
        }
    }

    // Full accessible class while |Lambda| > a: some member can move to an
    // accessible class of size at most s-2.
    if (static_cast<int>(st.lambda.size()) > st.a) {
        for (Color lam : st.lambda) {
            if (st.class_size(lam) != st.s || st.s == 0)
                continue;
            for (Vertex v : st.classes.at(lam)) {
                for (Color target : st.lambda) {
                    if (target == lam || st.class_size(target) > st.s - 2)
                        continue;
                    if (!is_movable(st, v, target))
                        continue;
                    return commit_improvement(st, "full-accessible-class",
                                              [&] { move_vertex(st, v, target, trace); });
                }
            }
        }
    }

    auto solos = solo_vertices(st);

    // Solo vertex movable to an accessible class: swap it out and pull the
    // solo neighbor into its place.
    for (Vertex z : solos) {
        for (Color lam : st.lambda) {
            if (!is_movable(st, z, lam))
                continue;
            Vertex y = solo_neighbors(st, z).front();
            Color fz = st.color[z];
            return commit_improvement(st, "solo-to-accessible", [&] {
                apply_swap(st, {{z, fz, lam}, {y, st.color[y], fz}}, trace);
            });
        }
    }

    // Useful solo neighbor y with f(y) in L(z) and z's unique neighbor in
    // y's class: swap z and y.
    for (Vertex z : solos) {
        auto sz = solo_neighbors(st, z);
        for (Vertex y : useful_subset(st, sz)) {
            Color fy = st.color[y];
            if (!st.inst->list_has(z, fy))
                continue;
            int z_in_fy = 0;
            for (Vertex w : g.adj[z])
                if (st.active[w] && st.color[w] == fy)
                    ++z_in_fy;
            if (z_in_fy != 1)
                continue;
            Color fz = st.color[z];
            return commit_improvement(st, "useful-solo", [&] {
                apply_swap(st, {{z, fz, fy}, {y, fy, fz}}, trace);
            });
        }
    }

    // Solo vertex movable into an inaccessible class from which the color of
    // a useful solo neighbor is reachable: move z there, shift witnesses to
    // y's class, pull y into z's old class.
    for (Vertex z : solos) {
        auto sz = solo_neighbors(st, z);
        auto useful = useful_subset(st, sz);
        for (Color beta : st.phi) {
            if (!is_movable(st, z, beta))
                continue;
            for (Vertex y : useful) {
                auto path = shortest_color_path(st.H, {beta}, {st.color[y]});
                if (!path)
                    continue;
                Color fz = st.color[z];
                return commit_improvement(st, "solo-shift", [&] {
                    move_vertex(st, z, beta, trace);
                    shift_witnesses(st, *path, trace);
                    move_vertex(st, y, fz, trace);
                });
            }
        }
    }

    return false;
}

} // namespace equilist
