#include "equilist/solver.hpp"

#include <algorithm>
#include <string>

#include "equilist/errors.hpp"

namespace equilist {

namespace {

[[noreturn]] void violate(const Trace& trace, const std::string& msg)
{
    Error e(ErrKind::InternalInvariantViolation, msg);
    e.trace_jsonl = trace_to_jsonl(trace);
    throw e;
}

int active_degree(const PartialState& st, Vertex v)
{
    int d = 0;
    for (Vertex w : st.inst->g.adj[v])
        if (st.active[w])
            ++d;
    return d;
}

// Active neighbors of v whose class is inaccessible, sorted by id.
std::vector<Vertex> neighbors_in_B(const PartialState& st, Vertex v)
{
    std::vector<Vertex> nb;
    for (Vertex w : st.inst->g.adj[v])
        if (st.active[w] && st.in_phi(st.color[w]))
            nb.push_back(w);
    return nb;
}

int edges_into_class(const PartialState& st, Vertex v, Color c)
{
    int cnt = 0;
    for (Vertex w : st.inst->g.adj[v])
        if (st.active[w] && st.color[w] == c)
            ++cnt;
    return cnt;
}

void push_raw_event(PartialState& st, Trace& trace, TraceEvent e)
{
    e.step = trace.next_step++;
    e.snapshot_hash = snapshot_hash(st);
    trace.events.push_back(std::move(e));
}

// Scans the whole active graph for a monochromatic edge.
void require_proper(const PartialState& st, const Trace& trace, const char* what)
{
    const Graph& g = st.inst->g;
    for (Vertex u = 0; u < g.n; ++u) {
        if (!st.active[u])
            continue;
        for (Vertex w : g.adj[u])
            if (w > u && st.active[w] && st.color[w] == st.color[u])
                violate(trace, std::string(what) + " left the edge " + std::to_string(u) + "-" +
                                   std::to_string(w) + " monochromatic");
    }
}

bool subset_of(const std::vector<Color>& small, const std::vector<Color>& big)
{
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

} // namespace

Rational pair_weight(const PartialState& st, const MuMap& mu, Vertex x, Vertex y)
{
    Color fx = st.color[x];
    Color fy = st.color[y];
    if (!st.in_phi(fy) || !st.inst->list_has(y, fx) || !st.inst->g.has_edge(x, y))
        return Rational(0);
    auto it = mu.find(fy);
    Rational m = it == mu.end() ? Rational(0) : it->second;
    int in_class = edges_into_class(st, y, fx); // >= 1 because x itself counts
    return m / in_class;
}

Rational vertex_weight(const PartialState& st, const MuMap& mu, Vertex x)
{
    Rational total(0);
    for (Vertex y : st.inst->g.adj[x])
        if (st.active[y])
            total += pair_weight(st, mu, x, y);
    return total;
}

namespace {

SoloAnalysis find_solo_impl(const PartialState& st, const MuMap& mu, const Rational& g,
                            const Trace& trace)
{
    Rational mu_phi(0);
    for (Color c : st.phi) {
        auto it = mu.find(c);
        if (it == mu.end())
            violate(trace, "weighting does not cover every inaccessible color");
        mu_phi += it->second;
    }
    if (mu_phi < Rational(st.b) - g)
        violate(trace, "weighting is below the b - g threshold");

    // Candidate set: accessible vertices, restricted to the full accessible
    // class when one exists. Two full accessible classes cannot coexist here.
    std::vector<Color> full_lambda;
    for (Color c : st.lambda)
        if (st.s > 0 && st.class_size(c) == st.s)
            full_lambda.push_back(c);
    if (full_lambda.size() >= 2)
        violate(trace, "two full accessible classes at an improvement fixpoint");

    SoloAnalysis best;
    bool have = false;
    for (Vertex x = 0; x < st.inst->g.n; ++x) {
        if (!st.active[x] || !st.in_lambda(st.color[x]))
            continue;
        if (!full_lambda.empty() && st.color[x] != full_lambda[0])
            continue;
        Rational w = vertex_weight(st, mu, x);
        if (!have || w > best.w_z) {
            best.z = x;
            best.w_z = w;
            have = true;
        }
    }
    if (!have)
        violate(trace, "no candidate vertex for the solo search");
    if (best.w_z <= mu_phi)
        violate(trace, "maximum vertex weight does not exceed the total weighting");

    Vertex z = best.z;
    best.mu = mu;
    best.S_z = solo_neighbors(st, z);
    best.S_star = useful_subset(st, best.S_z);
    best.edges_to_B = static_cast<int>(neighbors_in_B(st, z).size());

    if (best.S_z.empty())
        violate(trace, "maximum-weight vertex has no solo neighbors");
    // Neighbors in B land in distinct listed inaccessible classes, except
    // possibly one class outside the list.
    int listed_phi = 0;
    for (Color c : st.phi)
        if (st.inst->list_has(z, c))
            ++listed_phi;
    if (best.edges_to_B > listed_phi + 1)
        violate(trace, "solo vertex has too many edges into inaccessible classes");
    if (static_cast<int>(best.S_z.size()) >= 5 &&
        static_cast<int>(best.S_star.size()) < static_cast<int>(best.S_z.size()) - 1)
        violate(trace, "two non-useful solo neighbors (forbidden bipartite minor)");

    int in_theta = 0; // solo neighbors whose class has full weight
    for (Vertex y : best.S_z)
        if (mu.at(st.color[y]) == 1)
            ++in_theta;

    if (g == 0) {
        if (static_cast<int>(best.S_z.size()) < st.b)
            violate(trace, "solo vertex has fewer solo neighbors than inaccessible classes");
        if (best.edges_to_B != st.b + 1)
            violate(trace, "solo vertex does not meet every inaccessible class plus one");
        for (Color c : st.phi)
            if (!st.inst->list_has(z, c))
                violate(trace, "inaccessible color missing from the solo vertex list");
    } else {
        if (best.edges_to_B < st.b || best.edges_to_B > st.b + 1)
            violate(trace, "solo vertex edge count into B out of range");
        if (best.edges_to_B == st.b) {
            if (in_theta + best.edges_to_B < 2 * st.b)
                violate(trace, "solo neighbors in the weighted core are too few");
        } else if (in_theta < st.b - 1) {
            violate(trace, "solo neighbors in the weighted core are too few");
        }
    }

    for (Color c : st.phi)
        if (is_movable(st, z, c))
            best.Psi.push_back(c);
    best.Theta = forward_closure(st.H, best.Psi);
    if (!subset_of(best.Theta, st.phi))
        violate(trace, "closure of the movable inaccessible classes escapes them");
    return best;
}

ExtremeWitness make_extreme_witness(const PartialState& st, const SoloAnalysis& an,
                                    const std::vector<Color>& theta0, const Trace& trace)
{
    ExtremeWitness ew;
    ew.z0 = an.z;
    ew.Theta0 = theta0;
    ew.analysis = an;
    Vertex z0 = an.z;

    // Theta0 is a sink of size two whose classes absorb every move of z0
    // into an inaccessible class.
    if (forward_closure(st.H, theta0) != theta0)
        violate(trace, "candidate sink is not closed");
    if (static_cast<int>(theta0.size()) > 2)
        violate(trace, "candidate sink is too large");
    if (!subset_of(an.Psi, theta0))
        violate(trace, "solo vertex is movable outside the candidate sink");
    if (static_cast<int>(an.S_z.size()) < 7)
        violate(trace, "solo vertex has fewer than seven solo neighbors");

    // Every neighbor in B carries a listed color (enables the final swaps).
    auto nb = neighbors_in_B(st, z0);
    for (Vertex y : nb)
        if (!st.inst->list_has(z0, st.color[y]))
            violate(trace, "neighbor in an inaccessible class outside the solo vertex list");

    for (Vertex y : an.S_star) {
        Color c = st.color[y];
        if (ew.Upsilon.empty() || ew.Upsilon.back() != c)
            ew.Upsilon.push_back(c);
    }
    std::sort(ew.Upsilon.begin(), ew.Upsilon.end());
    ew.Upsilon.erase(std::unique(ew.Upsilon.begin(), ew.Upsilon.end()), ew.Upsilon.end());
    for (Color c : st.phi) {
        if (std::binary_search(ew.Upsilon.begin(), ew.Upsilon.end(), c))
            continue;
        if (edges_into_class(st, z0, c) >= 1)
            ew.UpsilonPrime.push_back(c);
    }

    // The counting argument pins the structure exactly.
    if (static_cast<int>(theta0.size()) != 2)
        violate(trace, "sink size is not two");
    if (static_cast<int>(ew.Upsilon.size()) != 3)
        violate(trace, "solo-neighbor classes do not number three");
    if (static_cast<int>(an.S_z.size()) != 7)
        violate(trace, "solo neighbor count is not seven");
    std::vector<Color> inter;
    std::set_intersection(ew.Upsilon.begin(), ew.Upsilon.end(), theta0.begin(), theta0.end(),
                          std::back_inserter(inter));
    if (!inter.empty())
        violate(trace, "solo-neighbor classes intersect the sink");

    // Each solo-neighbor class holds exactly the two useful solo neighbors
    // of z0 that touch it, and nothing else adjacent to z0.
    for (Color u : ew.Upsilon) {
        std::vector<Vertex> in_u;
        for (Vertex y : nb)
            if (st.color[y] == u)
                in_u.push_back(y);
        if (in_u.size() != 2)
            violate(trace, "solo-neighbor class not met exactly twice");
        for (Vertex y : in_u)
            if (!std::binary_search(an.S_star.begin(), an.S_star.end(), y))
                violate(trace, "non-useful neighbor inside a solo-neighbor class");
    }
    std::vector<Color> theta0_set = theta0;
    for (Vertex y : nb) {
        Color c = st.color[y];
        if (std::binary_search(an.S_star.begin(), an.S_star.end(), y))
            continue;
        if (std::binary_search(theta0_set.begin(), theta0_set.end(), c))
            continue;
        if (!std::binary_search(ew.UpsilonPrime.begin(), ew.UpsilonPrime.end(), c))
            violate(trace, "stray neighbor outside the structured classes");
    }
    for (Color c : ew.UpsilonPrime)
        if (edges_into_class(st, z0, c) > 1)
            violate(trace, "secondary class met more than once");

    // Every remaining inaccessible class reaches a solo-neighbor class.
    for (Color phi : st.phi) {
        if (std::binary_search(theta0_set.begin(), theta0_set.end(), phi))
            continue;
        auto reach = forward_closure(st.H, {phi});
        std::vector<Color> hit;
        std::set_intersection(reach.begin(), reach.end(), ew.Upsilon.begin(), ew.Upsilon.end(),
                              std::back_inserter(hit));
        if (hit.empty())
            violate(trace, "inaccessible class cannot reach a solo-neighbor class");
    }
    return ew;
}

// Applies the contradiction sequence available when the second solo vertex
// is movable into the lone class outside the weighted core. Strictly
// increases the potential; the caller re-enters the improvement loop.
void apply_case2_contradiction(PartialState& st, const SoloAnalysis& an_z,
                               const SoloAnalysis& an_z2, Color gamma0, Trace& trace)
{
    Vertex z = an_z.z;
    Vertex z2 = an_z2.z;
    if (z == z2)
        violate(trace, "both solo passes chose a vertex movable outside its closure");
    Potential before = potential(st);

    std::vector<std::tuple<Vertex, Color, Color>> moves;
    auto raw_move = [&](Vertex v, Color to) {
        if (!st.inst->list_has(v, to))
            violate(trace, "contradiction sequence assigns a color outside a list");
        moves.emplace_back(v, st.color[v], to);
        st.set_color(v, to);
    };

    Color alpha_z = st.color[z];
    Color alpha_z2 = st.color[z2];

    // Pick a useful solo neighbor of z2 in the weighted core with two
    // nonadjacent partners among the useful solo neighbors of z.
    Vertex y_prime = -1;
    std::vector<Vertex> partners;
    for (Vertex y : an_z2.S_star) {
        if (an_z2.mu.at(st.color[y]) != 1)
            continue;
        std::vector<Vertex> non;
        for (Vertex cand : an_z.S_star)
            if (cand != y && !st.inst->g.has_edge(y, cand))
                non.push_back(cand);
        if (non.size() >= 2) {
            y_prime = y;
            partners = non;
            break;
        }
    }
    if (y_prime == -1)
        violate(trace, "no core solo neighbor with two nonadjacent partners");
    Color theta_y = st.color[y_prime];

    raw_move(z2, gamma0);
    raw_move(y_prime, alpha_z2);

    // Route z into its movable classes and free the partner class by a
    // witness shift toward the class y_prime vacated.
    st.analyze();
    std::vector<Color> psi_now;
    for (Color c : an_z.Psi)
        if (is_movable(st, z, c))
            psi_now.push_back(c);
    if (psi_now.empty())
        violate(trace, "contradiction sequence lost every movable class");
    auto path = shortest_color_path(st.H, psi_now, {theta_y});
    if (!path)
        violate(trace, "vacated class unreachable from the movable classes");
    for (int i = static_cast<int>(path->witnesses.size()) - 1; i >= 0; --i) {
        Vertex w = path->witnesses[i];
        if (st.color[w] != path->colors[i] || !is_movable(st, w, path->colors[i + 1]))
            violate(trace, "stale witness inside the contradiction sequence");
        raw_move(w, path->colors[i + 1]);
    }
    if (!is_movable(st, z, path->colors.front()))
        violate(trace, "solo vertex lost its move into the path head");
    raw_move(z, path->colors.front());
    raw_move(partners.front(), alpha_z);

    require_proper(st, trace, "contradiction sequence");
    st.analyze();
    if (!(before < potential(st)))
        violate(trace, "contradiction sequence did not increase the potential");
    if (!level_SE_ok(st))
        violate(trace, "contradiction sequence broke strong equitability");
    TraceEvent e;
    e.kind = TraceEvent::Kind::SwapSolo;
    e.moves = std::move(moves);
    push_raw_event(st, trace, std::move(e));
}

// Extends the coloring using an extreme witness. Returns true when the
// pending vertex was inserted; false when the attempt degenerated into a
// strict improvement instead.
bool extreme_extend(PartialState& st, const ExtremeWitness& ew, Vertex p, Trace& trace)
{
    const Graph& g = st.inst->g;
    Vertex z0 = ew.z0;
    Color alpha = st.color[z0];
    Potential before = potential(st);

    struct Candidate {
        Color phi1;
        ColorPath path;
        Vertex last; // the vertex that enters the terminal class
    };
    std::vector<Candidate> cands;
    for (Color phi1 : st.phi) {
        if (std::binary_search(ew.Theta0.begin(), ew.Theta0.end(), phi1))
            continue;
        if (!is_insertable(st, p, phi1))
            continue;
        auto path = shortest_color_path(st.H, {phi1}, ew.Upsilon);
        if (!path)
            violate(trace, "insertable class cannot reach a solo-neighbor class");
        Vertex last = path->witnesses.empty() ? p : path->witnesses.back();
        cands.push_back({phi1, std::move(*path), last});
    }
    if (cands.empty())
        violate(trace, "pending vertex fits no class outside the sink");

    const Candidate* pick = nullptr;
    for (const auto& c : cands)
        if (!g.has_edge(c.last, z0)) {
            pick = &c;
            break;
        }

    if (pick) {
        // The terminal class ends up holding z0 plus one of its useful solo
        // neighbors; shifting that neighbor onwards to z0's old class and on
        // to a light class restores a proper level.
        Color upsilon = pick->path.colors.back();
        std::vector<Vertex> pair;
        for (Vertex y : ew.analysis.S_star)
            if (st.color[y] == upsilon)
                pair.push_back(y);
        if (pair.size() != 2)
            violate(trace, "terminal class does not hold exactly two useful neighbors");
        Vertex y = pair[0], y2 = pair[1];

        std::vector<std::tuple<Vertex, Color, Color>> moves;
        auto raw_move = [&](Vertex v, Color to) {
            if (!st.inst->list_has(v, to))
                violate(trace, "extension assigns a color outside a list");
            moves.emplace_back(v, st.color[v], to);
            st.set_color(v, to);
        };
        for (int i = static_cast<int>(pick->path.witnesses.size()) - 1; i >= 0; --i) {
            Vertex w = pick->path.witnesses[i];
            if (st.color[w] != pick->path.colors[i] ||
                !is_movable(st, w, pick->path.colors[i + 1]))
                violate(trace, "stale witness on the insertion path");
            raw_move(w, pick->path.colors[i + 1]);
        }
        if (!is_insertable(st, p, pick->phi1))
            violate(trace, "pending vertex lost its slot during the shift");
        moves.emplace_back(p, -1, pick->phi1);
        st.activate(p, pick->phi1);
        raw_move(z0, upsilon);
        raw_move(y, alpha);

        // The old class of z0 stays accessible; drain the now-overfull
        // terminal class through it down to a light class.
        st.analyze();
        if (!st.in_lambda(alpha))
            violate(trace, "old class of the solo vertex became inaccessible");
        ColorPath tail = path_to_light(st, st.H, alpha);
        std::vector<Color> colors2;
        colors2.push_back(upsilon);
        colors2.insert(colors2.end(), tail.colors.begin(), tail.colors.end());
        std::vector<Vertex> witnesses2;
        witnesses2.push_back(y2);
        witnesses2.insert(witnesses2.end(), tail.witnesses.begin(), tail.witnesses.end());
        for (int i = static_cast<int>(witnesses2.size()) - 1; i >= 0; --i) {
            Vertex w = witnesses2[i];
            if (st.color[w] != colors2[i] || !is_movable(st, w, colors2[i + 1]))
                violate(trace, "stale witness on the draining path");
            raw_move(w, colors2[i + 1]);
        }

        require_proper(st, trace, "extension sequence");
        st.rebuild_level();
        if (!level_SE_ok(st))
            violate(trace, "extension broke strong equitability");
        TraceEvent e;
        e.kind = TraceEvent::Kind::SwapSolo;
        e.moves = std::move(moves);
        push_raw_event(st, trace, std::move(e));
        return true;
    }

    // Every candidate ends next to z0: rotate z0 through the penultimate
    // class instead, which strictly grows the accessible side.
    for (const auto& c : cands) {
        if (c.path.witnesses.empty())
            continue; // the pending vertex itself is adjacent to z0
        Color upsilon = c.path.colors.back();
        Color prev = c.path.colors[c.path.colors.size() - 2];
        Vertex w = c.path.witnesses.back();
        if (edges_into_class(st, z0, prev) != 1)
            violate(trace, "penultimate class meets the solo vertex more than once");
        std::vector<Vertex> pair;
        for (Vertex y : ew.analysis.S_star)
            if (st.color[y] == upsilon)
                pair.push_back(y);
        if (pair.size() != 2)
            violate(trace, "terminal class does not hold exactly two useful neighbors");
        apply_swap(st, {{z0, alpha, prev}, {w, prev, upsilon}, {pair[0], upsilon, alpha}},
                   trace);
        st.analyze();
        if (!(before < potential(st)))
            violate(trace, "rotation did not increase the potential");
        if (!level_SE_ok(st))
            violate(trace, "rotation broke strong equitability");
        return false;
    }
    violate(trace, "every insertion slot is adjacent to the solo vertex at distance one");
}

void check_stuck_invariants(const PartialState& st, Vertex p, const Trace& trace)
{
    if (st.lambda0.empty())
        violate(trace, "no light class at the current level");
    if (st.b < st.r() - 2)
        violate(trace, "blocked vertex with fewer inaccessible classes than required");
    if (active_degree(st, p) < st.a)
        violate(trace, "blocked vertex has fewer neighbors than accessible colors");
    for (Color c : st.phi)
        if (st.class_size(c) != st.s)
            violate(trace, "inaccessible class that is not full");
    long long cap = static_cast<long long>(st.a) * st.s - 1;
    if (st.A_size > cap)
        violate(trace, "accessible side larger than its ceiling");
}

// Runs the stalled-insertion machinery once. Returns true when p was
// inserted, false when the step was a strict improvement.
bool run_finisher(PartialState& st, Vertex p, Trace& trace, SolveStats& stats)
{
    MuMap mu1;
    for (Color c : st.phi)
        mu1[c] = 1;
    SoloAnalysis an = find_solo_impl(st, mu1, Rational(0), trace);

    ExtremeWitness ew;
    if (static_cast<int>(an.Theta.size()) <= 2) {
        ++stats.extreme_case1;
        ew = make_extreme_witness(st, an, an.Theta, trace);
    } else {
        ++stats.extreme_case2;
        if (static_cast<int>(an.Theta.size()) != st.r() - 2 || st.b != st.r() - 1 || st.a != 1)
            violate(trace, "large closure without the forced class split");
        for (Vertex y : an.S_star)
            if (std::binary_search(an.Theta.begin(), an.Theta.end(), st.color[y]))
                violate(trace, "useful solo neighbor inside the closure");
        std::vector<Color> rest;
        std::set_difference(st.phi.begin(), st.phi.end(), an.Theta.begin(), an.Theta.end(),
                            std::back_inserter(rest));
        if (rest.size() != 1)
            violate(trace, "closure misses more than one inaccessible class");
        Color gamma0 = rest[0];

        MuMap mu2;
        for (Color c : an.Theta)
            mu2[c] = 1;
        mu2[gamma0] = Rational(1, 2);
        SoloAnalysis an2 = find_solo_impl(st, mu2, Rational(1, 2), trace);

        if (std::binary_search(an2.Psi.begin(), an2.Psi.end(), gamma0)) {
            apply_case2_contradiction(st, an, an2, gamma0, trace);
            return false;
        }
        // The second solo vertex avoids the leftover class, which pins its
        // edges into B onto listed classes.
        if (!st.inst->list_has(an2.z, gamma0)) {
            std::vector<Vertex> nb = neighbors_in_B(st, an2.z);
            if (static_cast<int>(nb.size()) > st.b)
                violate(trace, "unlisted leftover class with too many edges into B");
            for (Vertex y : nb)
                if (st.color[y] == gamma0)
                    violate(trace, "neighbor in the leftover class despite the unlisted color");
        } else {
            if (edges_into_class(st, an2.z, gamma0) < 1)
                violate(trace, "listed leftover class without a blocking neighbor");
            if (an2.edges_to_B != st.b + 1)
                violate(trace, "listed leftover class without the full edge count");
        }
        ew = make_extreme_witness(st, an2, an2.Theta, trace);
    }
    return extreme_extend(st, ew, p, trace);
}

} // namespace

// Inserts p into the current level, improving the coloring as needed.
void insert_pending(PartialState& st, Vertex p, Trace& trace, SolveStats& stats)
{
    long long steps = 0;
    const long long bound = (static_cast<long long>(st.active_count) + 1) * st.r();
    auto note_steps = [&] {
        stats.max_improve_steps_per_insertion =
            std::max(stats.max_improve_steps_per_insertion, steps);
    };
    while (true) {
        st.analyze();

        // Direct insertion: smallest accessible class that accepts p, with a
        // witness shift to keep the level strongly equitable.
        bool inserted = false;
        for (Color lam : st.lambda) {
            if (!is_insertable(st, p, lam))
                continue;
            ColorPath path = path_to_light(st, st.H, lam);
            shift_witnesses(st, path, trace);
            insert_vertex(st, p, lam, trace);
            st.rebuild_level();
            if (!level_SE_ok(st))
                violate(trace, "insertion broke strong equitability");
            ++stats.direct_insertions;
            inserted = true;
            break;
        }
        if (inserted) {
            note_steps();
            return;
        }

        check_stuck_invariants(st, p, trace);

        ++steps;
        if (steps > bound)
            violate(trace, "improvement loop exceeded its step budget");
        if (improve(st, trace)) {
            ++stats.improve_steps;
            continue;
        }

        ++stats.finisher_runs;
        if (run_finisher(st, p, trace, stats)) {
            note_steps();
            return;
        }
        ++stats.finisher_improvements;
    }
}

SoloAnalysis find_solo(const PartialState& st, const MuMap& mu, const Rational& g)
{
    Trace empty;
    return find_solo_impl(st, mu, g, empty);
}

Coloring se_color(const Instance& inst, Trace* trace_out, SolveStats* stats_out)
{
    inst.validate();
    if (inst.r < 9)
        fail(ErrKind::UnsupportedParameter,
             "color budget below nine is outside the supported range");
    if (inst.g.max_degree() > inst.r)
        fail(ErrKind::HypothesisViolated, "maximum degree exceeds the color budget");

    Trace local_trace;
    Trace& trace = trace_out ? *trace_out : local_trace;
    SolveStats local_stats;
    SolveStats& stats = stats_out ? *stats_out : local_stats;

    int n = inst.g.n;
    if (n == 0)
        return Coloring{};

    // Elimination order: repeatedly remove a minimum-degree vertex (smallest
    // id on ties); vertices are re-inserted in reverse.
    std::vector<int> deg(n);
    for (Vertex v = 0; v < n; ++v)
        deg[v] = inst.g.degree(v);
    std::vector<char> alive(n, 1);
    std::vector<Vertex> removed;
    for (int k = n; k > 1; --k) {
        Vertex pick = -1;
        for (Vertex v = 0; v < n; ++v)
            if (alive[v] && (pick == -1 || deg[v] < deg[pick]))
                pick = v;
        alive[pick] = 0;
        for (Vertex w : inst.g.adj[pick])
            if (alive[w])
                --deg[w];
        removed.push_back(pick);
    }
    Vertex v0 = -1;
    for (Vertex v = 0; v < n; ++v)
        if (alive[v])
            v0 = v;

    PartialState st(inst);
    st.pending = v0;
    st.rebuild_level();
    insert_vertex(st, v0, inst.lists[v0].front(), trace);

    for (auto it = removed.rbegin(); it != removed.rend(); ++it) {
        st.pending = *it;
        st.rebuild_level();
        insert_pending(st, *it, trace, stats);
    }

    Coloring result = st.to_coloring();
    SEReport report = check_SE(inst, result);
    if (!report.valid) {
        Error e(ErrKind::InternalInvariantViolation, "final coloring is not strongly equitable");
        e.trace_jsonl = trace_to_jsonl(trace);
        throw e;
    }
    return result;
}

} // namespace equilist
