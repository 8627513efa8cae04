#include "equilist/aux_digraph.hpp"

#include <algorithm>
#include <deque>

#include "equilist/errors.hpp"

namespace equilist {

PartialState::PartialState(const Instance& instance)
    : inst(&instance), active(instance.g.n, 0), color(instance.g.n, -1)
{
    for (const auto& list : instance.lists)
        for (Color c : list)
            color_bound = std::max(color_bound, c + 1);
    rebuild_level();
}

int PartialState::class_size(Color c) const
{
    auto it = classes.find(c);
    return it == classes.end() ? 0 : static_cast<int>(it->second.size());
}

bool PartialState::in_gamma(Color c) const
{
    return std::binary_search(gamma.begin(), gamma.end(), c);
}

bool PartialState::in_lambda(Color c) const
{
    return std::binary_search(lambda.begin(), lambda.end(), c);
}

bool PartialState::in_phi(Color c) const
{
    return std::binary_search(phi.begin(), phi.end(), c);
}

void PartialState::rebuild_level()
{
    gamma.clear();
    std::vector<char> present(color_bound, 0);
    for (Vertex v = 0; v < inst->g.n; ++v)
        if (active[v] || (pending && *pending == v))
            for (Color c : inst->lists[v])
                present[c] = 1;
    for (Color c = 0; c < color_bound; ++c)
        if (present[c])
            gamma.push_back(c);

    active_count = 0;
    classes.clear();
    for (Color c : gamma)
        classes[c] = {};
    for (Vertex v = 0; v < inst->g.n; ++v) {
        if (!active[v])
            continue;
        ++active_count;
        classes[color[v]].push_back(v);
    }
    // Light/full threshold for the level: the pending vertex counts, since
    // the extension targets the graph that includes it.
    int level_n = active_count + (pending ? 1 : 0);
    s = level_n == 0 ? 0 : (level_n + inst->r - 1) / inst->r;
}

void PartialState::set_color(Vertex v, Color c)
{
    if (!active[v])
        fail(ErrKind::IllegalMove, "set_color on inactive vertex");
    auto& old_members = classes[color[v]];
    old_members.erase(std::find(old_members.begin(), old_members.end(), v));
    color[v] = c;
    auto& members = classes[c];
    members.insert(std::upper_bound(members.begin(), members.end(), v), v);
}

void PartialState::activate(Vertex v, Color c)
{
    if (active[v])
        fail(ErrKind::IllegalMove, "activate on already active vertex");
    if (pending && *pending == v)
        pending.reset();
    active[v] = 1;
    ++active_count;
    color[v] = c;
    auto& members = classes[c];
    members.insert(std::upper_bound(members.begin(), members.end(), v), v);
    // The light threshold is not refreshed here: the caller decides when the
    // level advances (the post-insertion shift still uses the old s).
}

Coloring PartialState::to_coloring() const
{
    for (Vertex v = 0; v < inst->g.n; ++v)
        if (!active[v])
            fail(ErrKind::InternalInvariantViolation, "to_coloring with inactive vertices");
    return Coloring{color};
}

bool is_movable(const PartialState& st, Vertex x, Color beta)
{
    if (!st.inst->list_has(x, beta) || st.color[x] == beta)
        return false;
    for (Vertex w : st.inst->g.adj[x])
        if (st.active[w] && st.color[w] == beta)
            return false;
    return true;
}

bool is_insertable(const PartialState& st, Vertex p, Color beta)
{
    if (!st.inst->list_has(p, beta))
        return false;
    for (Vertex w : st.inst->g.adj[p])
        if (st.active[w] && st.color[w] == beta)
            return false;
    return true;
}

AuxDigraph build_H(const PartialState& st)
{
    AuxDigraph H;
    H.nodes = st.gamma;
    const int K = static_cast<int>(st.gamma.size());
    std::vector<int> gidx(st.color_bound, -1);
    for (int i = 0; i < K; ++i)
        gidx[st.gamma[i]] = i;
    // Bucket witnesses by target color, one source class at a time; marking
    // each vertex's neighbor colors once replaces a per-color adjacency scan.
    std::vector<std::vector<Vertex>> bucket(K);
    std::vector<char> nb(st.color_bound, 0);
    std::vector<Color> touched, targets;
    for (const auto& [alpha, members] : st.classes) {
        if (alpha < 0 || alpha >= st.color_bound || gidx[alpha] < 0)
            continue;
        for (Vertex x : members) {
            touched.clear();
            for (Vertex w : st.inst->g.adj[x]) {
                if (!st.active[w])
                    continue;
                Color cw = st.color[w];
                if (!nb[cw]) {
                    nb[cw] = 1;
                    touched.push_back(cw);
                }
            }
            for (Color beta : st.inst->lists[x])
                if (beta != alpha && gidx[beta] >= 0 && !nb[beta])
                    bucket[gidx[beta]].push_back(x);
            for (Color c : touched)
                nb[c] = 0;
        }
        // Class members are sorted and classes iterate in ascending color
        // order, so each bucket is sorted and arcs arrive in key order.
        targets.clear();
        for (int bi = 0; bi < K; ++bi) {
            if (bucket[bi].empty())
                continue;
            targets.push_back(st.gamma[bi]);
            H.witnesses.emplace_hint(H.witnesses.end(), std::make_pair(alpha, st.gamma[bi]),
                                     std::move(bucket[bi]));
            bucket[bi].clear();
        }
        if (!targets.empty())
            H.out.emplace_hint(H.out.end(), alpha, targets);
    }
    return H;
}

std::vector<Color> accessible_colors(const PartialState& st, const AuxDigraph& H)
{
    // Backward traversal from the light colors over reversed arcs, on dense
    // color indices.
    const int K = static_cast<int>(st.gamma.size());
    std::vector<int> gidx(st.color_bound, -1);
    for (int i = 0; i < K; ++i)
        gidx[st.gamma[i]] = i;
    std::vector<std::vector<int>> rev(K);
    for (const auto& [arc, w] : H.witnesses) {
        int ai = gidx[arc.first];
        int bi = gidx[arc.second];
        if (ai >= 0 && bi >= 0)
            rev[bi].push_back(ai);
    }
    std::vector<char> seen(K, 0);
    std::vector<int> queue;
    for (Color c : st.lambda0)
        if (gidx[c] >= 0 && !seen[gidx[c]]) {
            seen[gidx[c]] = 1;
            queue.push_back(gidx[c]);
        }
    for (size_t head = 0; head < queue.size(); ++head)
        for (int p : rev[queue[head]])
            if (!seen[p]) {
                seen[p] = 1;
                queue.push_back(p);
            }
    std::vector<Color> lambda;
    for (int i = 0; i < K; ++i)
        if (seen[i])
            lambda.push_back(st.gamma[i]);
    return lambda; // ascending gamma order keeps this sorted
}

std::vector<Color> forward_closure(const AuxDigraph& H, const std::vector<Color>& theta)
{
    std::map<Color, char> seen;
    std::deque<Color> queue;
    for (Color c : theta) {
        if (!seen[c]) {
            seen[c] = 1;
            queue.push_back(c);
        }
    }
    while (!queue.empty()) {
        Color c = queue.front();
        queue.pop_front();
        auto it = H.out.find(c);
        if (it == H.out.end())
            continue;
        for (Color t : it->second) {
            if (!seen[t]) {
                seen[t] = 1;
                queue.push_back(t);
            }
        }
    }
    std::vector<Color> closure;
    for (const auto& [c, v] : seen)
        if (v)
            closure.push_back(c);
    return closure;
}

void PartialState::analyze(int s_override)
{
    int threshold = s_override >= 0 ? s_override : s;
    H = build_H(*this);
    lambda0.clear();
    for (Color c : gamma)
        if (class_size(c) < threshold || threshold == 0)
            lambda0.push_back(c);
    if (threshold == 0)
        lambda0 = gamma; // degenerate empty level: everything is light
    int saved = s;
    s = threshold;
    lambda = accessible_colors(*this, H);
    s = saved;
    phi.clear();
    std::set_difference(gamma.begin(), gamma.end(), lambda.begin(), lambda.end(),
                        std::back_inserter(phi));
    A_size = 0;
    for (Color c : lambda)
        A_size += class_size(c);
    b = static_cast<int>(phi.size());
    a = inst->r - b;
}

namespace {

std::optional<ColorPath> bfs_path(const AuxDigraph& H, const std::vector<Color>& sources,
                                  const std::vector<Color>& targets)
{
    std::map<Color, Color> parent; // child -> parent on BFS tree
    std::map<Color, char> seen;
    std::deque<Color> queue;
    std::vector<Color> sorted_sources = sources;
    std::sort(sorted_sources.begin(), sorted_sources.end());
    for (Color c : sorted_sources) {
        if (!seen[c]) {
            seen[c] = 1;
            queue.push_back(c);
        }
    }
    auto is_target = [&](Color c) {
        return std::binary_search(targets.begin(), targets.end(), c);
    };
    std::optional<Color> found;
    for (Color c : sorted_sources)
        if (is_target(c)) {
            found = c;
            break;
        }
    while (!found && !queue.empty()) {
        Color c = queue.front();
        queue.pop_front();
        auto it = H.out.find(c);
        if (it == H.out.end())
            continue;
        for (Color t : it->second) {
            if (seen[t])
                continue;
            seen[t] = 1;
            parent[t] = c;
            if (is_target(t)) {
                found = t;
                break;
            }
            queue.push_back(t);
        }
    }
    if (!found)
        return std::nullopt;
    std::vector<Color> colors{*found};
    while (parent.count(colors.back()))
        colors.push_back(parent[colors.back()]);
    std::reverse(colors.begin(), colors.end());
    ColorPath path;
    path.colors = colors;
    for (size_t i = 0; i + 1 < colors.size(); ++i)
        path.witnesses.push_back(H.witnesses.at({colors[i], colors[i + 1]}).front());
    return path;
}

} // namespace

ColorPath path_to_light(const PartialState& st, const AuxDigraph& H, Color gamma)
{
    auto path = bfs_path(H, {gamma}, st.lambda0);
    if (!path)
        fail(ErrKind::NotAccessible, "color " + std::to_string(gamma) + " is not accessible");
    return *path;
}

std::optional<ColorPath> shortest_color_path(const AuxDigraph& H,
                                             const std::vector<Color>& sources,
                                             const std::vector<Color>& targets)
{
    std::vector<Color> sorted_targets = targets;
    std::sort(sorted_targets.begin(), sorted_targets.end());
    return bfs_path(H, sources, sorted_targets);
}

} // namespace equilist
