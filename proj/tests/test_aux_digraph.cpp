#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "equilist/aux_digraph.hpp"
#include "equilist/errors.hpp"

using namespace equilist;

namespace {

Instance plain_instance(Graph g, int r)
{
    Instance inst;
    inst.g = std::move(g);
    inst.r = r;
    std::vector<Color> all(r);
    for (int c = 0; c < r; ++c)
        all[c] = c;
    inst.lists.assign(inst.g.n, all);
    return inst;
}

// A single edge, both endpoints listed {0,1,2}, colored 0 and 1.
PartialState edge_state(Instance& inst)
{
    Graph g(2);
    g.add_edge(0, 1);
    inst = plain_instance(std::move(g), 3);
    PartialState st(inst);
    st.activate(0, 0);
    st.activate(1, 1);
    st.rebuild_level();
    st.analyze();
    return st;
}

// Arc set computed straight from the definition, as ordered color pairs.
std::vector<std::pair<Color, Color>> naive_arcs(const PartialState& st)
{
    std::vector<std::pair<Color, Color>> arcs;
    for (Color alpha : st.gamma)
        for (Color beta : st.gamma) {
            if (alpha == beta)
                continue;
            bool found = false;
            for (Vertex x = 0; x < st.instance().g.n && !found; ++x)
                if (st.active[x] && st.color[x] == alpha && is_movable(st, x, beta))
                    found = true;
            if (found)
                arcs.emplace_back(alpha, beta);
        }
    return arcs;
}

} // namespace

TEST_CASE("single edge: arcs, light classes and accessibility")
{
    Instance inst;
    PartialState st = edge_state(inst);

    CHECK(st.s == 1);
    CHECK(st.gamma == std::vector<Color>{0, 1, 2});
    CHECK(st.is_light(2)); // empty class below the threshold
    CHECK(!st.is_light(0));

    // Both colored vertices can only move to the empty class 2.
    REQUIRE(st.H.witnesses.size() == 2);
    CHECK(st.H.witnesses.at({0, 2}) == std::vector<Vertex>{0});
    CHECK(st.H.witnesses.at({1, 2}) == std::vector<Vertex>{1});
    CHECK(!st.H.has_arc(0, 1));
    CHECK(!st.H.has_arc(1, 0));

    CHECK(st.lambda0 == std::vector<Color>{2});
    CHECK(st.lambda == std::vector<Color>{0, 1, 2});
    CHECK(st.phi.empty());
    CHECK(st.b == 0);
    CHECK(st.a == 3);
    CHECK(st.A_size == 2);
}

TEST_CASE("single edge: path to a light class")
{
    Instance inst;
    PartialState st = edge_state(inst);
    ColorPath p = path_to_light(st, st.H, 0);
    CHECK(p.colors == std::vector<Color>{0, 2});
    CHECK(p.witnesses == std::vector<Vertex>{0});
    // A light class yields the trivial path.
    ColorPath q = path_to_light(st, st.H, 2);
    CHECK(q.colors == std::vector<Color>{2});
    CHECK(q.witnesses.empty());
}

TEST_CASE("movability respects lists, identity and neighbors")
{
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    Instance inst = plain_instance(std::move(g), 3);
    inst.lists[0] = {0, 1, 3};
    PartialState st(inst);
    st.activate(0, 0);
    st.activate(1, 1);
    st.activate(2, 2);
    st.rebuild_level();

    CHECK(!is_movable(st, 0, 0));   // own class
    CHECK(!is_movable(st, 0, 1));   // neighbor 1 sits there
    CHECK(!is_movable(st, 0, 2));   // not on the list
    CHECK(is_movable(st, 0, 3));    // empty listed class
    CHECK(!is_movable(st, 1, 0));   // blocked by 0
    CHECK(!is_movable(st, 1, 2));   // blocked by 2
}

TEST_CASE("insertable classes of a pending vertex")
{
    Graph g(3);
    g.add_edge(0, 2);
    Instance inst = plain_instance(std::move(g), 3);
    PartialState st(inst);
    st.activate(0, 0);
    st.activate(1, 1);
    st.pending = 2;
    st.rebuild_level();
    CHECK(st.s == 1); // the pending vertex counts toward the level size
    CHECK(!is_insertable(st, 2, 0)); // neighbor 0 sits there
    CHECK(is_insertable(st, 2, 1));
    CHECK(is_insertable(st, 2, 2));
}

TEST_CASE("a fully blocked class is inaccessible")
{
    // Path 0-1-2 colored 0,1,2; middle vertex blocked on both sides, the
    // ends can swap into the empty listed color 3 of the others? No: each
    // list is exactly its own color plus the blocked ones.
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    Instance inst = plain_instance(std::move(g), 3);
    inst.lists = {{0, 1, 3}, {0, 1, 2}, {1, 2, 3}};
    PartialState st(inst);
    st.activate(0, 0);
    st.activate(1, 1);
    st.activate(2, 2);
    st.rebuild_level();
    st.analyze();

    CHECK(st.s == 1);
    CHECK(st.lambda0 == std::vector<Color>{3});
    // Vertex 1 is blocked from 0 and 2 and does not list 3: class 1 stuck.
    CHECK(st.phi == std::vector<Color>{1});
    CHECK(st.lambda == std::vector<Color>{0, 2, 3});
    CHECK(st.b == 1);
    CHECK(st.a == 2);
    CHECK_THROWS_AS(path_to_light(st, st.H, 1), Error);
}

TEST_CASE("forward closure follows arcs transitively")
{
    AuxDigraph h;
    h.nodes = {0, 1, 2, 3, 4};
    auto arc = [&](Color x, Color y) {
        h.out[x].push_back(y);
        h.witnesses[{x, y}] = {0};
    };
    arc(0, 1);
    arc(1, 2);
    arc(3, 4);
    CHECK(forward_closure(h, {0}) == std::vector<Color>{0, 1, 2});
    CHECK(forward_closure(h, {3}) == std::vector<Color>{3, 4});
    CHECK(forward_closure(h, {2}) == std::vector<Color>{2});
    CHECK(forward_closure(h, {0, 3}) == std::vector<Color>{0, 1, 2, 3, 4});
}

TEST_CASE("shortest color path prefers fewer arcs, then smaller colors")
{
    AuxDigraph h;
    h.nodes = {0, 1, 2, 3};
    auto arc = [&](Color x, Color y, Vertex w) {
        h.out[x].push_back(y);
        h.witnesses[{x, y}] = {w};
    };
    arc(0, 2, 10);
    arc(0, 3, 11);
    arc(2, 3, 12);
    auto p = shortest_color_path(h, {0}, {3});
    REQUIRE(p.has_value());
    CHECK(p->colors == std::vector<Color>{0, 3}); // one arc beats two
    CHECK(p->witnesses == std::vector<Vertex>{11});
    CHECK(!shortest_color_path(h, {3}, {1}).has_value());
}

TEST_CASE("arc set matches the definition on random states")
{
    std::mt19937_64 rng(20260826);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 3 + static_cast<int>(rng() % 5);
        Graph g(n);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (rng() % 3 == 0)
                    g.add_edge(u, v);
        Instance inst;
        inst.g = std::move(g);
        inst.r = 3;
        for (Vertex v = 0; v < n; ++v) {
            // Random 3-subsets of a 5-color palette.
            std::vector<Color> pool{0, 1, 2, 3, 4};
            std::shuffle(pool.begin(), pool.end(), rng);
            std::vector<Color> list(pool.begin(), pool.begin() + 3);
            std::sort(list.begin(), list.end());
            inst.lists.push_back(list);
        }
        PartialState st(inst);
        // Greedy proper partial coloring; leave some vertices inactive.
        for (Vertex v = 0; v < n; ++v) {
            if (rng() % 4 == 0)
                continue;
            for (Color c : inst.lists[v]) {
                bool clash = false;
                for (Vertex u : inst.g.adj[v])
                    if (st.active[u] && st.color[u] == c)
                        clash = true;
                if (!clash) {
                    st.activate(v, c);
                    break;
                }
            }
        }
        st.rebuild_level();
        st.analyze();
        std::vector<std::pair<Color, Color>> got;
        for (const auto& [key, wit] : st.H.witnesses) {
            CHECK(!wit.empty());
            CHECK(std::is_sorted(wit.begin(), wit.end()));
            got.push_back(key);
        }
        CHECK(got == naive_arcs(st));
    }
}
