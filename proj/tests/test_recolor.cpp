#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "equilist/errors.hpp"
#include "equilist/recolor.hpp"

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

} // namespace

TEST_CASE("potential orders lexicographically by accessible mass")
{
    CHECK(Potential{3, 2} < Potential{4, 1});
    CHECK(Potential{3, 2} < Potential{3, 3});
    CHECK(!(Potential{4, 1} < Potential{3, 2}));
    CHECK(Potential{3, 2} == Potential{3, 2});
}

TEST_CASE("level_SE_ok enforces cap and full-class budget")
{
    Graph g(4); // no edges
    Instance inst = plain_instance(std::move(g), 3);
    PartialState st(inst);
    st.activate(0, 0);
    st.activate(1, 0);
    st.activate(2, 1);
    st.activate(3, 1);
    st.rebuild_level();
    // k=4, cap=2, allowed full = 1, but classes 0 and 1 are both full.
    CHECK(!level_SE_ok(st));
    st.set_color(3, 2);
    CHECK(level_SE_ok(st));
    // Overfull class.
    st.set_color(3, 0);
    st.set_color(2, 0);
    CHECK(!level_SE_ok(st));
}

TEST_CASE("move_vertex rejects blocked moves and logs legal ones")
{
    Graph g(2);
    g.add_edge(0, 1);
    Instance inst = plain_instance(std::move(g), 3);
    PartialState st(inst);
    st.activate(0, 0);
    st.activate(1, 1);
    st.rebuild_level();
    Trace t;
    CHECK_THROWS_AS(move_vertex(st, 0, 1, t), Error); // neighbor sits there
    move_vertex(st, 0, 2, t);
    CHECK(st.color[0] == 2);
    CHECK(st.classes.at(2) == std::vector<Vertex>{0});
    REQUIRE(t.events.size() == 1);
    CHECK(t.events[0].kind == TraceEvent::Kind::MoveVertex);
    CHECK(t.events[0].from == 0);
    CHECK(t.events[0].to == 2);
}

TEST_CASE("witness shifts run from the far end of the path")
{
    // w1 (class 0) must enter class 1, but its neighbor w2 occupies it;
    // the shift only succeeds because w2 moves to class 2 first.
    Graph g(2);
    g.add_edge(0, 1);
    Instance inst = plain_instance(std::move(g), 3);
    PartialState st(inst);
    st.activate(0, 0);
    st.activate(1, 1);
    st.rebuild_level();
    Trace t;
    ColorPath path;
    path.colors = {0, 1, 2};
    path.witnesses = {0, 1};
    shift_witnesses(st, path, t);
    CHECK(st.color[0] == 1);
    CHECK(st.color[1] == 2);
    REQUIRE(t.events.size() == 1);
    CHECK(t.events[0].kind == TraceEvent::Kind::ShiftPath);
    // A stale witness is rejected.
    PartialState st2(inst);
    st2.activate(0, 0);
    st2.activate(1, 1);
    st2.rebuild_level();
    ColorPath stale;
    stale.colors = {2, 1};
    stale.witnesses = {0}; // vertex 0 is not in class 2
    Trace t2;
    CHECK_THROWS_AS(shift_witnesses(st2, stale, t2), Error);
    // Trivial paths are a no-op.
    ColorPath trivial;
    trivial.colors = {0};
    shift_witnesses(st2, trivial, t2);
    CHECK(t2.events.empty());
}

TEST_CASE("apply_swap tolerates improper intermediates but not improper results")
{
    Graph g(2);
    g.add_edge(0, 1);
    Instance inst = plain_instance(std::move(g), 3);
    PartialState st(inst);
    st.activate(0, 0);
    st.activate(1, 1);
    st.rebuild_level();
    Trace t;
    // Swapping the endpoint colors passes through a monochromatic state.
    apply_swap(st, {{0, 0, 1}, {1, 1, 0}}, t);
    CHECK(st.color[0] == 1);
    CHECK(st.color[1] == 0);
    // A batch that ends monochromatic is rejected.
    CHECK_THROWS_AS(apply_swap(st, {{0, 1, 0}}, t), Error);
    // Off-list targets are rejected.
    CHECK_THROWS_AS(apply_swap(st, {{0, 1, 7}}, t), Error);
}

TEST_CASE("a free vertex moves into an empty accessible class")
{
    // Five isolated vertices, three colors, one vertex also lists color 3.
    // Classes: {0,1} -> 0, {2,3} -> 1, {4} -> 2. Moving vertex 1 to the
    // empty class 3 spreads the load.
    Graph g(5);
    Instance inst = plain_instance(std::move(g), 3);
    inst.lists[1] = {0, 1, 3};
    PartialState st(inst);
    st.activate(0, 0);
    st.activate(1, 0);
    st.activate(2, 1);
    st.activate(3, 1);
    st.activate(4, 2);
    st.rebuild_level();
    st.analyze();
    CHECK(st.s == 2);
    CHECK(potential(st) == Potential{5, 3});
    Trace t;
    REQUIRE(improve(st, t));
    CHECK(st.color[1] == 3);
    CHECK(potential(st) == Potential{5, 4});
    // Nothing further to improve: every class is accessible and no class
    // has room to rebalance.
    CHECK(!improve(st, t));
}

TEST_CASE("solo vertices and the solo-to-accessible swap")
{
    // z(0) in class 0; y(1), t(4) in the stuck class 1; u(2), w(3) in the
    // full accessible class 2. y is blocked from 0 by z and from 2 by u
    // alone, so u is solo (and w via t). Swapping u into the light class 0
    // frees a slot of class 2 for y.
    Graph g(5);
    g.add_edge(0, 1); // z - y
    g.add_edge(1, 2); // y - u
    g.add_edge(0, 4); // z - t
    g.add_edge(3, 4); // w - t
    Instance inst = plain_instance(std::move(g), 3);
    PartialState st(inst);
    st.activate(0, 0);
    st.activate(1, 1);
    st.activate(2, 2);
    st.activate(3, 2);
    st.activate(4, 1);
    st.rebuild_level();
    st.analyze();

    CHECK(st.s == 2);
    CHECK(st.phi == std::vector<Color>{1});
    CHECK(st.lambda == std::vector<Color>{0, 2});
    CHECK(solo_neighbors(st, 2) == std::vector<Vertex>{1});
    CHECK(solo_neighbors(st, 3) == std::vector<Vertex>{4});
    // z blocks both stuck vertices, but sits in a light class, and only
    // members of the single full accessible class qualify as solo.
    CHECK(solo_neighbors(st, 0) == std::vector<Vertex>{1, 4});
    CHECK(solo_vertices(st) == std::vector<Vertex>{2, 3});
    // A single blocked vertex has no nonadjacent partner.
    CHECK(useful_subset(st, solo_neighbors(st, 2)).empty());

    CHECK(potential(st) == Potential{3, 2});
    Trace t;
    REQUIRE(improve(st, t));
    CHECK(potential(st) == Potential{5, 3});
    CHECK(st.color[2] == 0); // the solo vertex moved to the light class
    CHECK(st.color[1] == 2); // its blocked neighbor took the freed slot
    REQUIRE(t.events.size() == 1);
    CHECK(t.events[0].kind == TraceEvent::Kind::SwapSolo);
    CHECK(level_SE_ok(st));
}

TEST_CASE("insert_vertex requires an insertable class")
{
    Graph g(2);
    g.add_edge(0, 1);
    Instance inst = plain_instance(std::move(g), 3);
    PartialState st(inst);
    st.pending = 0;
    st.rebuild_level();
    Trace t;
    insert_vertex(st, 0, 1, t);
    CHECK(st.active[0]);
    CHECK(st.color[0] == 1);
    st.pending = 1;
    st.rebuild_level();
    CHECK_THROWS_AS(insert_vertex(st, 1, 1, t), Error); // neighbor blocks it
    insert_vertex(st, 1, 0, t);
    CHECK(st.active_count == 2);
    REQUIRE(t.events.size() == 2);
    CHECK(t.events[1].kind == TraceEvent::Kind::InsertVertex);
    CHECK(t.events[1].from == -1);
}
