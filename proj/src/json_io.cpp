#include "equilist/json_io.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "equilist/errors.hpp"

namespace equilist {

namespace {

using nlohmann::json;

json parse(const std::string& text)
{
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        fail(ErrKind::InvalidInstance, "malformed JSON input");
    return j;
}

Graph graph_from(const json& j)
{
    if (!j.contains("n") || !j["n"].is_number_integer())
        fail(ErrKind::InvalidInstance, "missing vertex count");
    int n = j["n"].get<int>();
    if (n < 0)
        fail(ErrKind::InvalidInstance, "negative vertex count");
    Graph g(n);
    std::set<std::pair<Vertex, Vertex>> seen;
    if (j.contains("edges")) {
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2)
                fail(ErrKind::InvalidInstance, "edge is not a pair");
            Vertex u = e[0].get<Vertex>();
            Vertex v = e[1].get<Vertex>();
            if (u < 0 || v < 0 || u >= n || v >= n || u >= v)
                fail(ErrKind::InvalidInstance, "edge endpoints out of order or range");
            if (!seen.insert({u, v}).second)
                fail(ErrKind::InvalidInstance, "duplicate edge");
            g.add_edge(u, v);
        }
    }
    return g;
}

json edges_to(const Graph& g)
{
    json edges = json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({u, v});
    return edges;
}

json certificate_to(const Certificate& cert)
{
    json j;
    switch (cert.kind) {
    case Certificate::Kind::None:
        j["kind"] = "none";
        break;
    case Certificate::Kind::StackedTriangulation: {
        j["kind"] = "stacked_triangulation";
        json ins = json::array();
        for (const auto& f : cert.insertions)
            ins.push_back({f[0], f[1], f[2]});
        j["insertions"] = ins;
        json del = json::array();
        for (auto [u, v] : cert.deleted_edges)
            del.push_back({u, v});
        j["deleted_edges"] = del;
        break;
    }
    case Certificate::Kind::Subdivision: {
        j["kind"] = "subdivision";
        j["base_n"] = cert.base_n;
        json be = json::array();
        for (auto [u, v] : cert.base_edges)
            be.push_back({u, v});
        j["base_edges"] = be;
        break;
    }
    }
    return j;
}

} // namespace

std::string graph_to_json(const Graph& g)
{
    json j;
    j["n"] = g.n;
    j["edges"] = edges_to(g);
    return j.dump();
}

Graph graph_from_json(const std::string& text)
{
    return graph_from(parse(text));
}

std::string instance_to_json(const Instance& inst, const Certificate* cert)
{
    json j;
    j["n"] = inst.g.n;
    j["edges"] = edges_to(inst.g);
    j["r"] = inst.r;
    bool plain = inst.g.n > 0;
    for (Vertex v = 1; v < inst.g.n && plain; ++v)
        plain = inst.lists[v] == inst.lists[0];
    if (plain) {
        j["lists"] = "plain";
        j["palette"] = inst.lists[0];
    } else {
        json lists = json::array();
        for (const auto& l : inst.lists)
            lists.push_back(l);
        j["lists"] = lists;
    }
    if (cert)
        j["certificate"] = certificate_to(*cert);
    return j.dump();
}

Instance instance_from_json(const std::string& text)
{
    json j = parse(text);
    Instance inst;
    inst.g = graph_from(j);
    if (!j.contains("r") || !j["r"].is_number_integer())
        fail(ErrKind::InvalidInstance, "missing color budget");
    inst.r = j["r"].get<int>();
    if (!j.contains("lists"))
        fail(ErrKind::InvalidInstance, "missing lists");
    if (j["lists"].is_string()) {
        if (j["lists"].get<std::string>() != "plain")
            fail(ErrKind::InvalidInstance, "unknown list shorthand");
        if (!j.contains("palette"))
            fail(ErrKind::InvalidInstance, "plain lists need a palette");
        auto palette = j["palette"].get<std::vector<Color>>();
        std::sort(palette.begin(), palette.end());
        inst.lists.assign(inst.g.n, palette);
    } else {
        for (const auto& l : j["lists"]) {
            auto list = l.get<std::vector<Color>>();
            std::sort(list.begin(), list.end());
            inst.lists.push_back(std::move(list));
        }
    }
    inst.validate();
    return inst;
}

std::string coloring_to_json(const Coloring& c)
{
    json j;
    j["colors"] = c.color;
    return j.dump();
}

Coloring coloring_from_json(const std::string& text)
{
    json j = parse(text);
    if (!j.contains("colors") || !j["colors"].is_array())
        fail(ErrKind::InvalidInstance, "missing colors array");
    return Coloring{j["colors"].get<std::vector<Color>>()};
}

} // namespace equilist
