#include "equilist/trace.hpp"

#include <map>
#include <sstream>

#include <json.hpp>

#include "equilist/errors.hpp"

namespace equilist {

namespace {

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t x)
{
    for (int i = 0; i < 8; ++i) {
        h ^= (x >> (8 * i)) & 0xff;
        h *= 1099511628211ull;
    }
    return h;
}

std::uint64_t hash_sizes(const std::map<Color, int>& sizes)
{
    std::uint64_t h = 1469598103934665603ull;
    for (const auto& [c, size] : sizes) {
        if (size == 0)
            continue;
        h = fnv1a(h, static_cast<std::uint64_t>(c));
        h = fnv1a(h, static_cast<std::uint64_t>(size));
    }
    return h;
}

const char* kind_name(TraceEvent::Kind k)
{
    switch (k) {
    case TraceEvent::Kind::MoveVertex: return "move_vertex";
    case TraceEvent::Kind::ShiftPath: return "shift_path";
    case TraceEvent::Kind::InsertVertex: return "insert_vertex";
    case TraceEvent::Kind::SwapSolo: return "swap_solo";
    }
    return "?";
}

TraceEvent::Kind kind_from_name(const std::string& s)
{
    if (s == "move_vertex")
        return TraceEvent::Kind::MoveVertex;
    if (s == "shift_path")
        return TraceEvent::Kind::ShiftPath;
    if (s == "insert_vertex")
        return TraceEvent::Kind::InsertVertex;
    if (s == "swap_solo")
        return TraceEvent::Kind::SwapSolo;
    fail(ErrKind::InvalidInstance, "unknown trace event kind: " + s);
}

} // namespace

std::uint64_t snapshot_hash(const PartialState& st)
{
    std::map<Color, int> sizes;
    for (const auto& [c, members] : st.classes)
        if (!members.empty())
            sizes[c] = static_cast<int>(members.size());
    return hash_sizes(sizes);
}

std::string trace_to_jsonl(const Trace& t)
{
    std::ostringstream out;
    for (const auto& e : t.events) {
        nlohmann::json j;
        j["step"] = e.step;
        j["kind"] = kind_name(e.kind);
        switch (e.kind) {
        case TraceEvent::Kind::MoveVertex:
            j["v"] = e.v;
            j["from"] = e.from;
            j["to"] = e.to;
            break;
        case TraceEvent::Kind::InsertVertex:
            j["v"] = e.v;
            j["to"] = e.to;
            break;
        case TraceEvent::Kind::ShiftPath:
            j["colors"] = e.path_colors;
            j["witnesses"] = e.path_witnesses;
            break;
        case TraceEvent::Kind::SwapSolo: {
            nlohmann::json moves = nlohmann::json::array();
            for (auto [v, from, to] : e.moves)
                moves.push_back({v, from, to});
            j["moves"] = moves;
            break;
        }
        }
        j["snapshot_hash"] = e.snapshot_hash;
        out << j.dump() << "\n";
    }
    return out.str();
}

Trace trace_from_jsonl(const std::string& text)
{
    Trace t;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        nlohmann::json j = nlohmann::json::parse(line);
        TraceEvent e;
        e.step = j.at("step").get<int>();
        e.kind = kind_from_name(j.at("kind").get<std::string>());
        switch (e.kind) {
        case TraceEvent::Kind::MoveVertex:
            e.v = j.at("v").get<Vertex>();
            e.from = j.at("from").get<Color>();
            e.to = j.at("to").get<Color>();
            break;
        case TraceEvent::Kind::InsertVertex:
            e.v = j.at("v").get<Vertex>();
            e.to = j.at("to").get<Color>();
            break;
        case TraceEvent::Kind::ShiftPath:
            e.path_colors = j.at("colors").get<std::vector<Color>>();
            e.path_witnesses = j.at("witnesses").get<std::vector<Vertex>>();
            break;
        case TraceEvent::Kind::SwapSolo:
            for (const auto& m : j.at("moves"))
                e.moves.emplace_back(m.at(0).get<Vertex>(), m.at(1).get<Color>(),
                                     m.at(2).get<Color>());
            break;
        }
        e.snapshot_hash = j.at("snapshot_hash").get<std::uint64_t>();
        t.events.push_back(std::move(e));
        t.next_step = t.events.back().step + 1;
    }
    return t;
}

Coloring replay_trace(const Instance& inst, const Trace& t)
{
    std::vector<Color> color(inst.g.n, -1);
    std::map<Color, int> sizes;
    auto recolor = [&](Vertex v, Color from, Color to) {
        if (from == -1) {
            if (color[v] != -1)
                fail(ErrKind::InternalInvariantViolation, "replay: double insertion");
        } else {
            if (color[v] != from)
                fail(ErrKind::InternalInvariantViolation, "replay: stale source color");
            --sizes[from];
        }
        color[v] = to;
        ++sizes[to];
    };
    for (const auto& e : t.events) {
        switch (e.kind) {
        case TraceEvent::Kind::MoveVertex:
            recolor(e.v, e.from, e.to);
            break;
        case TraceEvent::Kind::InsertVertex:
            recolor(e.v, -1, e.to);
            break;
        case TraceEvent::Kind::ShiftPath:
            // Witness i moves from colors[i] to colors[i+1]; applied far end
            // first, mirroring the engine.
            for (int i = static_cast<int>(e.path_witnesses.size()) - 1; i >= 0; --i)
                recolor(e.path_witnesses[i], e.path_colors[i], e.path_colors[i + 1]);
            break;
        case TraceEvent::Kind::SwapSolo:
            for (auto [v, from, to] : e.moves)
                recolor(v, from, to);
            break;
        }
        if (hash_sizes(sizes) != e.snapshot_hash)
            fail(ErrKind::InternalInvariantViolation,
                 "replay: snapshot hash mismatch at step " + std::to_string(e.step));
    }
    for (Vertex v = 0; v < inst.g.n; ++v)
        if (color[v] == -1)
            fail(ErrKind::InternalInvariantViolation, "replay: vertex left uncolored");
    return Coloring{color};
}

} // namespace equilist
