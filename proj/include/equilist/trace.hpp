#ifndef EQUILIST_TRACE_HPP
#define EQUILIST_TRACE_HPP

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "equilist/aux_digraph.hpp"

namespace equilist {

/// Replayable log entry for one recoloring event.
struct TraceEvent {
    enum class Kind { MoveVertex, ShiftPath, InsertVertex, SwapSolo };
    int step = 0;
    Kind kind = Kind::MoveVertex;
    Vertex v = -1;
    Color from = -1, to = -1;
    std::vector<Color> path_colors;
    std::vector<Vertex> path_witnesses;
    // SwapSolo: (vertex, from, to) triples applied as one atomic event;
    // from == -1 marks the insertion of a pending vertex.
    std::vector<std::tuple<Vertex, Color, Color>> moves;
    std::uint64_t snapshot_hash = 0;
};

struct Trace {
    std::vector<TraceEvent> events;
    int next_step = 0;
};

/// FNV-1a digest of the nonempty class sizes, in color order.
std::uint64_t snapshot_hash(const PartialState& st);

std::string trace_to_jsonl(const Trace& t);
Trace trace_from_jsonl(const std::string& text);

/// Replays a trace from the empty state, verifying every snapshot hash.
/// Returns the final coloring. Throws InternalInvariantViolation on mismatch.
Coloring replay_trace(const Instance& inst, const Trace& t);

} // namespace equilist

#endif
