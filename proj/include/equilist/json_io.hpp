#ifndef EQUILIST_JSON_IO_HPP
#define EQUILIST_JSON_IO_HPP

#include <string>

#include "equilist/coloring.hpp"
#include "equilist/generators.hpp"

namespace equilist {

// Graph JSON: {"n": int, "edges": [[u,v], ...]} with 0-based ids, u < v,
// no duplicates. Instance JSON adds "r" and either "lists": [[c,...],...]
// or "lists": "plain" with "palette": [c,...] of exactly r colors; a
// "certificate" key may carry a generator construction record. Coloring
// JSON: {"colors": [c_v, ...]} where -1 marks an uncolored vertex.

std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

std::string instance_to_json(const Instance& inst, const Certificate* cert = nullptr);
Instance instance_from_json(const std::string& text);

std::string coloring_to_json(const Coloring& c);
Coloring coloring_from_json(const std::string& text);

} // namespace equilist

#endif
