#ifndef EQUILIST_DOT_EXPORT_HPP
#define EQUILIST_DOT_EXPORT_HPP

#include <string>

#include "equilist/aux_digraph.hpp"

namespace equilist {

/// Renders the color digraph of the given state as DOT text: one node per
/// color labeled "c (size/s)", light colors filled, one arc per movable
/// pair labeled with the sorted witness ids. Byte-stable for fixed input.
/// The state must have been analyzed.
std::string export_h_dot(const PartialState& st);

/// Builds a state from a (possibly partial) coloring, analyzes it and
/// renders it. Vertices colored -1 are left out. Throws InvalidInstance
/// when the colored part is improper or violates a list.
std::string export_h_dot(const Instance& inst, const Coloring& partial);

} // namespace equilist

#endif
