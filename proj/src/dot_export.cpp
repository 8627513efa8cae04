#include "equilist/dot_export.hpp"

#include <sstream>

#include "equilist/errors.hpp"

namespace equilist {

std::string export_h_dot(const PartialState& st)
{
    std::ostringstream out;
    out << "digraph H {\n";
    for (Color c : st.gamma) {
        out << "  c" << c << " [label=\"" << c << " (" << st.class_size(c) << "/" << st.s
            << ")\"";
        if (st.is_light(c))
            out << ", style=filled, fillcolor=lightgray";
        out << "];\n";
    }
    for (const auto& [arc, witnesses] : st.H.witnesses) {
        out << "  c" << arc.first << " -> c" << arc.second << " [label=\"";
        for (size_t i = 0; i < witnesses.size(); ++i) {
            if (i)
                out << ",";
            out << witnesses[i];
        }
        out << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string export_h_dot(const Instance& inst, const Coloring& partial)
{
    inst.validate();
    if (static_cast<int>(partial.color.size()) != inst.g.n)
        fail(ErrKind::InvalidInstance, "coloring length does not match the graph");
    PartialState st(inst);
    for (Vertex v = 0; v < inst.g.n; ++v) {
        Color c = partial.color[v];
        if (c == -1)
            continue;
        if (!inst.list_has(v, c))
            fail(ErrKind::InvalidInstance,
                 "vertex " + std::to_string(v) + " is colored outside its list");
        st.active[v] = 1;
        st.color[v] = c;
        ++st.active_count;
    }
    for (Vertex v = 0; v < inst.g.n; ++v) {
        if (!st.active[v])
            continue;
        for (Vertex w : inst.g.adj[v])
            if (w > v && st.active[w] && st.color[w] == st.color[v])
                fail(ErrKind::InvalidInstance, "partial coloring has a monochromatic edge");
    }
    st.rebuild_level();
    st.analyze();
    return export_h_dot(st);
}

} // namespace equilist
