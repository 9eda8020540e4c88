#include "greenseq/dot.hpp"

#include <sstream>

namespace greenseq {

std::string to_dot(const ExchangeGraph& g, const EulerData* ed, const TameData* td) {
    std::ostringstream out;
    out << "digraph exchange {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=box, fontname=\"monospace\"];\n";
    for (size_t i = 0; i < g.nodes.size(); ++i) {
        const Seed& s = g.nodes[i].seed;
        out << "  n" << i << " [label=\"" << s.c.to_string() << "\"";
        if (ed && td && is_regular_cluster(*td, *ed, s))
            out << ", regular=\"yes\", peripheries=2";
        out << "];\n";
    }
    for (const GraphEdge& e : g.edges)
        out << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.label << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace greenseq
