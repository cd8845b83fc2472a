#include "proxkit/dot.hpp"

#include <sstream>

namespace proxkit {

namespace {

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

void emit_node(std::ostream& os, const std::string& indent, uint32_t i,
               const std::string& label) {
    os << indent << "n" << i << " [label=\"" << escape(label) << "\"];\n";
}

}  // namespace

std::string dot_poset(const Poset& p, const std::string& graph_name) {
    std::ostringstream os;
    os << "digraph " << graph_name << " {\n  rankdir=BT;\n";
    for (uint32_t i = 0; i < p.size(); ++i) emit_node(os, "  ", i, p.name(i));
    for (auto [i, j] : p.hasse_edges()) os << "  n" << i << " -> n" << j << ";\n";
    os << "}\n";
    return os.str();
}

std::string dot_gleason(const GleasonSpace& g, const std::string& graph_name) {
    std::ostringstream os;
    os << "digraph " << graph_name << " {\n  rankdir=BT;\n";

    if (g.r.preorder()) {
        QuotientPospace q = quotient(g);
        for (uint32_t k = 0; k < q.size(); ++k) {
            os << "  subgraph cluster_" << k << " {\n    style=dotted;\n";
            for (uint32_t x : q.classes[k]) emit_node(os, "    ", x, g.order.name(x));
            os << "  }\n";
        }
    } else {
        for (uint32_t i = 0; i < g.size(); ++i) emit_node(os, "  ", i, g.order.name(i));
    }

    for (auto [i, j] : g.order.hasse_edges()) os << "  n" << i << " -> n" << j << ";\n";
    // R-edges beyond the order, self-loops excluded by reflexivity of leq.
    for (uint32_t i = 0; i < g.size(); ++i)
        for (uint32_t j = 0; j < g.size(); ++j)
            if (g.r.at(i, j) && !g.order.leq(i, j))
                os << "  n" << i << " -> n" << j << " [style=dashed];\n";
    os << "}\n";
    return os.str();
}

}  // namespace proxkit
