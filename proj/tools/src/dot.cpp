#include "rolekit/dot.hpp"

#include <array>
#include <sstream>

namespace rolekit::dot {

namespace {

constexpr std::array<const char*, 6> kColours{"black", "blue", "red", "darkgreen", "purple", "orange"};
constexpr std::array<const char*, 3> kStyles{"solid", "dashed", "dotted"};

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

std::string style_of(std::size_t k) {
    return std::string("color=") + kColours[k % kColours.size()] + ", style=" +
           kStyles[(k / kColours.size()) % kStyles.size()];
}

void write_nodes(std::ostringstream& os, const ActorSet& actors) {
    for (const auto& l : actors.labels()) os << "  " << quoted(l) << ";\n";
}

}  // namespace

std::string export_dot(const MultiNetwork& net, const std::string& graph_name) {
    const auto& A = *net.actors();
    std::ostringstream os;
    os << "digraph " << quoted(graph_name) << " {\n";
    write_nodes(os, A);
    for (std::size_t k = 0; k < net.relation_count(); ++k) {
        for (auto [a, b] : net.relation(k).edges()) {
            os << "  " << quoted(A.label(a)) << " -> " << quoted(A.label(b)) << " [label=" << quoted(net.name(k))
               << ", " << style_of(k) << "];\n";
        }
    }
    os << "}\n";
    return os.str();
}

std::string export_dot(const MultiHypergraph& mh, const std::string& graph_name) {
    const auto& A = *mh.actors();
    std::ostringstream os;
    os << "digraph " << quoted(graph_name) << " {\n";
    write_nodes(os, A);
    std::size_t junction = 0;
    for (std::size_t k = 0; k < mh.relation_count(); ++k) {
        for (const auto& [a, u] : mh.relation(k).hyperedges()) {
            const std::string j = quoted("__he" + std::to_string(junction++));
            os << "  " << j << " [shape=point, label=\"\"];\n";
            os << "  " << quoted(A.label(a)) << " -> " << j << " [label=" << quoted(mh.name(k)) << ", "
               << style_of(k) << "];\n";
            for (auto t : u) {
                os << "  " << j << " -> " << quoted(A.label(t)) << " [arrowhead=none, " << style_of(k) << "];\n";
            }
        }
    }
    os << "}\n";
    return os.str();
}

}  // namespace rolekit::dot
