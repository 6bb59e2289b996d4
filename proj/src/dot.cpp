#include "redchain/dot.hpp"

#include <sstream>

namespace redchain {

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

// Display label: the name without a "loc:" prefix.
std::string display(const std::string& name) {
    if (name.rfind("loc:", 0) == 0)
        return name.substr(4);
    return name;
}

void emit_nodes(std::ostringstream& out, const std::vector<std::string>& locations,
                int initial) {
    for (std::size_t i = 0; i < locations.size(); ++i) {
        out << "  " << quote(locations[i]) << " [label=" << quote(display(locations[i]));
        if (static_cast<int>(i) == initial)
            out << ", penwidth=2";
        out << "];\n";
    }
}

} // namespace

std::string export_dot(const CsaAutomaton& a, const DotOptions& opts) {
    std::ostringstream out;
    out << "digraph csa {\n  rankdir=LR;\n  node [shape=circle];\n";
    emit_nodes(out, a.locations, a.initial);
    for (const CsaTransition& t : a.transitions) {
        std::vector<std::string> parts;
        for (const auto& [c, v] : t.eq) {
            if (opts.compact && v == 0)
                continue;
            parts.push_back("c" + std::to_string(c) + " = " + std::to_string(v));
        }
        for (std::size_t i = 0; i < t.inc.size(); ++i)
            if (t.inc[i] != 0)
                parts.push_back("c" + std::to_string(i + 1) + " + " +
                                std::to_string(t.inc[i]));
        if (!t.resets.empty()) {
            std::string r = "R(";
            bool first = true;
            for (int c : t.resets) {
                if (!first)
                    r += ", ";
                first = false;
                r += "c" + std::to_string(c);
            }
            r += ")";
            parts.push_back(std::move(r));
        }
        std::string label;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i)
                label += ", ";
            label += parts[i];
        }
        out << "  " << quote(a.locations[static_cast<std::size_t>(t.from)]) << " -> "
            << quote(a.locations[static_cast<std::size_t>(t.to)]) << " [label=" << quote(label)
            << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string export_dot(const BocaAutomaton& a, const DotOptions&) {
    std::ostringstream out;
    out << "digraph boca {\n  rankdir=LR;\n  node [shape=circle];\n";
    emit_nodes(out, a.locations, a.initial);
    for (const BocaTransition& t : a.transitions) {
        std::string label = (t.p >= 0 ? "+" : "") + std::to_string(t.p);
        if (!(t.g1 == 0 && t.g2 == a.bound))
            label += " [" + std::to_string(t.g1) + ", " + std::to_string(t.g2) + "]";
        out << "  " << quote(a.locations[static_cast<std::size_t>(t.from)]) << " -> "
            << quote(a.locations[static_cast<std::size_t>(t.to)]) << " [label=" << quote(label)
            << "];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace redchain
