#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gring/parser.hpp"

namespace gring {

/// Field-independent content of a spec file: a ring declaration line followed
/// by `name = <expression>` assignments. Blank lines and '#' comments are
/// skipped. Assignments are materialized later, once the field is known.
struct SpecFileText {
    RingDecl decl;
    std::vector<std::pair<std::string, std::string>> assignments;
};

inline SpecFileText read_spec_text(std::istream& in) {
    SpecFileText out;
    std::string line;
    bool have_ring = false;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        const std::string trimmed = line.substr(first, last - first + 1);
        if (!have_ring) {
            out.decl = parse_ring_decl(trimmed);
            have_ring = true;
            continue;
        }
        const auto eq = trimmed.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected '<name> = <expression>' on line " + std::to_string(line_no),
                             0);
        std::string name = trimmed.substr(0, eq);
        const auto name_end = name.find_last_not_of(" \t");
        name = name.substr(0, name_end == std::string::npos ? 0 : name_end + 1);
        if (!detail::is_identifier(name))
            throw ParseError("bad assignment name '" + name + "' on line " + std::to_string(line_no),
                             0);
        out.assignments.emplace_back(std::move(name), trimmed.substr(eq + 1));
    }
    if (!have_ring) throw ParseError("spec file has no ring declaration", 0);
    return out;
}

inline SpecFileText read_spec_string(const std::string& text) {
    std::istringstream in(text);
    return read_spec_text(in);
}

inline SpecFileText read_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open spec file '" + path + "'");
    return read_spec_text(in);
}

/// Evaluates the assignments in order; each may reference earlier names.
template <class F>
Bindings<F> materialize_assignments(const SpecFileText& text, const RingPtr<F>& ring) {
    Bindings<F> bindings;
    for (const auto& [name, expr] : text.assignments) {
        if (ring->index_of(name))
            throw std::invalid_argument("assignment '" + name + "' shadows a ring variable");
        auto value = parse_polynomial<F>(expr, ring, bindings);
        bindings.insert_or_assign(name, std::move(value));
    }
    return bindings;
}

}  // namespace gring
