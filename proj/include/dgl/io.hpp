#ifndef DGL_IO_HPP
#define DGL_IO_HPP

#include <iosfwd>
#include <string>

#include "dgl/digraph.hpp"

namespace dgl {

/// Parse error with 1-based line/column position.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + what),
          line(line),
          column(column) {}
    int line;
    int column;
};

/// Canonical edge-list format: first data line "<n> <arc_count>", then one
/// "u v" per arc, 1-based. '#' starts a comment; blank lines are skipped.
Digraph read_edge_list(std::istream& in);
Digraph read_edge_list_file(const std::string& path);

std::string write_edge_list(const Digraph& d);
std::string write_dot(const Digraph& d);

}  // namespace dgl

#endif
