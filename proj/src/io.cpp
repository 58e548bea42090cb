#include "dgl/io.hpp"

#include <fstream>
#include <istream>
#include <sstream>

namespace dgl {

namespace {

// Strips comment and reports the column where a token starts.
struct Line {
    int number;
    std::string text;
};

bool next_data_line(std::istream& in, int& lineno, Line& out) {
    std::string raw;
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
        out = {lineno, raw};
        return true;
    }
    return false;
}

// Parses exactly two integers from a line, rejecting trailing junk.
std::pair<int, int> two_ints(const Line& line, const char* what) {
    std::istringstream ss(line.text);
    long long a, b;
    if (!(ss >> a)) throw ParseError(line.number, 1, std::string("expected ") + what);
    if (!(ss >> b))
        throw ParseError(line.number, int(ss.tellg() < 0 ? line.text.size() : std::size_t(ss.tellg())) + 1,
                         std::string("expected second integer of ") + what);
    std::string rest;
    if (ss >> rest)
        throw ParseError(line.number, int(line.text.find(rest)) + 1,
                         "unexpected token '" + rest + "'");
    if (a < -(1LL << 31) || a > (1LL << 31) || b < -(1LL << 31) || b > (1LL << 31))
        throw ParseError(line.number, 1, "integer out of range");
    return {int(a), int(b)};
}

}  // namespace

Digraph read_edge_list(std::istream& in) {
    int lineno = 0;
    Line line;
    if (!next_data_line(in, lineno, line))
        throw ParseError(1, 1, "empty input, expected header '<n> <arc_count>'");
    auto [n, m] = two_ints(line, "header '<n> <arc_count>'");
    if (n < 1) throw ParseError(line.number, 1, "vertex count must be at least 1");
    if (m < 0) throw ParseError(line.number, 1, "arc count cannot be negative");
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(m);
    for (int i = 0; i < m; ++i) {
        if (!next_data_line(in, lineno, line))
            throw ParseError(lineno + 1, 1,
                             "expected " + std::to_string(m) + " arcs, got " +
                                 std::to_string(i));
        auto [u, v] = two_ints(line, "arc 'u v'");
        if (u < 1 || u > n || v < 1 || v > n)
            throw ParseError(line.number, 1,
                             "arc (" + std::to_string(u) + "," + std::to_string(v) +
                                 ") has a label outside 1.." + std::to_string(n));
        if (u == v)
            throw ParseError(line.number, 1,
                             "loop (" + std::to_string(u) + "," + std::to_string(v) +
                                 ") is not allowed");
        arcs.emplace_back(u, v);
    }
    if (next_data_line(in, lineno, line))
        throw ParseError(line.number, 1, "trailing content after the declared arcs");
    return Digraph::build(n, arcs);
}

Digraph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GraphError("cannot open '" + path + "'");
    return read_edge_list(in);
}

std::string write_edge_list(const Digraph& d) {
    std::ostringstream out;
    out << d.order() << ' ' << d.arc_count() << '\n';
    for (auto [u, v] : d.arcs()) out << u << ' ' << v << '\n';
    return out.str();
}

std::string write_dot(const Digraph& d) {
    std::ostringstream out;
    out << "digraph D {\n";
    for (int v = 1; v <= d.order(); ++v) out << "  " << v << ";\n";
    for (auto [u, v] : d.arcs()) out << "  " << u << " -> " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace dgl
