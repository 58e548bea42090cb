#ifndef DGL_DIGRAPH_HPP
#define DGL_DIGRAPH_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dgl {

/// Raised on malformed graph input (bad labels, loops, invalid subsets).
class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Degrees {
    int out = 0;
    int in = 0;
    int total() const { return out + in; }
};

/// Loop-free digraph on at most 64 labeled vertices, stored as per-vertex
/// out/in bitmasks. Labels are 1-based at the API boundary, bit v-1 inside.
/// Immutable after build; all member functions are const.
class Digraph {
public:
    static constexpr int kMaxOrder = 64;

    /// Builds a digraph from 1-based arc pairs. Duplicates collapse;
    /// loops and out-of-range labels are rejected.
    static Digraph build(int n, const std::vector<std::pair<int, int>>& arcs);

    int order() const { return n_; }
    int arc_count() const;

    bool has_arc(int u, int v) const;
    int adjacency_count(int x, int y) const;

    std::vector<int> out_neighbors(int v) const;
    std::vector<int> out_neighbors(int v, const std::vector<int>& within) const;
    std::vector<int> in_neighbors(int v) const;
    std::vector<int> in_neighbors(int v, const std::vector<int>& within) const;

    Degrees degrees(int v) const;
    Degrees degrees(int v, const std::vector<int>& within) const;

    bool is_strong() const;
    bool is_semicomplete() const;
    bool is_locally_semicomplete() const;

    /// Arcs as sorted (u,v) pairs, 1-based.
    std::vector<std::pair<int, int>> arcs() const;

    /// Raw neighbourhood masks (bit v-1 set for label v). The algorithm
    /// modules work on these directly.
    std::uint64_t out_bits(int v) const { return out_[check(v) - 1]; }
    std::uint64_t in_bits(int v) const { return in_[check(v) - 1]; }
    std::uint64_t vertex_bits() const;

    Degrees degrees_masked(int v, std::uint64_t within) const;

    bool operator==(const Digraph& other) const {
        return n_ == other.n_ && out_ == other.out_;
    }

private:
    Digraph() = default;
    int check(int v) const;

    int n_ = 0;
    std::vector<std::uint64_t> out_;
    std::vector<std::uint64_t> in_;
};

/// induced() keeps the map back to the host graph's labels:
/// labels[i] is the host label of new vertex i+1.
struct InducedSubgraph {
    Digraph graph;
    std::vector<int> labels;
};

InducedSubgraph induced(const Digraph& d, const std::vector<int>& subset);

struct VertexSequence {
    enum class Kind { Path, Cycle };
    Kind kind = Kind::Path;
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()); }
    bool operator==(const VertexSequence&) const = default;
};

struct SequenceCheck {
    bool ok = true;
    std::string reason;  // first violated obligation, empty when ok
};

SequenceCheck validate_sequence(const Digraph& d, const VertexSequence& s);

std::uint64_t to_mask(const std::vector<int>& vertices);
std::vector<int> from_mask(std::uint64_t mask);

}  // namespace dgl

#endif
