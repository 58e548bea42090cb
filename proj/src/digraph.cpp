#include "dgl/digraph.hpp"

#include <algorithm>
#include <bit>

namespace dgl {

namespace {

std::string pair_str(int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Digraph Digraph::build(int n, const std::vector<std::pair<int, int>>& arcs) {
    if (n < 1 || n > kMaxOrder)
        throw GraphError("vertex count " + std::to_string(n) + " outside [1," +
                         std::to_string(kMaxOrder) + "]");
    Digraph d;
    d.n_ = n;
    d.out_.assign(n, 0);
    d.in_.assign(n, 0);
    for (auto [u, v] : arcs) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw GraphError("arc " + pair_str(u, v) + " has a label outside 1.." +
                             std::to_string(n));
        if (u == v)
            throw GraphError("loop " + pair_str(u, v) + " is not allowed");
        d.out_[u - 1] |= std::uint64_t{1} << (v - 1);
        d.in_[v - 1] |= std::uint64_t{1} << (u - 1);
    }
    return d;
}

int Digraph::check(int v) const {
    if (v < 1 || v > n_)
        throw GraphError("vertex " + std::to_string(v) + " outside 1.." +
                         std::to_string(n_));
    return v;
}

int Digraph::arc_count() const {
    int c = 0;
    for (auto m : out_) c += std::popcount(m);
    return c;
}

bool Digraph::has_arc(int u, int v) const {
    check(u);
    check(v);
    return (out_[u - 1] >> (v - 1)) & 1;
}

int Digraph::adjacency_count(int x, int y) const {
    check(x);
    check(y);
    if (x == y) throw GraphError("adjacency_count requires two distinct vertices");
    return int((out_[x - 1] >> (y - 1)) & 1) + int((out_[y - 1] >> (x - 1)) & 1);
}

std::uint64_t Digraph::vertex_bits() const {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
}

std::uint64_t to_mask(const std::vector<int>& vertices) {
    std::uint64_t m = 0;
    for (int v : vertices) m |= std::uint64_t{1} << (v - 1);
    return m;
}

std::vector<int> from_mask(std::uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        int b = std::countr_zero(mask);
        out.push_back(b + 1);
        mask &= mask - 1;
    }
    return out;
}

std::vector<int> Digraph::out_neighbors(int v) const {
    return from_mask(out_[check(v) - 1]);
}

std::vector<int> Digraph::out_neighbors(int v, const std::vector<int>& within) const {
    for (int w : within) check(w);
    return from_mask(out_[check(v) - 1] & to_mask(within));
}

std::vector<int> Digraph::in_neighbors(int v) const {
    return from_mask(in_[check(v) - 1]);
}

std::vector<int> Digraph::in_neighbors(int v, const std::vector<int>& within) const {
    for (int w : within) check(w);
    return from_mask(in_[check(v) - 1] & to_mask(within));
}

Degrees Digraph::degrees(int v) const {
    check(v);
    return {std::popcount(out_[v - 1]), std::popcount(in_[v - 1])};
}

Degrees Digraph::degrees(int v, const std::vector<int>& within) const {
    for (int w : within) check(w);
    return degrees_masked(v, to_mask(within));
}

Degrees Digraph::degrees_masked(int v, std::uint64_t within) const {
    check(v);
    return {std::popcount(out_[v - 1] & within), std::popcount(in_[v - 1] & within)};
}

bool Digraph::is_strong() const {
    if (n_ == 1) return true;
    auto sweep = [this](const std::vector<std::uint64_t>& adj) {
        std::uint64_t seen = 1, frontier = 1;
        while (frontier) {
            std::uint64_t next = 0;
            std::uint64_t f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= adj[v];
            }
            frontier = next & ~seen;
            seen |= next;
        }
        return seen;
    };
    std::uint64_t all = vertex_bits();
    return sweep(out_) == all && sweep(in_) == all;
}

bool Digraph::is_semicomplete() const {
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!(((out_[u] >> v) | (out_[v] >> u)) & 1)) return false;
    return true;
}

bool Digraph::is_locally_semicomplete() const {
    auto side_ok = [this](std::uint64_t nbhd) {
        auto rest = nbhd;
        while (rest) {
            int u = std::countr_zero(rest);
            rest &= rest - 1;
            auto others = rest;
            while (others) {
                int v = std::countr_zero(others);
                others &= others - 1;
                if (!(((out_[u] >> v) | (out_[v] >> u)) & 1)) return false;
            }
        }
        return true;
    };
    for (int x = 0; x < n_; ++x)
        if (!side_ok(out_[x]) || !side_ok(in_[x])) return false;
    return true;
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        std::uint64_t m = out_[u];
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            out.emplace_back(u + 1, v + 1);
        }
    }
    return out;
}

InducedSubgraph induced(const Digraph& d, const std::vector<int>& subset) {
    if (subset.empty()) throw GraphError("induced subgraph needs a nonempty vertex set");
    std::vector<int> labels = subset;
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    std::vector<int> pos(d.order() + 1, 0);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] < 1 || labels[i] > d.order())
            throw GraphError("vertex " + std::to_string(labels[i]) + " outside 1.." +
                             std::to_string(d.order()));
        pos[labels[i]] = static_cast<int>(i) + 1;
    }
    std::vector<std::pair<int, int>> arcs;
    for (int u : labels)
        for (int v : d.out_neighbors(u, labels)) arcs.emplace_back(pos[u], pos[v]);
    return {Digraph::build(static_cast<int>(labels.size()), arcs), labels};
}

SequenceCheck validate_sequence(const Digraph& d, const VertexSequence& s) {
    const auto& vs = s.vertices;
    if (vs.size() < 2) return {false, "sequence needs at least 2 vertices"};
    std::uint64_t seen = 0;
    for (int v : vs) {
        if (v < 1 || v > d.order())
            return {false, "vertex " + std::to_string(v) + " outside 1.." +
                               std::to_string(d.order())};
        std::uint64_t bit = std::uint64_t{1} << (v - 1);
        if (seen & bit) return {false, "vertex " + std::to_string(v) + " repeated"};
        seen |= bit;
    }
    for (std::size_t i = 0; i + 1 < vs.size(); ++i)
        if (!d.has_arc(vs[i], vs[i + 1]))
            return {false, "missing arc (" + std::to_string(vs[i]) + "," +
                               std::to_string(vs[i + 1]) + ")"};
    if (s.kind == VertexSequence::Kind::Cycle &&
        !d.has_arc(vs.back(), vs.front()))
        return {false, "missing closing arc (" + std::to_string(vs.back()) + "," +
                           std::to_string(vs.front()) + ")"};
    return {};
}

}  // namespace dgl
