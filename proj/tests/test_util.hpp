#ifndef DGL_TEST_UTIL_HPP
#define DGL_TEST_UTIL_HPP

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "dgl/digraph.hpp"

namespace dgl_test {

// Small fixed-sequence generator so the tests do not depend on standard
// library distribution internals.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed * 0x9E3779B97F4A7C15ull + 1) {
        if (state == 0) state = 1;  // xorshift fixed point
    }

    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    double unit() { return double(next() >> 11) * 0x1.0p-53; }
    int below(int n) { return int(next() % std::uint64_t(n)); }
};

inline dgl::Digraph random_digraph(int n, double p, Rng& rng) {
    std::vector<std::pair<int, int>> arcs;
    for (int u = 1; u <= n; ++u)
        for (int v = 1; v <= n; ++v)
            if (u != v && rng.unit() < p) arcs.emplace_back(u, v);
    return dgl::Digraph::build(n, arcs);
}

inline dgl::Digraph directed_cycle(int n) {
    std::vector<std::pair<int, int>> arcs;
    for (int i = 1; i <= n; ++i) arcs.emplace_back(i, i % n + 1);
    return dgl::Digraph::build(n, arcs);
}

inline dgl::Digraph complete_digraph(int n) {
    std::vector<std::pair<int, int>> arcs;
    for (int u = 1; u <= n; ++u)
        for (int v = 1; v <= n; ++v)
            if (u != v) arcs.emplace_back(u, v);
    return dgl::Digraph::build(n, arcs);
}

// Greedy random simple path of length >= 2 in d, or empty when the start
// vertex has no usable arc.
inline std::vector<int> random_path(const dgl::Digraph& d, Rng& rng) {
    int cur = rng.below(d.order()) + 1;
    std::vector<int> path{cur};
    while (true) {
        auto outs = d.out_neighbors(cur);
        std::vector<int> fresh;
        for (int v : outs)
            if (std::find(path.begin(), path.end(), v) == path.end())
                fresh.push_back(v);
        if (fresh.empty() || path.size() + 1 == std::size_t(d.order())) break;
        cur = fresh[rng.below(int(fresh.size()))];
        path.push_back(cur);
    }
    return path.size() >= 2 ? path : std::vector<int>{};
}

}  // namespace dgl_test

#endif
