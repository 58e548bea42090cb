#include "dgl/extremal.hpp"

#include <algorithm>
#include <set>

namespace dgl {

Digraph complete_bipartite(int p, int q) {
    if (p < 1 || q < 1) throw GraphError("partite set sizes must be positive");
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(2 * p * q);
    for (int a = 1; a <= p; ++a)
        for (int b = p + 1; b <= p + q; ++b) {
            arcs.emplace_back(a, b);
            arcs.emplace_back(b, a);
        }
    return Digraph::build(p + q, arcs);
}

Digraph complete_bipartite_minus_arc(int p, int q, std::pair<int, int> e) {
    if (p < 1 || q < 1) throw GraphError("partite set sizes must be positive");
    auto [u, v] = e;
    bool cross = (u >= 1 && u <= p && v > p && v <= p + q) ||
                 (v >= 1 && v <= p && u > p && u <= p + q);
    if (!cross)
        throw GraphError("(" + std::to_string(u) + "," + std::to_string(v) +
                         ") is not a cross-partition arc of K*_{" +
                         std::to_string(p) + "," + std::to_string(q) + "}");
    std::vector<std::pair<int, int>> arcs;
    for (int a = 1; a <= p; ++a)
        for (int b = p + 1; b <= p + q; ++b) {
            if (!(a == u && b == v)) arcs.emplace_back(a, b);
            if (!(b == u && a == v)) arcs.emplace_back(b, a);
        }
    return Digraph::build(p + q, arcs);
}

Digraph d5() {
    // x_1..x_4 = 1..4, y = 5
    return Digraph::build(5, {{1, 2}, {2, 3}, {3, 4}, {4, 1},
                              {2, 5}, {3, 5}, {5, 3}, {5, 4}});
}

Digraph d6() {
    // x_1..x_5 = 1..5, y = 6
    return Digraph::build(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5},
                              {5, 1}, {1, 3}, {2, 4}, {2, 6},
                              {3, 6}, {4, 6}, {6, 4}, {6, 5}});
}

Digraph thomassen_family(int n, int m) {
    if (m < 3 || m > n)
        throw GraphError("thomassen_family needs 3 <= m <= n, got m=" +
                         std::to_string(m) + ", n=" + std::to_string(n));
    std::vector<std::pair<int, int>> arcs;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            bool present = i < j || i == j + 1;
            if (i < j && j == i + m - 1 && i <= n - m + 1) present = false;
            if (present) arcs.emplace_back(i, j);
        }
    return Digraph::build(n, arcs);
}

Digraph semidegree_one_example(int k) {
    if (k < 4) throw GraphError("semidegree_one_example needs k >= 4");
    const int y = 1, z = 2;
    auto x = [](int i) { return i + 2; };
    // {x_a .. x_b}, empty when b < a
    auto range = [&](std::vector<int>& into, int a, int b) {
        for (int i = a; i <= b; ++i) into.push_back(x(i));
    };

    std::vector<std::vector<int>> outs(k + 3);
    outs[y] = {z};
    outs[z] = {y, x(4)};
    outs[x(1)] = {y, z, x(2), x(4)};
    range(outs[x(1)], 5, k - 1);
    outs[x(2)] = {z, x(1)};
    range(outs[x(2)], 3, k);
    outs[x(3)] = {y, x(1), x(2)};
    range(outs[x(3)], 4, k);
    if (k == 4) {
        outs[x(4)] = {y, z, x(1)};
    } else {
        outs[x(4)] = {y, z, x(5)};
        for (int i = 5; i <= k - 1; ++i) {
            outs[x(i)] = {y, z, x(i + 1)};
            range(outs[x(i)], 4, i - 2);
        }
        outs[x(k)] = {y, z, x(1)};
        range(outs[x(k)], 4, k - 2);
    }

    std::vector<std::pair<int, int>> arcs;
    for (int u = 1; u <= k + 2; ++u)
        for (int v : outs[u]) arcs.emplace_back(u, v);
    Digraph d = Digraph::build(k + 2, arcs);

    // The construction is stated twice in terms of out- and in-neighbourhoods;
    // rebuild the in-lists and require agreement.
    std::vector<std::vector<int>> ins(k + 3);
    ins[y] = {z, x(1)};
    range(ins[y], 3, k);
    ins[z] = {y, x(1), x(2)};
    range(ins[z], 4, k);
    ins[x(1)] = {x(k), x(2), x(3)};
    ins[x(2)] = {x(1), x(3)};
    ins[x(3)] = {x(2)};
    ins[x(4)] = {z, x(1), x(2), x(3)};
    range(ins[x(4)], 6, k);
    for (int i = 5; i <= k - 1; ++i) {
        ins[x(i)] = {x(1), x(2), x(3), x(i - 1)};
        range(ins[x(i)], i + 2, k);
    }
    if (k >= 5) ins[x(k)] = {x(2), x(3), x(k - 1)};
    for (int v = 1; v <= k + 2; ++v) {
        std::vector<int> want = ins[v];
        std::sort(want.begin(), want.end());
        if (d.in_neighbors(v) != want)
            throw GraphError("semidegree_one_example: in-neighbourhood mismatch at vertex " +
                             std::to_string(v));
    }
    return d;
}

ExtremalClass recognize(const Digraph& d) {
    const int n = d.order();
    ExtremalClass cls;
    if (n < 2) return cls;
    std::vector<int> side_a{1}, side_b;
    for (int v = 2; v <= n; ++v)
        (d.adjacency_count(1, v) == 0 ? side_a : side_b).push_back(v);
    if (side_b.empty()) return cls;
    auto independent = [&](const std::vector<int>& side) {
        for (std::size_t i = 0; i < side.size(); ++i)
            for (std::size_t j = i + 1; j < side.size(); ++j)
                if (d.adjacency_count(side[i], side[j]) != 0) return false;
        return true;
    };
    if (!independent(side_a) || !independent(side_b)) return cls;
    std::vector<std::pair<int, int>> missing;
    for (int a : side_a)
        for (int b : side_b) {
            if (!d.has_arc(a, b)) missing.emplace_back(a, b);
            if (!d.has_arc(b, a)) missing.emplace_back(b, a);
            if (missing.size() > 1) return cls;
        }
    cls.p = static_cast<int>(side_a.size());
    cls.q = static_cast<int>(side_b.size());
    cls.side_a = side_a;
    cls.side_b = side_b;
    if (missing.empty()) {
        cls.tag = ExtremalClass::Tag::CompleteBipartite;
    } else {
        cls.tag = ExtremalClass::Tag::CompleteBipartiteMinusArc;
        cls.missing_arc = missing.front();
    }
    return cls;
}

}  // namespace dgl
