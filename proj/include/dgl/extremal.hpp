#ifndef DGL_EXTREMAL_HPP
#define DGL_EXTREMAL_HPP

#include <utility>
#include <vector>

#include "dgl/digraph.hpp"

namespace dgl {

/// Structural classification against the extremal classes of the two
/// long-cycle theorems: K*_{p,q} and K*_{p,q} minus one arc.
struct ExtremalClass {
    enum class Tag { CompleteBipartite, CompleteBipartiteMinusArc, Other };
    Tag tag = Tag::Other;
    int p = 0;
    int q = 0;
    std::pair<int, int> missing_arc{0, 0};  // MinusArc only
    std::vector<int> side_a;
    std::vector<int> side_b;

    bool is_balanced_bipartite() const {
        return tag != Tag::Other && p == q;
    }
};

/// K*_{p,q}: side one is 1..p, side two is p+1..p+q, all 2pq cross arcs.
Digraph complete_bipartite(int p, int q);
Digraph complete_bipartite_minus_arc(int p, int q, std::pair<int, int> e);

/// The two strong locally semicomplete digraphs without a 3-cycle.
/// Labels: x_1..x_4 = 1..4, y = 5 (order five); x_1..x_5 = 1..5, y = 6.
Digraph d5();
Digraph d6();

/// Thomassen's D_{n,m}: arcs {x_i x_j : i<j or i=j+1} minus
/// {x_i x_{i+m-1} : 1 <= i <= n-m+1}. Strong, no m-cycle.
Digraph thomassen_family(int n, int m);

/// Strong digraph on k+2 vertices with minimum semi-degree one that meets
/// the in-neighbour degree condition yet has no (n-1)-cycle.
/// Labels: y = 1, z = 2, x_i = i+2.
Digraph semidegree_one_example(int k);

/// Detects the two classes from the non-adjacency partition; everything
/// else is Other. No isomorphism search.
ExtremalClass recognize(const Digraph& d);

}  // namespace dgl

#endif
