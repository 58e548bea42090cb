#include <doctest.h>

#include "dgl/conditions.hpp"
#include "dgl/extremal.hpp"
#include "dgl/verify.hpp"
#include "test_util.hpp"

using namespace dgl;
using dgl_test::Rng;

TEST_CASE("good_pairs") {
    CHECK(good_pairs(dgl_test::directed_cycle(5), PairMode::InOnly).empty());

    // D_{6,5}: exactly {x_1,x_5} and {x_2,x_6}
    auto gp = good_pairs(thomassen_family(6, 5), PairMode::InOnly);
    REQUIRE(gp.size() == 2);
    CHECK(gp[0].x == 1);
    CHECK(gp[0].y == 5);
    CHECK(gp[1].x == 2);
    CHECK(gp[1].y == 6);

    // semi-degree-one example, k=4: exactly {y,x_2} = {1,4} and {z,x_3} = {2,5}
    auto gp2 = good_pairs(semidegree_one_example(4), PairMode::InOnly);
    REQUIRE(gp2.size() == 2);
    CHECK(gp2[0].x == 1);
    CHECK(gp2[0].y == 4);
    CHECK(gp2[1].x == 2);
    CHECK(gp2[1].y == 5);

    // InOnly pairs are a subset of InOrOut pairs
    Rng rng(5);
    for (int i = 0; i < 300; ++i) {
        Digraph d = dgl_test::random_digraph(3 + i % 5, 0.4, rng);
        auto in_only = good_pairs(d, PairMode::InOnly);
        auto either = good_pairs(d, PairMode::InOrOut);
        for (const auto& p : in_only) {
            bool found = false;
            for (const auto& q : either)
                if (q.x == p.x && q.y == p.y) found = true;
            CHECK(found);
        }
    }
}

TEST_CASE("check_star") {
    CHECK(check_star(complete_bipartite(3, 3)).holds);

    auto vac = check_star(dgl_test::directed_cycle(5));
    CHECK(vac.holds);
    CHECK(vac.pairs_checked == 0);

    Digraph s = semidegree_one_example(4);
    CHECK(check_star(s).holds);
    CHECK(s.degrees(1).total() == 5);   // d(y) = n-1
    CHECK(s.degrees(5).total() == 5);   // d(x_3) = n-1
    CHECK(s.degrees(2).total() == 6);   // d(z) = n
    CHECK(s.degrees(4).total() == 6);   // d(x_2) = n
}

TEST_CASE("check_star_star") {
    CHECK(check_star_star(complete_bipartite(3, 3)).holds);

    auto vac = check_star_star(dgl_test::directed_cycle(4));
    CHECK(vac.holds);
    CHECK(vac.pairs_checked == 0);

    // 1 and 2 share out- and in-neighbour 3 but have semi-degree sums 2 < 4
    Digraph d = Digraph::build(4, {{1, 3}, {2, 3}, {3, 1}, {3, 2}});
    auto rep = check_star_star(d);
    CHECK_FALSE(rep.holds);
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].pair.x == 1);
    CHECK(rep.violations[0].pair.y == 2);
    CHECK(rep.violations[0].measurements.at("dout_x") == 1);
    CHECK(rep.violations[0].measurements.at("din_y") == 1);

    // complete digraph on 4 minus both arcs between 1 and 2: semi-degree
    // sums are 2+2 = 4 = n, so the condition still holds
    Digraph k4mm = Digraph::build(
        4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {4, 1}, {4, 2},
            {3, 4}, {4, 3}});
    CHECK(check_star_star(k4mm).holds);
}

TEST_CASE("check_theorem_c") {
    CHECK(check_theorem_c(complete_bipartite(3, 3)).holds);
    CHECK(check_theorem_c(dgl_test::directed_cycle(6)).holds);
    // K*_{3,3}-e drops (**) but keeps the Theorem C conditions
    Digraph minus = complete_bipartite_minus_arc(3, 3, {1, 4});
    CHECK_FALSE(check_star_star(minus).holds);
    CHECK(check_theorem_c(minus).holds);
}

TEST_CASE("StarStar implies TheoremC, exhaustively for n <= 5") {
    for (int n = 2; n <= 4; ++n)
        enumerate_digraphs(n, [](const Digraph& d) {
            if (check_star_star(d).holds) CHECK(check_theorem_c(d).holds);
        });
    // n = 5 sampled here; the acceptance sweep covers the full range
    Rng rng(31);
    for (int i = 0; i < 20000; ++i) {
        Digraph d = dgl_test::random_digraph(5, 0.3 + 0.1 * (i % 6), rng);
        if (check_star_star(d).holds) CHECK(check_theorem_c(d).holds);
    }
}

TEST_CASE("check_meyniel") {
    auto vac = check_meyniel(dgl_test::complete_digraph(4));
    CHECK(vac.holds);
    CHECK(vac.pairs_checked == 0);

    // K*_{3,3}: same-side degree sums are 12 >= 11
    CHECK(check_meyniel(complete_bipartite(3, 3)).holds);

    auto rep = check_meyniel(dgl_test::directed_cycle(4));
    CHECK_FALSE(rep.holds);
    CHECK(rep.violations[0].measurements.at("d_x") == 2);

    // Meyniel implies the degree-sum half of (*) on every good pair
    Rng rng(7);
    for (int i = 0; i < 500; ++i) {
        Digraph d = dgl_test::random_digraph(3 + i % 5, 0.6, rng);
        if (!check_meyniel(d).holds) continue;
        for (const auto& p : good_pairs(d, PairMode::InOnly))
            CHECK(d.degrees(p.x).total() + d.degrees(p.y).total() >=
                  2 * d.order() - 1);
    }
}

TEST_CASE("min_semidegree") {
    CHECK(min_semidegree(dgl_test::directed_cycle(7)).value == 1);

    auto m = min_semidegree(semidegree_one_example(4));
    CHECK(m.value == 1);
    CHECK(m.vertex == 1);  // y
    CHECK(m.side == DegreeSide::Out);

    CHECK(min_semidegree(complete_bipartite(3, 3)).value == 3);
}

TEST_CASE("violations re-measure as violations") {
    Rng rng(13);
    for (int i = 0; i < 400; ++i) {
        Digraph d = dgl_test::random_digraph(3 + i % 6, 0.35, rng);
        const int n = d.order();
        for (const auto& v : check_star(d).violations) {
            int dx = d.degrees(v.pair.x).total(), dy = d.degrees(v.pair.y).total();
            CHECK((dx + dy < 2 * n - 1 || std::min(dx, dy) < n - 1));
            CHECK(v.measurements.at("d_x") == dx);
        }
        for (const auto& v : check_star_star(d).violations) {
            Degrees dx = d.degrees(v.pair.x), dy = d.degrees(v.pair.y);
            CHECK(std::min(dx.out + dy.in, dx.in + dy.out) < n);
        }
        for (const auto& v : check_meyniel(d).violations)
            CHECK(d.degrees(v.pair.x).total() + d.degrees(v.pair.y).total() <
                  2 * n - 1);
    }
}

TEST_CASE("report json shape") {
    auto j = to_json(check_star_star(
        Digraph::build(4, {{1, 3}, {2, 3}, {3, 1}, {3, 2}})));
    CHECK(j["condition"] == "StarStar");
    CHECK(j["holds"] == false);
    CHECK(j["violations"][0]["x"] == 1);
    CHECK(j["violations"][0]["witness"] == 3);
}
