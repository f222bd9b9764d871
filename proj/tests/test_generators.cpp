#include <doctest.h>

#include "extremal/cubes.hpp"
#include "extremal/generators.hpp"
#include "extremal/shattering.hpp"
#include "extremal/text_format.hpp"
#include "oracles.hpp"

using namespace extremal;

namespace {

std::vector<std::string> strings(const ConceptClass& C) {
    std::vector<std::string> out;
    for (Mask r : C.rows()) out.push_back(to_bitstring(r, C.dims()));
    return out;
}

Rational q(long num, long den = 1) { return Rational(num) / Rational(den); }

}  // namespace

TEST_CASE("downward closed generators") {
    auto h = hamming_ball(3, 1);
    CHECK(strings(h) == std::vector<std::string>{"000", "001", "010", "100"});
    CHECK(is_extremal(h));
    CHECK(vc_dimension(h) == 1);
    CHECK(hamming_ball(4, 4) == ConceptClass::full_cube(Domain::numbered(4)));
    CHECK_THROWS_AS(hamming_ball(3, 4), Error);

    Domain d = Domain::numbered(3);
    std::vector<Mask> seeds{0b110};
    auto dc = downward_closure(d, seeds);
    CHECK(strings(dc) == std::vector<std::string>{"000", "010", "100", "110"});
    CHECK(is_extremal(dc));
    CHECK(is_downward_closed(dc));
    for (int n = 0; n <= 6; ++n) {
        for (int r = 0; r <= n; ++r) {
            auto ball = hamming_ball(n, r);
            CHECK(is_extremal(ball));
            CHECK(ball.size() == sauer_shelah_bound(n, r));
        }
    }
}

TEST_CASE("line arrangements") {
    auto fig3 = cells_in_region(fig3_arrangement());
    CHECK(strings(fig3) == std::vector<std::string>{"0000", "0010", "0110", "1000", "1010", "1011", "1110", "1111"});
    CHECK(fig3 == builtin("fig3"));
    CHECK(is_extremal(fig3));
    CHECK_FALSE(fig3.contains(0b0100));
    CHECK_FALSE(fig3.contains(0b0111));

    SUBCASE("whole plane, generic lines: a maximum class of VCdim 2") {
        LineArrangement a;
        a.lines = {{1, 0, 0}, {0, 1, 0}, {1, 1, 3}, {1, -1, 5}};
        auto C = cells_in_region(a);
        CHECK(C.size() == 1 + 4 + 6);
        CHECK(is_extremal(C));
        CHECK(vc_dimension(C) == 2);
        CHECK(C.size() == sauer_shelah_bound(4, 2));
    }
    SUBCASE("region containing every crossing") {
        LineArrangement a;
        a.lines = {{1, 0, 0}, {0, 1, 0}, {1, 1, 1}};
        a.region = std::vector<Point>{{-10, -10}, {10, -10}, {10, 10}, {-10, 10}};
        auto C = cells_in_region(a);
        CHECK(C.size() == 7);
        CHECK(C.size() == sauer_shelah_bound(3, 2));
    }
    SUBCASE("one line through a region") {
        LineArrangement a;
        a.lines = {{1, 0, 0}};
        a.region = std::vector<Point>{{-1, -1}, {1, -1}, {0, 1}};
        CHECK(strings(cells_in_region(a)) == std::vector<std::string>{"0", "1"});
    }
    SUBCASE("boundary touching does not count") {
        LineArrangement a;
        a.lines = {{1, 0, 0}};
        a.region = std::vector<Point>{{0, 0}, {1, 0}, {1, 1}};
        CHECK(strings(cells_in_region(a)) == std::vector<std::string>{"1"});
    }
    SUBCASE("exact rationals") {
        LineArrangement a;
        a.lines = {{3, 0, 1}};
        a.region = std::vector<Point>{{q(1, 3), 0}, {q(2, 3), 0}, {q(1, 2), 1}};
        CHECK(strings(cells_in_region(a)) == std::vector<std::string>{"1"});
    }
    SUBCASE("invalid input") {
        LineArrangement concurrent;
        concurrent.lines = {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}};
        CHECK_THROWS_AS(cells_in_region(concurrent), Error);
        LineArrangement twice;
        twice.lines = {{1, 1, 1}, {2, 2, 2}};
        CHECK_THROWS_AS(cells_in_region(twice), Error);
        LineArrangement null_line;
        null_line.lines = {{0, 0, 1}};
        CHECK_THROWS_AS(cells_in_region(null_line), Error);
        LineArrangement flat;
        flat.lines = {{1, 0, 0}};
        flat.region = std::vector<Point>{{0, 0}, {1, 1}, {2, 2}};
        CHECK_THROWS_AS(cells_in_region(flat), Error);
    }
}

TEST_CASE("s-t orientations") {
    auto tri = parse_graph("s-u,u-t,s-t", "s", "t");
    auto C = st_orientation_class(tri);
    CHECK(C.size() == 5);
    CHECK(count_st_connected_subgraphs(tri) == 5);
    CHECK(is_extremal(C));
    CHECK(C.domain().name(2) == "s-t");

    auto edge = parse_graph("s-t", "s", "t");
    CHECK(strings(st_orientation_class(edge)) == std::vector<std::string>{"0"});
    auto back = parse_graph("t-s", "s", "t");
    CHECK(strings(st_orientation_class(back)) == std::vector<std::string>{"1"});

    CHECK_THROWS_AS(parse_graph("s-s", "s", "t"), Error);
    CHECK_THROWS_AS(parse_graph("s-t,t-s", "s", "t"), Error);
    CHECK_THROWS_AS(parse_graph("s-u", "s", "t"), Error);
}

TEST_CASE("orientation identity on small graphs") {
    // every simple graph with at most 4 edges on 4 vertices, every ordered terminal pair
    std::vector<std::pair<int, int>> all_pairs;
    for (int u = 0; u < 4; ++u) {
        for (int v = u + 1; v < 4; ++v) all_pairs.emplace_back(u, v);
    }
    std::size_t graphs = 0;
    for (unsigned m = 0; m < (1u << all_pairs.size()); ++m) {
        if (std::popcount(m) > 4) continue;
        RefGraph g;
        g.vertex_count = 4;
        for (std::size_t i = 0; i < all_pairs.size(); ++i) {
            if (m >> i & 1u) g.edges.push_back(all_pairs[i]);
        }
        for (int s = 0; s < 4; ++s) {
            for (int t = 0; t < 4; ++t) {
                if (s == t) continue;
                g.s = s;
                g.t = t;
                auto C = st_orientation_class(g);
                CHECK(C.size() == oracle::count_orientations(4, g.edges, s, t));
                CHECK(count_st_connected_subgraphs(g) == oracle::count_connecting_subgraphs(4, g.edges, s, t));
                CHECK(C.size() == count_st_connected_subgraphs(g));
                if (!C.empty()) CHECK(is_extremal(C));
                ++graphs;
            }
        }
    }
    CHECK(graphs > 0);
}

TEST_CASE("glued cubes") {
    for (int k = 1; k <= 3; ++k) {
        auto G = glued_cube(k);
        int n = (1 << k) + k;
        CHECK(G.dims() == n);
        CHECK(G.size() == (std::size_t{1} << (k + 1)));
        CHECK(is_extremal(G));
        auto C = glued_cube_complement(k);
        CHECK(C.size() == (std::size_t{1} << n) - (std::size_t{1} << (k + 1)));
        CHECK(sauer_shelah_bound(n, n - 2) - C.size() == (std::size_t{1} << k) - static_cast<std::size_t>(k) - 1);
        if (k <= 2) {
            CHECK(is_extremal(C));
            CHECK(vc_dimension(C) == n - 2);
        }
    }
    auto C = glued_cube_complement(2);
    CHECK(C.size() == 56);
    CHECK(sauer_shelah_bound(6, 4) == 57);
    auto absent = complement(C);
    CHECK(absent.size() == 8);
    for (Mask a : absent.rows()) CHECK(vc_dimension(C.with(a)) == 5);
    CHECK_THROWS_AS(glued_cube_complement(4), Error);
}

TEST_CASE("complement duality") {
    auto full = ConceptClass::full_cube(Domain::numbered(3));
    auto r = complement_duality_check(full);
    CHECK(r.passed());
    CHECK(r.checked == 8);
    CHECK(complement_duality_check(parity_class(3)).passed());
    CHECK(complement_duality_check(builtin("fig1")).passed());
    CHECK(complement_duality_check(builtin("fig1")).checked == 64);
    CHECK(strongly_shattered_sets(parity_class(3)).contains(DimSet{}));
    CHECK_FALSE(shattered_sets(complement(parity_class(3))).contains(parity_class(3).domain().all()));
}

TEST_CASE("enumeration") {
    auto one = enumerate_extremal(1);
    CHECK(one.size() == 4);
    std::size_t expect2 = 0;
    oracle::for_each_class(2, [&](const oracle::Cls& K) { expect2 += oracle::extremal(K, 2); });
    CHECK(enumerate_extremal(2).size() == expect2);
    CHECK(enumerate_extremal(2).size() == enumerate_extremal(2).size());
    std::size_t expect3 = 0;
    oracle::for_each_class(3, [&](const oracle::Cls& K) { expect3 += oracle::extremal(K, 3); });
    CHECK(enumerate_extremal(3).size() == expect3);

    // orbit representatives: canonical, distinct, and covering every extremal class
    auto reps = enumerate_extremal(3, true);
    std::set<std::vector<Mask>> seen;
    for (const auto& C : reps) {
        CHECK(canonical_form(C) == C);
        seen.insert(std::vector<Mask>(C.rows().begin(), C.rows().end()));
    }
    CHECK(seen.size() == reps.size());
    for (const auto& C : enumerate_extremal(3)) {
        auto K = canonical_form(C);
        CHECK(seen.count(std::vector<Mask>(K.rows().begin(), K.rows().end())) == 1);
    }
    CHECK(canonical_form(flip_column(builtin("fig3"), 2)) == canonical_form(builtin("fig3")));
}

TEST_CASE("random classes") {
    CHECK(random_class(5, 0.3, 7) == random_class(5, 0.3, 7));
    CHECK_FALSE(random_class(5, 0.3, 7) == random_class(5, 0.3, 8));
    CHECK(random_class(4, 0.0, 1).empty());
    CHECK(random_class(4, 1.0, 1).size() == 16);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto C = random_extremal_class(5, seed);
        CHECK_FALSE(C.empty());
        CHECK(is_extremal(C));
        CHECK(C == random_extremal_class(5, seed));
    }
}

TEST_CASE("builtins") {
    auto fig1 = builtin("fig1");
    CHECK(fig1.size() == 18);
    CHECK(is_extremal(fig1));
    CHECK(vc_dimension(fig1) == 2);
    auto fig2 = builtin("fig2");
    CHECK(fig2.size() == 14);
    CHECK(expression_to_class(as_expression(fig2.domain(), maximal_cubes(fig2))) == fig2);
    CHECK(builtin("fig3").size() == 8);
    CHECK(builtin("parity(3)") == parity_class(3));
    CHECK(builtin("hamming(5,2)") == hamming_ball(5, 2));
    CHECK(builtin("glued(2)") == glued_cube(2));
    CHECK(builtin("glued_complement(2)") == glued_cube_complement(2));
    CHECK(builtin("cube(3)").size() == 8);
    CHECK_THROWS_AS(builtin("fig9"), Error);
    CHECK_THROWS_AS(builtin("parity(x)"), Error);
    CHECK_THROWS_AS(builtin("hamming(3)"), Error);
    for (const char* name : {"fig1", "fig2", "fig3", "hamming(5,2)", "glued(2)", "glued_complement(2)", "cube(4)"}) {
        CHECK(is_extremal(builtin(name)));
    }
}
