#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "extremal/cubes.hpp"
#include "extremal/generators.hpp"
#include "extremal/shattering.hpp"
#include "extremal/text_format.hpp"
#include "extremal/unlabeled.hpp"
#include "oracles.hpp"

using namespace extremal;

namespace {

Mask bits(const char* s) { return parse_bitstring(s, static_cast<int>(std::string_view(s).size())); }

// A peeling of fig2 from the top of its drawing down, with the representation sets.
const std::vector<std::pair<const char*, const char*>> kTopDown = {
    {"010101", "x6"},       {"010100", "x1,x2,x4"}, {"000100", "x1,x4"}, {"110110", "x5"}, {"010000", "x1,x2"},
    {"000000", "x1"},       {"110100", "x2,x3,x4"}, {"100100", "x3,x4"}, {"110000", "x2,x3"}, {"100000", "x3"},
    {"111100", "x2,x4"},    {"101100", "x4"},       {"111000", "x2"},    {"101000", ""},
};

PeelResult top_down_peel() {
    std::vector<Mask> order;
    for (auto [c, rep] : kTopDown) order.push_back(bits(c));
    return peel_in_order(builtin("fig2"), order);
}

}  // namespace

TEST_CASE("degree sets") {
    auto C = builtin("fig1");
    const auto& d = C.domain();
    CHECK(degree_set(C, bits("000000")) == d.dims({"x1", "x2", "x3"}));
    CHECK(degree_set(ConceptClass(d, {bits("101010")}), bits("101010")).empty());
    auto full = ConceptClass::full_cube(Domain::numbered(4));
    for (Mask c : full.rows()) CHECK(degree_set(full, c) == full.domain().all());
    CHECK_THROWS_AS(degree_set(C, bits("111111")), Error);
    auto O = oracle::of(C);
    for (Mask c : C.rows()) CHECK(oracle::positions(d, degree_set(C, c)) == oracle::degree(O, to_bitstring(c, 6)));
}

TEST_CASE("teaching sets") {
    auto C = builtin("fig1");
    for (Mask c : C.rows()) {
        CHECK(is_teaching_set(C, c, C.domain().all()));
        CHECK(is_teaching_set(C, c, degree_set(C, c)));
    }
    auto two = ConceptClass::from_strings(Domain::numbered(2), std::vector<std::string>{"00", "11"});
    CHECK(is_teaching_set(two, 0b00, two.domain().dims({"x1"})));
    CHECK_FALSE(is_teaching_set(C, bits("000000"), DimSet{}));
}

TEST_CASE("clashes") {
    auto C = builtin("fig1");
    for (Mask ref : {Mask{0}, bits("101010"), bits("111111")}) CHECK(is_non_clashing(disagreement_map(C, ref)));
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto R = random_class(5, 0.5, seed);
        CHECK(is_non_clashing(disagreement_map(R, 0b10110)));
    }
    CHECK(is_non_clashing(degree_map(C)));
    CHECK(is_non_clashing(degree_map(builtin("fig2"))));

    auto three = ConceptClass::from_strings(Domain::numbered(2), std::vector<std::string>{"00", "01", "11"});
    RepresentationMap bad(three, {DimSet{}, DimSet{}, three.domain().dims({"x1"})});
    auto clash = find_clash(bad);
    REQUIRE(clash.has_value());
    CHECK(clash->a == 0b00);
    CHECK(clash->b == 0b01);
    CHECK_FALSE(bad.is_injective());
}

TEST_CASE("corners") {
    auto C = builtin("fig2");
    CHECK(is_corner(C, bits("010101")));
    CHECK_FALSE(is_corner(C, bits("010100")));
    auto full = ConceptClass::full_cube(Domain::numbered(3));
    for (Mask c : full.rows()) CHECK(is_corner(full, c));
    CHECK_THROWS_AS(is_corner(parity_class(3), 0), Error);
    CHECK_THROWS_AS(is_corner(C, bits("111111")), Error);
    auto O = oracle::of(C);
    for (Mask c : C.rows()) CHECK(is_corner(C, c) == (oracle::maximal_cubes_at(O, 6, to_bitstring(c, 6)) == 1));
}

TEST_CASE("corner peeling") {
    auto C = builtin("fig2");
    auto r = corner_peel(C);
    CHECK(r.certificate.steps.size() == 14);
    CHECK(r.map.is_full());
    CHECK(is_non_clashing(r.map));
    CHECK(r.certificate.steps.back().rep.empty());
    CHECK(reconstruct_unlabeled(r.map, DimSet{}).bits == r.certificate.steps.back().concept_bits);

    // each step's rep is the degree in the remaining class and the unique maximal cube's dims
    ConceptClass current = C;
    for (const auto& step : r.certificate.steps) {
        CHECK(step.rep == degree_set(current, step.concept_bits));
        CHECK(maximal_cubes_at(current, step.concept_bits).size() == 1);
        CHECK(step.cube.dims == step.rep);
        current = current.without(step.concept_bits);
        CHECK(is_extremal(current));
    }

    auto single = ConceptClass(Domain::numbered(3), {0b011});
    auto s = corner_peel(single);
    CHECK(s.certificate.steps.size() == 1);
    CHECK(s.map.rep(0b011).empty());

    CHECK_THROWS_AS(corner_peel(parity_class(3)), Error);
    CHECK_THROWS_AS(corner_peel(ConceptClass(Domain::numbered(2))), Error);
}

TEST_CASE("peeling in the order of the table") {
    auto r = top_down_peel();
    const auto& d = r.map.concept_class().domain();
    for (std::size_t i = 0; i < kTopDown.size(); ++i) {
        CHECK(to_bitstring(r.certificate.steps[i].concept_bits, 6) == kTopDown[i].first);
        CHECK(format_dims(d, r.certificate.steps[i].rep) == kTopDown[i].second);
    }
    CHECK(r.map.is_full());
    CHECK(is_non_clashing(r.map));
    // the arrow row {x2,x4} is 111100; 111110 is not a member of the class
    CHECK(to_string(reconstruct_unlabeled(r.map, d.dims({"x2", "x4"}))) == "111100");
    CHECK_FALSE(builtin("fig2").contains(bits("111110")));

    std::vector<Mask> reversed;
    for (auto it = kTopDown.rbegin(); it != kTopDown.rend(); ++it) reversed.push_back(bits(it->first));
    CHECK_THROWS_AS(peel_in_order(builtin("fig2"), reversed), Error);
    CHECK_THROWS_AS(peel_in_order(builtin("fig2"), {bits("010101")}), Error);
}

TEST_CASE("unlabeled compression") {
    auto r = top_down_peel();
    const auto& C = r.map.concept_class();
    const auto& d = C.domain();
    auto s = parse_sample(d, "x2=1,x4=1,x5=0");
    CHECK(compress_unlabeled(r.map, s) == d.dims({"x2", "x4"}));
    CHECK(to_string(unlabeled_representative(r.map, s)) == "111100");
    for (Mask c : C.rows()) CHECK(compress_unlabeled(r.map, Sample::of(Concept{d, c}, d.all())) == r.map.rep(c));
    CHECK(compress_unlabeled(r.map, Sample{d, DimSet{}, 0}).empty());
    CHECK(to_string(reconstruct_unlabeled(r.map, DimSet{})) == "101000");
    CHECK_THROWS_AS(reconstruct_unlabeled(r.map, d.dims({"x5", "x6"})), Error);
    CHECK_THROWS_AS(compress_unlabeled(r.map, parse_sample(d, "x1=0,x2=0,x6=1")), Error);

    auto single = ConceptClass(Domain::numbered(2), {0b10});
    CHECK(reconstruct_unlabeled(corner_peel(single).map, DimSet{}).bits == 0b10);

    for (const auto* name : {"fig1", "fig2", "fig3", "glued_complement(2)"}) {
        auto B = builtin(name);
        auto rep = verify_unlabeled(corner_peel(B).map);
        CHECK(rep.passed());
        CHECK(rep.max_compressed_size <= vc_dimension(B));
    }
}

TEST_CASE("unique small-representation concept per sample") {
    auto r = top_down_peel();
    CHECK_FALSE(find_non_unique_sample(r.map).has_value());

    // swapping two images keeps a bijection onto st(C); clashes and non-unique samples must coincide
    auto reps = r.map.reps();
    const auto& C = r.map.concept_class();
    std::size_t checked = 0;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        for (std::size_t j = i + 1; j < reps.size(); ++j) {
            auto swapped = reps;
            std::swap(swapped[i], swapped[j]);
            RepresentationMap bad(C, swapped);
            CHECK(bad.is_full());
            bool clash = find_clash(bad).has_value();
            bool non_unique = find_non_unique_sample(bad).has_value();
            CHECK(clash == non_unique);
            ++checked;
        }
    }
    CHECK(checked == 91);
}

TEST_CASE("restricted representation maps") {
    auto r = top_down_peel();
    const auto& C = r.map.concept_class();
    const auto& d = C.domain();
    auto same = restrict_representation(r.map, d.all());
    CHECK(same.reps() == r.map.reps());

    auto A = d.dims({"x2", "x4", "x5"});
    auto rA = restrict_representation(r.map, A);
    CHECK(rA.concept_class().size() == 5);
    CHECK(rA.is_full());
    CHECK(is_non_clashing(rA));

    auto r0 = restrict_representation(r.map, DimSet{});
    CHECK(r0.concept_class().size() == 1);
    CHECK(r0.reps()[0].empty());

    CHECK_THROWS_AS(restrict_representation(degree_map(C), A), Error);
}

TEST_CASE("representation map text") {
    auto r = top_down_peel();
    auto text = format_representation_map(r.map);
    CHECK(text.find("010100 -> {x1,x2,x4}\n") != std::string::npos);
    auto back = parse_representation_map(r.map.concept_class(), text);
    CHECK(back.reps() == r.map.reps());
    CHECK_THROWS_AS(parse_representation_map(r.map.concept_class(), "010100 -> {x1}\n"), Error);
    CHECK_THROWS_AS(parse_representation_map(r.map.concept_class(), "010100 {x1}\n"), Error);
}

TEST_CASE("cornerless hunt") {
    HuntOptions o;
    o.n_max = 3;
    o.exhaustive_max = 3;
    auto h = hunt_cornerless(o);
    CHECK_FALSE(h.counterexample.has_value());
    CHECK(h.levels.size() == 4);
    o.jobs = 4;
    auto h4 = hunt_cornerless(o);
    CHECK(h4.total_checked() == h.total_checked());

    // oracle count of nonempty extremal classes over n <= 2
    std::size_t expect = 0;
    for (int n = 0; n <= 2; ++n) {
        oracle::for_each_class(n, [&](const oracle::Cls& K) { expect += !K.empty() && oracle::extremal(K, n); });
    }
    HuntOptions all;
    all.n_max = 2;
    all.exhaustive_max = 2;
    all.up_to_symmetry = false;
    CHECK(hunt_cornerless(all).total_checked() == expect);

    HuntOptions random;
    random.n_max = 5;
    random.exhaustive_max = 2;
    random.random_samples = 10;
    auto hr = hunt_cornerless(random);
    CHECK_FALSE(hr.counterexample.has_value());
    CHECK(hr.levels.back().classes_checked == 10);
}

TEST_CASE("intermediate hunt") {
    auto full = ConceptClass::full_cube(Domain::numbered(2));
    auto one = ConceptClass(full.domain(), {0b00});
    auto h = hunt_intermediate(one, full);
    REQUIRE(h.found.has_value());
    CHECK(is_extremal(*h.found));
    CHECK(h.found->size() > 1);
    CHECK(h.found->size() < 4);

    auto fig1 = builtin("fig1");
    auto steps = corner_peel(fig1).certificate.steps;
    auto C1 = fig1.without(steps[0].concept_bits).without(steps[1].concept_bits).without(steps[2].concept_bits);
    auto h1 = hunt_intermediate(C1, fig1);
    REQUIRE(h1.found.has_value());
    CHECK(is_extremal(*h1.found));

    CHECK_THROWS_AS(hunt_intermediate(full, one), Error);
    CHECK_THROWS_AS(hunt_intermediate(one, ConceptClass(full.domain(), {0b00, 0b11})), Error);
}
