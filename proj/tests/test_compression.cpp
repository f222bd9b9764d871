#include <doctest.h>

#include "extremal/compression.hpp"
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

}  // namespace

TEST_CASE("compress") {
    auto C = builtin("fig2");
    const auto& d = C.domain();
    LabeledScheme scheme(C);
    CHECK(scheme.vc_dimension() == 3);
    auto s = parse_sample(d, "x2=1,x4=1,x5=0");
    auto all = scheme.compress_all_choices(s);
    REQUIRE(all.size() == 2);
    CHECK(format_sample(all[0]) == "x5=0");
    CHECK(format_sample(all[1]) == "x2=1,x4=1");
    CHECK(scheme.compress(s) == all[0]);
    auto empty = scheme.compress(Sample{d, DimSet{}, 0});
    CHECK(empty.dims.empty());
    CHECK_THROWS_AS(scheme.compress(parse_sample(d, "x1=0,x2=0,x6=1")), Error);
    CHECK_THROWS_AS(LabeledScheme(parity_class(3)), Error);
}

TEST_CASE("reconstruct") {
    auto C = builtin("fig2");
    const auto& d = C.domain();
    LabeledScheme scheme(C);
    CHECK(to_string(scheme.reconstruct(parse_sample(d, "x2=1,x4=1"))) == "010100");
    CHECK(to_string(scheme.reconstruct(parse_sample(d, "x5=0"))) == "110100");
    CHECK(scheme.reconstruct(Sample{d, DimSet{}, 0}).bits == C.rows().front());
    CHECK(to_string(scheme.reconstruct(parse_sample(d, "x2=0,x3=1,x4=1"))) == "101100");

    try {
        scheme.reconstruct(parse_sample(d, "x1=0,x2=0,x3=0,x4=0"));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InputError);
    }
    try {
        scheme.reconstruct(parse_sample(d, "x5=1,x6=1"));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NoCube);
    }

    // the only candidate: a full concept restricted to its 0-dimensional maximal cube
    auto single = ConceptClass(Domain::numbered(3), {0b101});
    CHECK(LabeledScheme(single).reconstruct(Sample{single.domain(), DimSet{}, 0}).bits == 0b101);
}

TEST_CASE("consistent and candidate sets") {
    auto C = builtin("fig2");
    const auto& d = C.domain();
    auto s = parse_sample(d, "x2=1,x4=1,x5=0");
    auto Hs = consistent_set(C, s);
    CHECK(strings(Hs) == std::vector<std::string>{"010100", "010101", "110100", "111100"});
    CHECK(consistent_set(C, Sample{d, DimSet{}, 0}) == C);
    CHECK(consistent_set(C, parse_sample(d, "x1=0,x2=0,x6=1")).empty());

    auto cubes = maximal_cubes_containing(C, s);
    REQUIRE(cubes.size() == 2);
    auto HB = candidate_set(C, s, cubes[1]);
    CHECK(strings(HB) == std::vector<std::string>{"010100", "110100", "111100"});
    CHECK(HB.size() < Hs.size());
    auto HB5 = candidate_set(C, s, cubes[0]);
    for (Mask h : HB5.rows()) CHECK(Hs.contains(h));
    // oracle: h in a cube with dims {x5} agreeing with s on x5
    oracle::Cls expect;
    for (const auto& c : oracle::of(C)) {
        if (c[4] == '0' && oracle::has_cube_at(oracle::of(C), c, {4})) expect.insert(c);
    }
    CHECK(oracle::of(HB5) == expect);

    Mask c = parse_bitstring("110110", 6);
    auto full = Sample::of(Concept{d, c}, d.all());
    for (const auto& B : maximal_cubes_containing(C, full)) {
        auto H = candidate_set(C, full, B);
        CHECK(strings(H) == std::vector<std::string>{"110110"});
        CHECK(consistent_set(C, full) == H);
    }

    Cube foreign{d.sub(s.dims), DimSet{}, 0};
    CHECK_THROWS_AS(candidate_set(C, s, foreign), Error);
}

TEST_CASE("verify_scheme") {
    auto r1 = verify_scheme(LabeledScheme(builtin("fig1")));
    CHECK(r1.passed());
    CHECK(r1.subdomains == 64);
    CHECK(r1.max_compressed_size == 2);
    std::size_t samples = 0;
    for (const auto& S : oracle::all_subsets(6)) samples += oracle::restrict(oracle::of(builtin("fig1")), S).size();
    CHECK(r1.samples == samples);

    auto r2 = verify_scheme(LabeledScheme(builtin("fig2")));
    CHECK(r2.passed());
    CHECK(r2.max_compressed_size == 3);
    CHECK(r2.round_trips > r2.samples);

    auto r3 = verify_scheme(LabeledScheme(ConceptClass::full_cube(Domain::numbered(3))));
    CHECK(r3.passed());
    CHECK(r3.max_compressed_size == 3);
}

TEST_CASE("cubes of a restriction lift, and every lifted cube reconstructs the sample") {
    for (const char* name : {"fig1", "fig2", "fig3"}) {
        auto C = builtin(name);
        auto O = oracle::of(C);
        int n = C.dims();
        const auto& d = C.domain();
        for (const auto& smp : oracle::all_samples(O, n)) {
            Sample s{d, DimSet{}, 0};
            for (auto [i, v] : smp) {
                s.dims.bits |= d.bit(i);
                if (v == '1') s.labels |= d.bit(i);
            }
            // cube dimension sets of C|dom(s) are strongly shattered by C
            for (const auto& D : strongly_shattered_sets(restrict(C, s.dims)).sets) {
                CHECK_FALSE(cubes_with_dims(C, DimSet{scatter_bits(D.bits, s.dims.bits)}).empty());
            }
            // any cube of C with dim(B) completes s correctly
            for (const auto& B : maximal_cubes_containing(C, s)) {
                Mask D = scatter_bits(B.dims.bits, s.dims.bits);
                auto HB = candidate_set(C, s, B);
                CHECK_FALSE(HB.empty());
                for (const auto& Bp : cubes_with_dims(C, DimSet{D})) {
                    Mask h = Bp.tag | (s.labels & D);
                    CHECK(C.contains(h));
                    CHECK(s.consistent_with(h));
                }
            }
        }
    }
}
