#include "extremal/compression.hpp"

#include <algorithm>

#include "extremal/cubes.hpp"
#include "extremal/shattering.hpp"

namespace extremal {

namespace {

void require_same_domain(const ConceptClass& C, const Sample& s) {
    if (!(s.domain == C.domain())) fail(ErrorCode::InputError, "sample and class have different domains");
}

// Maximal cubes of C|U containing `labels`, in the parent layout, canonical order.
std::vector<std::pair<Mask, Mask>> admissible_cubes(const detail::ReductionTable& table, Mask labels) {
    std::vector<std::pair<Mask, Mask>> out;
    for (auto [S, t] : table.maximal_cubes()) {
        if ((labels & ~S) == t) out.emplace_back(S, t);
    }
    std::sort(out.begin(), out.end(), [](auto a, auto b) { return canonical_less(DimSet{a.first}, DimSet{b.first}); });
    return out;
}

}  // namespace

LabeledScheme::LabeledScheme(ConceptClass C, CubeChoiceRule choice, ReconstructionRule rule)
    : class_(std::move(C)), choice_(choice), rule_(rule), table_(class_.rows(), class_.domain().all().bits) {
    if (!is_extremal(class_)) fail(ErrorCode::NotExtremal, "the labeled scheme needs an extremal class");
    vc_dim_ = static_cast<int>(table_.levels().size()) - 1;
}

std::vector<Sample> LabeledScheme::compress_all_choices(const Sample& s) const {
    require_same_domain(class_, s);
    auto rows = detail::project(class_.rows(), s.dims.bits);
    if (!detail::contains_sorted(rows, s.labels)) {
        fail(ErrorCode::NotASample, "no concept of the class is consistent with the sample");
    }
    detail::ReductionTable local(rows, s.dims.bits);
    std::vector<Sample> out;
    for (auto [S, t] : admissible_cubes(local, s.labels)) out.push_back(s.restricted_to(DimSet{S}));
    return out;
}

Sample LabeledScheme::compress(const Sample& s) const {
    // Admissible cubes come back in canonical dimension-set order.
    return compress_all_choices(s).front();
}

Concept LabeledScheme::reconstruct(const Sample& compressed) const {
    require_same_domain(class_, compressed);
    if (compressed.size() > vc_dim_) {
        fail(ErrorCode::InputError, "compressed sample has " + std::to_string(compressed.size()) +
                                        " labels, more than VCdim = " + std::to_string(vc_dim_));
    }
    auto tags = table_.tags(compressed.dims.bits);
    if (tags.empty()) fail(ErrorCode::NoCube, "no cube of the class has the compressed sample's dimension set");
    // Tags are sorted, so the first one is lexicographically least.
    return Concept{class_.domain(), tags.front() | compressed.labels};
}

ConceptClass consistent_set(const ConceptClass& C, const Sample& s) {
    require_same_domain(C, s);
    std::vector<Mask> rows;
    for (Mask r : C.rows()) {
        if (s.consistent_with(r)) rows.push_back(r);
    }
    return ConceptClass(C.domain(), std::move(rows));
}

ConceptClass candidate_set(const ConceptClass& C, const Sample& s, const Cube& B) {
    require_same_domain(C, s);
    if (!(B.domain == C.domain().sub(s.dims))) {
        fail(ErrorCode::InputError, "candidate_set: cube must live on the sample's domain");
    }
    auto admissible = maximal_cubes_containing(C, s);
    if (std::find(admissible.begin(), admissible.end(), B) == admissible.end()) {
        fail(ErrorCode::InputError, "candidate_set: cube is not a maximal cube of C|dom(s) containing s");
    }
    Mask D = scatter_bits(B.dims.bits, s.dims.bits);
    std::vector<Mask> rows;
    for (const auto& cube : cubes_with_dims(C, DimSet{D})) rows.push_back(cube.tag | (s.labels & D));
    return ConceptClass(C.domain(), std::move(rows));
}

SchemeReport verify_scheme(const LabeledScheme& scheme) {
    const ConceptClass& C = scheme.concept_class();
    require_within_cap(C.dims(), "verify_scheme");
    SchemeReport rep;
    rep.vc_dimension = scheme.vc_dimension();
    const Domain& d = C.domain();
    for_each_subset(d.all().bits, [&](Mask U) {
        ++rep.subdomains;
        auto rows = detail::project(C.rows(), U);
        detail::ReductionTable local(rows, U);
        for (Mask labels : rows) {
            ++rep.samples;
            Sample s{d, DimSet{U}, labels};
            for (auto [S, t] : admissible_cubes(local, labels)) {
                ++rep.round_trips;
                Sample compressed = s.restricted_to(DimSet{S});
                rep.max_compressed_size = std::max(rep.max_compressed_size, compressed.size());
                if (compressed.size() > rep.vc_dimension) {
                    rep.failures.push_back({s, compressed, "compressed size exceeds VCdim"});
                    continue;
                }
                try {
                    Concept h = scheme.reconstruct(compressed);
                    if (!C.contains(h.bits)) {
                        rep.failures.push_back({s, compressed, "reconstruction is not a member of the class"});
                    } else if (!s.consistent_with(h.bits)) {
                        rep.failures.push_back({s, compressed, "reconstruction disagrees with the sample"});
                    }
                } catch (const Error& e) {
                    rep.failures.push_back({s, compressed, e.what()});
                }
            }
        }
    });
    return rep;
}

}  // namespace extremal
