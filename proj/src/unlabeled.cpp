#include "extremal/unlabeled.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <sstream>

#include "extremal/cubes.hpp"
#include "extremal/detail/kernels.hpp"
#include "extremal/generators.hpp"
#include "extremal/shattering.hpp"
#include "extremal/text_format.hpp"

namespace extremal {

DimSet degree_set(const ConceptClass& C, Mask c) {
    if (!C.contains(c)) fail(ErrorCode::InputError, "degree_set: concept is not a member of the class");
    DimSet out;
    for (int i = 0; i < C.dims(); ++i) {
        Mask b = C.domain().bit(i);
        if (C.contains(c ^ b)) out.bits |= b;
    }
    return out;
}

bool is_teaching_set(const ConceptClass& C, Mask c, DimSet S) {
    if (!C.contains(c)) fail(ErrorCode::InputError, "is_teaching_set: concept is not a member of the class");
    return std::all_of(C.rows().begin(), C.rows().end(), [&](Mask other) { return other == c || ((other ^ c) & S.bits); });
}

// ---------------------------------------------------------------------------

RepresentationMap::RepresentationMap(ConceptClass C, std::vector<DimSet> reps) : class_(std::move(C)), reps_(std::move(reps)) {
    if (reps_.size() != class_.size()) fail(ErrorCode::InputError, "representation map must assign one set per concept");
    for (DimSet S : reps_) {
        if (!S.subset_of(class_.domain().all())) fail(ErrorCode::InputError, "representation set outside the domain");
    }
}

DimSet RepresentationMap::rep(Mask c) const {
    auto i = class_.index_of(c);
    if (!i) fail(ErrorCode::InputError, "concept is not a member of the class");
    return reps_[*i];
}

std::optional<Mask> RepresentationMap::preimage(DimSet S) const {
    for (std::size_t i = 0; i < reps_.size(); ++i) {
        if (reps_[i] == S) return class_.rows()[i];
    }
    return std::nullopt;
}

bool RepresentationMap::is_injective() const {
    std::set<Mask> seen;
    for (DimSet S : reps_) {
        if (!seen.insert(S.bits).second) return false;
    }
    return true;
}

bool RepresentationMap::is_full() const {
    if (!is_injective()) return false;
    SetFamily image(class_.domain(), reps_);
    return image == strongly_shattered_sets(class_);
}

std::string format_representation_map(const RepresentationMap& r) {
    std::string out;
    const auto& C = r.concept_class();
    for (std::size_t i = 0; i < C.size(); ++i) {
        out += to_bitstring(C.rows()[i], C.dims());
        out += " -> ";
        out += format_dims_braced(C.domain(), r.reps()[i]);
        out += '\n';
    }
    return out;
}

RepresentationMap parse_representation_map(const ConceptClass& C, std::string_view text) {
    std::vector<std::optional<DimSet>> reps(C.size());
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto arrow = line.find("->");
        if (arrow == std::string::npos) fail(ErrorCode::ParseError, "representation line lacks '->': " + line);
        std::string bits = line.substr(0, arrow);
        bits.erase(std::remove_if(bits.begin(), bits.end(), [](char ch) { return ch == ' ' || ch == '\t'; }), bits.end());
        Mask c = parse_bitstring(bits, C.dims());
        auto idx = C.index_of(c);
        if (!idx) fail(ErrorCode::InputError, "representation map names a concept outside the class: " + bits);
        if (reps[*idx]) fail(ErrorCode::ParseError, "concept listed twice in representation map: " + bits);
        reps[*idx] = parse_dims(C.domain(), line.substr(arrow + 2));
    }
    std::vector<DimSet> out;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (!reps[i]) fail(ErrorCode::InputError, "representation map misses concept " + to_bitstring(C.rows()[i], C.dims()));
        out.push_back(*reps[i]);
    }
    return RepresentationMap(C, std::move(out));
}

RepresentationMap disagreement_map(const ConceptClass& C, Mask reference) {
    std::vector<DimSet> reps;
    for (Mask c : C.rows()) reps.emplace_back(c ^ reference);
    return RepresentationMap(C, std::move(reps));
}

RepresentationMap degree_map(const ConceptClass& C) {
    std::vector<DimSet> reps;
    for (Mask c : C.rows()) reps.push_back(degree_set(C, c));
    return RepresentationMap(C, std::move(reps));
}

std::optional<Clash> find_clash(const RepresentationMap& r) {
    auto rows = r.concept_class().rows();
    const auto& reps = r.reps();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            Mask both = reps[i].bits | reps[j].bits;
            if (((rows[i] ^ rows[j]) & both) == 0) return Clash{rows[i], rows[j]};
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------

namespace {

// Number of maximal cubes at each concept, aligned with C.rows().
std::vector<int> maximal_cube_counts(const ConceptClass& C, const std::vector<Cube>& maximal) {
    std::vector<int> counts(C.size(), 0);
    for (std::size_t i = 0; i < C.size(); ++i) {
        for (const auto& B : maximal) {
            if (B.contains(C.rows()[i])) ++counts[i];
        }
    }
    return counts;
}

const Cube& unique_cube_at(const std::vector<Cube>& maximal, Mask c) {
    for (const auto& B : maximal) {
        if (B.contains(c)) return B;
    }
    throw std::logic_error("concept lies in no maximal cube");
}

}  // namespace

bool is_corner(const ConceptClass& C, Mask c) {
    if (!C.contains(c)) fail(ErrorCode::InputError, "is_corner: concept is not a member of the class");
    if (!is_extremal(C)) fail(ErrorCode::NotExtremal, "is_corner needs an extremal class");
    auto maximal = maximal_cubes_at(C, c);
    bool by_cubes = maximal.size() == 1;
    bool by_removal = is_extremal(C.without(c));
    if (by_cubes != by_removal) {
        throw std::logic_error("corner tests disagree on " + to_bitstring(c, C.dims()));
    }
    return by_cubes;
}

std::string format_certificate(const PeelingCertificate& cert) {
    std::string out;
    for (const auto& step : cert.steps) {
        out += to_bitstring(step.concept_bits, cert.domain.size());
        out += ' ';
        out += format_dims_braced(cert.domain, step.rep);
        out += ' ';
        out += to_string(step.cube);
        out += '\n';
    }
    return out;
}

NoCornerFound::NoCornerFound(ConceptClass remaining)
    : std::runtime_error("extremal class without a corner:\n" + format_class(remaining)), remaining_(std::move(remaining)) {}

namespace {

// Removes `c` from `current` after checking that it is a corner; records the step.
void peel_step(ConceptClass& current, const std::vector<Cube>& maximal, Mask c, PeelingCertificate& cert) {
    const Cube& B = unique_cube_at(maximal, c);
    DimSet deg = degree_set(current, c);
    if (deg != B.dims) throw std::logic_error("corner degree differs from its maximal cube's dimensions");
    cert.steps.push_back(PeelStep{c, B.dims, B});
    current = current.without(c);
}

PeelResult finish(const ConceptClass& C, PeelingCertificate cert) {
    std::vector<DimSet> reps(C.size());
    for (const auto& step : cert.steps) reps[*C.index_of(step.concept_bits)] = step.rep;
    return PeelResult{std::move(cert), RepresentationMap(C, std::move(reps))};
}

}  // namespace

PeelResult corner_peel(const ConceptClass& C) {
    if (C.empty()) fail(ErrorCode::InputError, "corner_peel needs a nonempty class");
    if (!is_extremal(C)) fail(ErrorCode::NotExtremal, "corner_peel needs an extremal class");
    PeelingCertificate cert{C.domain(), {}};
    ConceptClass current = C;
    while (!current.empty()) {
        auto maximal = maximal_cubes(current);
        auto counts = maximal_cube_counts(current, maximal);
        auto it = std::find(counts.begin(), counts.end(), 1);
        if (it == counts.end()) throw NoCornerFound(current);
        Mask c = current.rows()[static_cast<std::size_t>(it - counts.begin())];
        peel_step(current, maximal, c, cert);
        if (!is_extremal(current)) throw std::logic_error("removing a corner broke extremality");
    }
    return finish(C, std::move(cert));
}

PeelResult peel_in_order(const ConceptClass& C, const std::vector<Mask>& order) {
    if (!is_extremal(C)) fail(ErrorCode::NotExtremal, "peel_in_order needs an extremal class");
    std::vector<Mask> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (!std::equal(sorted.begin(), sorted.end(), C.rows().begin(), C.rows().end())) {
        fail(ErrorCode::InputError, "peeling order must list every concept of the class exactly once");
    }
    PeelingCertificate cert{C.domain(), {}};
    ConceptClass current = C;
    for (Mask c : order) {
        auto maximal = maximal_cubes(current);
        int count = 0;
        for (const auto& B : maximal) count += B.contains(c) ? 1 : 0;
        if (count != 1) fail(ErrorCode::InputError, to_bitstring(c, C.dims()) + " is not a corner when its turn comes");
        peel_step(current, maximal, c, cert);
    }
    return finish(C, std::move(cert));
}

// ---------------------------------------------------------------------------

Concept unlabeled_representative(const RepresentationMap& r, const Sample& s) {
    const auto& C = r.concept_class();
    if (!(s.domain == C.domain())) fail(ErrorCode::InputError, "sample and class have different domains");
    bool any_consistent = false;
    std::optional<Mask> found;
    for (std::size_t i = 0; i < C.size(); ++i) {
        Mask c = C.rows()[i];
        if (!s.consistent_with(c)) continue;
        any_consistent = true;
        if (!r.reps()[i].subset_of(s.dims)) continue;
        if (found) fail(ErrorCode::UniquenessViolation, "two consistent concepts have representations inside the sample domain");
        found = c;
    }
    if (!any_consistent) fail(ErrorCode::NotASample, "no concept of the class is consistent with the sample");
    if (!found) fail(ErrorCode::UniquenessViolation, "no consistent concept has its representation inside the sample domain");
    return Concept{C.domain(), *found};
}

DimSet compress_unlabeled(const RepresentationMap& r, const Sample& s) {
    return r.rep(unlabeled_representative(r, s).bits);
}

Concept reconstruct_unlabeled(const RepresentationMap& r, DimSet S) {
    auto c = r.preimage(S);
    if (!c) fail(ErrorCode::InputError, "set is not a representation set of the map");
    return Concept{r.concept_class().domain(), *c};
}

std::size_t count_small_consistent(const RepresentationMap& r, const Sample& s) {
    const auto& C = r.concept_class();
    std::size_t n = 0;
    for (std::size_t i = 0; i < C.size(); ++i) {
        if (s.consistent_with(C.rows()[i]) && r.reps()[i].subset_of(s.dims)) ++n;
    }
    return n;
}

std::optional<Sample> find_non_unique_sample(const RepresentationMap& r) {
    const auto& C = r.concept_class();
    require_within_cap(C.dims(), "find_non_unique_sample");
    std::optional<Sample> bad;
    for_each_subset(C.domain().all().bits, [&](Mask U) {
        if (bad) return;
        for (Mask labels : detail::project(C.rows(), U)) {
            Sample s{C.domain(), DimSet{U}, labels};
            if (count_small_consistent(r, s) != 1) {
                bad = s;
                return;
            }
        }
    });
    return bad;
}

UnlabeledReport verify_unlabeled(const RepresentationMap& r) {
    const auto& C = r.concept_class();
    require_within_cap(C.dims(), "verify_unlabeled");
    UnlabeledReport rep;
    rep.vc_dimension = vc_dimension(C);
    for_each_subset(C.domain().all().bits, [&](Mask U) {
        for (Mask labels : detail::project(C.rows(), U)) {
            Sample s{C.domain(), DimSet{U}, labels};
            ++rep.samples;
            try {
                DimSet compressed = compress_unlabeled(r, s);
                rep.max_compressed_size = std::max(rep.max_compressed_size, compressed.size());
                Concept h = reconstruct_unlabeled(r, compressed);
                if (!compressed.subset_of(s.dims) || !s.consistent_with(h.bits) || compressed.size() > rep.vc_dimension) {
                    rep.failures.push_back(s);
                }
            } catch (const Error&) {
                rep.failures.push_back(s);
            }
        }
    });
    return rep;
}

RepresentationMap restrict_representation(const RepresentationMap& r, DimSet A) {
    const auto& C = r.concept_class();
    if (!A.subset_of(C.domain().all())) fail(ErrorCode::InputError, "restrict_representation: A is not inside the domain");
    if (!is_extremal(C)) fail(ErrorCode::NotExtremal, "restrict_representation needs an extremal class");
    if (!r.is_full()) fail(ErrorCode::InputError, "restrict_representation needs a bijection onto st(C)");
    if (auto clash = find_clash(r)) fail(ErrorCode::InputError, "restrict_representation needs a non-clashing map");
    ConceptClass restricted = restrict(C, A);
    std::vector<std::optional<DimSet>> reps(restricted.size());
    for (std::size_t i = 0; i < C.size(); ++i) {
        if (!r.reps()[i].subset_of(A)) continue;
        auto idx = *restricted.index_of(gather_bits(C.rows()[i], A.bits));
        if (reps[idx]) fail(ErrorCode::UniquenessViolation, "two concepts restrict to the same sample with small representations");
        reps[idx] = DimSet{gather_bits(r.reps()[i].bits, A.bits)};
    }
    std::vector<DimSet> out;
    for (const auto& rep : reps) {
        if (!rep) fail(ErrorCode::UniquenessViolation, "a restricted concept has no representative");
        out.push_back(*rep);
    }
    return RepresentationMap(std::move(restricted), std::move(out));
}

// ---------------------------------------------------------------------------

std::size_t CornerlessHunt::total_checked() const {
    std::size_t n = 0;
    for (const auto& l : levels) n += l.classes_checked;
    return n;
}

namespace {

struct ShardResult {
    std::size_t checked = 0;
    std::optional<ConceptClass> counterexample;
};

ShardResult peel_all(const std::vector<ConceptClass>& classes, std::size_t begin, std::size_t end) {
    ShardResult out;
    for (std::size_t i = begin; i < end; ++i) {
        if (classes[i].empty()) continue;
        try {
            corner_peel(classes[i]);
        } catch (const NoCornerFound& e) {
            out.counterexample = e.remaining();
            return out;
        }
        ++out.checked;
    }
    return out;
}

ShardResult peel_sharded(const std::vector<ConceptClass>& classes, int jobs) {
    std::size_t shards = static_cast<std::size_t>(std::max(1, jobs));
    if (shards == 1 || classes.size() < 2 * shards) return peel_all(classes, 0, classes.size());
    std::vector<std::future<ShardResult>> futures;
    std::size_t chunk = (classes.size() + shards - 1) / shards;
    for (std::size_t b = 0; b < classes.size(); b += chunk) {
        std::size_t e = std::min(classes.size(), b + chunk);
        futures.push_back(std::async(std::launch::async, [&classes, b, e] { return peel_all(classes, b, e); }));
    }
    ShardResult merged;
    for (auto& f : futures) {
        auto r = f.get();
        merged.checked += r.checked;
        // Shards are merged in order, so the reported counterexample is deterministic.
        if (r.counterexample && !merged.counterexample) merged.counterexample = std::move(r.counterexample);
    }
    return merged;
}

}  // namespace

CornerlessHunt hunt_cornerless(const HuntOptions& options) {
    if (options.n_max < 0) fail(ErrorCode::InputError, "hunt_cornerless: n_max must be nonnegative");
    require_within_cap(options.n_max, "hunt_cornerless");
    if (options.exhaustive_max > 4) fail(ErrorCode::InputError, "exhaustive enumeration is limited to n <= 4");
    CornerlessHunt hunt;
    for (int n = 0; n <= options.n_max; ++n) {
        HuntLevel level{n, n <= options.exhaustive_max, 0};
        std::vector<ConceptClass> classes;
        if (level.exhaustive) {
            classes = enumerate_extremal(n, options.up_to_symmetry);
        } else {
            for (std::size_t i = 0; i < options.random_samples; ++i) {
                classes.push_back(random_extremal_class(n, options.seed + i));
            }
        }
        auto result = peel_sharded(classes, options.jobs);
        level.classes_checked = result.checked;
        hunt.levels.push_back(level);
        if (result.counterexample) {
            hunt.counterexample = std::move(result.counterexample);
            break;
        }
    }
    return hunt;
}

IntermediateHunt hunt_intermediate(const ConceptClass& C1, const ConceptClass& C2, std::size_t budget) {
    if (!(C1.domain() == C2.domain())) fail(ErrorCode::InputError, "hunt_intermediate: classes have different domains");
    if (!std::includes(C2.rows().begin(), C2.rows().end(), C1.rows().begin(), C1.rows().end())) {
        fail(ErrorCode::InputError, "hunt_intermediate: C1 must be a subset of C2");
    }
    if (!is_extremal(C1) || !is_extremal(C2)) fail(ErrorCode::NotExtremal, "hunt_intermediate needs extremal C1 and C2");
    std::vector<Mask> extra;
    std::set_difference(C2.rows().begin(), C2.rows().end(), C1.rows().begin(), C1.rows().end(), std::back_inserter(extra));
    if (extra.size() < 2) fail(ErrorCode::InputError, "hunt_intermediate: C2 \\ C1 must have at least two concepts");
    if (extra.size() > 63) fail(ErrorCode::InputError, "hunt_intermediate: C2 \\ C1 is too large to sweep");

    IntermediateHunt hunt;
    const int m = static_cast<int>(extra.size());
    for (int k = 1; k < m; ++k) {
        // Gosper's hack over k-subsets of `extra`.
        Mask pick = low_bits(k);
        const Mask limit = Mask{1} << m;
        while (pick < limit) {
            if (hunt.candidates_tried >= budget) return hunt;
            ++hunt.candidates_tried;
            std::vector<Mask> rows(C1.rows().begin(), C1.rows().end());
            for (Mask p = pick; p != 0; p &= p - 1) rows.push_back(extra[static_cast<std::size_t>(std::countr_zero(p))]);
            ConceptClass candidate(C1.domain(), std::move(rows));
            if (is_extremal(candidate)) {
                hunt.found = std::move(candidate);
                return hunt;
            }
            Mask low = pick & -pick;
            Mask ripple = pick + low;
            pick = (((ripple ^ pick) >> 2) / low) | ripple;
        }
    }
    hunt.exhausted = true;
    return hunt;
}

}  // namespace extremal
