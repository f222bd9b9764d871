#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "extremal/core.hpp"

namespace extremal {

/// deg_C(c): dimensions of the one-inclusion edges at c.
DimSet degree_set(const ConceptClass& C, Mask c);

/// Does every other concept of C disagree with c somewhere on S?
bool is_teaching_set(const ConceptClass& C, Mask c, DimSet S);

/// Assignment of a dimension set to every concept of a class. `reps()[i]` belongs
/// to `concept_class().rows()[i]`.
///
/// A representation map proper is injective; `full` maps are additionally onto
/// st(C). Non-injective assignments (e.g. degree sets) are representable so that
/// the clash test can run on them.
class RepresentationMap {
public:
    RepresentationMap(ConceptClass C, std::vector<DimSet> reps);

    const ConceptClass& concept_class() const { return class_; }
    const std::vector<DimSet>& reps() const { return reps_; }
    DimSet rep(Mask c) const;
    std::optional<Mask> preimage(DimSet S) const;

    bool is_injective() const;
    /// Injective with image exactly st(C).
    bool is_full() const;

private:
    ConceptClass class_;
    std::vector<DimSet> reps_;
};

/// Lines "bitstring -> {dims}" in class order.
std::string format_representation_map(const RepresentationMap& r);
RepresentationMap parse_representation_map(const ConceptClass& C, std::string_view text);

/// r(c) = dis(c, reference).
RepresentationMap disagreement_map(const ConceptClass& C, Mask reference);
/// r(c) = deg_C(c).
RepresentationMap degree_map(const ConceptClass& C);

/// Two distinct concepts that agree on r(a) ∪ r(b).
struct Clash {
    Mask a = 0;
    Mask b = 0;
};

std::optional<Clash> find_clash(const RepresentationMap& r);
inline bool is_non_clashing(const RepresentationMap& r) { return !find_clash(r).has_value(); }

/// c lies in exactly one maximal cube of the extremal class C. Also checks that
/// this agrees with C \ {c} being extremal; throws std::logic_error if not.
/// Throws NotExtremal for non-extremal C and InputError if c is not in C.
bool is_corner(const ConceptClass& C, Mask c);

struct PeelStep {
    Mask concept_bits = 0;
    DimSet rep;
    Cube cube;  ///< the unique maximal cube of the remaining class containing the concept
};

struct PeelingCertificate {
    Domain domain;
    std::vector<PeelStep> steps;
};

/// Lines "concept {rep} cube" in peeling order.
std::string format_certificate(const PeelingCertificate& cert);

struct PeelResult {
    PeelingCertificate certificate;
    RepresentationMap map;
};

/// Raised when an intermediate extremal class has no corner. That would refute
/// the corner-peeling conjecture, so the class is kept for inspection.
class NoCornerFound : public std::runtime_error {
public:
    explicit NoCornerFound(ConceptClass remaining);
    const ConceptClass& remaining() const { return remaining_; }

private:
    ConceptClass remaining_;
};

/// Greedy corner peeling; at each step removes the corner with the least bit string.
PeelResult corner_peel(const ConceptClass& C);
/// Peels in the given order; throws InputError if some concept is not a corner when
/// its turn comes or the order is not a permutation of C.
PeelResult peel_in_order(const ConceptClass& C, const std::vector<Mask>& order);

/// The unique concept consistent with s whose representation fits inside dom(s).
/// Throws NotASample or UniquenessViolation.
Concept unlabeled_representative(const RepresentationMap& r, const Sample& s);
/// Unlabeled compression: r of the unique representative.
DimSet compress_unlabeled(const RepresentationMap& r, const Sample& s);
/// Unlabeled reconstruction; throws InputError if S is not in the image of r.
Concept reconstruct_unlabeled(const RepresentationMap& r, DimSet S);

/// Number of concepts consistent with s with r(c) ⊆ dom(s).
std::size_t count_small_consistent(const RepresentationMap& r, const Sample& s);
/// First sample (in subdomain, then bit-string order) without exactly one consistent
/// concept whose representation fits inside the sample's domain.
std::optional<Sample> find_non_unique_sample(const RepresentationMap& r);

struct UnlabeledReport {
    std::size_t samples = 0;
    int max_compressed_size = 0;
    int vc_dimension = -1;
    std::vector<Sample> failures;
    bool passed() const { return failures.empty(); }
};

/// Exhaustive round trip over every sample of the class.
UnlabeledReport verify_unlabeled(const RepresentationMap& r);

/// r_A(c) = r(c') for the unique c' in C with c'|A = c and r(c') ⊆ A, as a map for C|A.
/// Needs a full non-clashing map of an extremal class.
RepresentationMap restrict_representation(const RepresentationMap& r, DimSet A);

// ---------------------------------------------------------------------------
// Conjecture hunters
// ---------------------------------------------------------------------------

struct HuntOptions {
    int n_max = 4;
    int exhaustive_max = 4;        ///< exhaustive enumeration up to this n
    bool up_to_symmetry = true;    ///< one class per flip/permutation orbit
    std::size_t random_samples = 200;  ///< per n above exhaustive_max
    std::uint64_t seed = 1;
    int jobs = 1;
};

struct HuntLevel {
    int n = 0;
    bool exhaustive = false;
    std::size_t classes_checked = 0;  ///< nonempty extremal classes peeled
};

struct CornerlessHunt {
    std::vector<HuntLevel> levels;
    std::optional<ConceptClass> counterexample;  ///< a cornerless extremal class
    std::size_t total_checked() const;
};

/// Peels every extremal class over n <= exhaustive_max dimensions and random
/// extremal classes above that, looking for one without a corner.
CornerlessHunt hunt_cornerless(const HuntOptions& options);

struct IntermediateHunt {
    std::optional<ConceptClass> found;
    std::size_t candidates_tried = 0;
    bool exhausted = false;  ///< every candidate within the budget was tried
};

/// Looks for an extremal C with C1 ⊂ C ⊂ C2, trying additions to C1 in order of
/// size. Needs C1 ⊆ C2, both extremal, |C2 \ C1| >= 2.
IntermediateHunt hunt_intermediate(const ConceptClass& C1, const ConceptClass& C2, std::size_t budget = 1u << 20);

}  // namespace extremal
