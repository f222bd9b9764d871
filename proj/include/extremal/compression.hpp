#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "extremal/core.hpp"
#include "extremal/detail/kernels.hpp"

namespace extremal {

/// Which maximal cube `compress` keeps when several contain the sample.
enum class CubeChoiceRule {
    LeastDimSet,  ///< canonically least dimension set
};

/// Which concept `reconstruct` returns among the cubes with the right dimension set.
enum class ReconstructionRule {
    LeastTag,  ///< cube with the lexicographically least tag
};

/// Labeled sample compression scheme for an extremal class.
///
/// A sample s is compressed to s|dim(B) for a maximal cube B of C|dom(s) that
/// contains s. A compressed sample s' is expanded to the concept of a cube of C
/// with dimension set dom(s') that agrees with s' on dom(s'). Compressed samples
/// never exceed VCdim(C) labels, and the expansion always agrees with the
/// original sample.
class LabeledScheme {
public:
    /// Throws NotExtremal when C is not extremal.
    explicit LabeledScheme(ConceptClass C, CubeChoiceRule choice = CubeChoiceRule::LeastDimSet,
                           ReconstructionRule rule = ReconstructionRule::LeastTag);

    const ConceptClass& concept_class() const { return class_; }
    int vc_dimension() const { return vc_dim_; }
    CubeChoiceRule cube_choice() const { return choice_; }
    ReconstructionRule reconstruction_rule() const { return rule_; }

    /// Throws NotASample when no concept agrees with s.
    Sample compress(const Sample& s) const;
    /// One compressed sample per maximal cube of C|dom(s) containing s, in cube order.
    std::vector<Sample> compress_all_choices(const Sample& s) const;
    /// Throws InputError when |dom(s')| > VCdim(C) and NoCube when dom(s') is not
    /// strongly shattered.
    Concept reconstruct(const Sample& compressed) const;

private:
    ConceptClass class_;
    CubeChoiceRule choice_;
    ReconstructionRule rule_;
    int vc_dim_ = -1;
    detail::ReductionTable table_;
};

/// H_s = {h in C : h|dom(s) = s}.
ConceptClass consistent_set(const ConceptClass& C, const Sample& s);

/// H_B = {h in C : h lies in a cube B' of C with dim(B') = dim(B) and h|dim(B) = s|dim(B)}.
/// B must be a maximal cube of C|dom(s) containing s, given over the sub-domain
/// dom(s) as returned by maximal_cubes_containing.
ConceptClass candidate_set(const ConceptClass& C, const Sample& s, const Cube& B);

struct SchemeFailure {
    Sample sample;
    Sample compressed;
    std::string reason;
};

struct SchemeReport {
    std::size_t subdomains = 0;
    std::size_t samples = 0;
    std::size_t round_trips = 0;  ///< one per (sample, admissible maximal cube)
    int max_compressed_size = 0;
    int vc_dimension = -1;
    std::vector<SchemeFailure> failures;

    bool passed() const { return failures.empty(); }
};

/// Runs every sample of the class through every admissible cube choice.
SchemeReport verify_scheme(const LabeledScheme& scheme);

}  // namespace extremal
