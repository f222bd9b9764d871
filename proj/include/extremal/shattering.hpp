#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "extremal/core.hpp"

namespace extremal {

/// Family of dimension subsets of one domain, deduplicated and canonically ordered.
struct SetFamily {
    Domain domain;
    std::vector<DimSet> sets;

    SetFamily() = default;
    SetFamily(Domain d, std::vector<DimSet> s);

    std::size_t size() const { return sets.size(); }
    bool contains(DimSet S) const;
    bool is_downward_closed() const;
    /// Members that are not strictly contained in another member.
    std::vector<DimSet> maximal_sets() const;
    bool subset_of(const SetFamily& other) const;
    friend bool operator==(const SetFamily& a, const SetFamily& b);
};

/// One set per line, members comma separated, in canonical order. The empty set
/// is written as `{}` so that it survives line-oriented tools.
std::string format_family(const SetFamily& F);

/// s(C): every S with C|S = {0,1}^S.
SetFamily shattered_sets(const ConceptClass& C);
/// st(C): every S that is the dimension set of a cube of C.
SetFamily strongly_shattered_sets(const ConceptClass& C);

/// Size of the largest shattered set; -1 for the empty class.
int vc_dimension(const ConceptClass& C);

/// Sum of binomial(n, i) for i <= d (the Sauer-Shelah bound).
std::size_t sauer_shelah_bound(int n, int d);

struct SandwichCheck {
    std::size_t st_size = 0;
    std::size_t class_size = 0;
    std::size_t s_size = 0;
    bool holds() const { return st_size <= class_size && class_size <= s_size; }
};

/// |st(C)| <= |C| <= |s(C)|. A failing verdict means an implementation bug.
SandwichCheck sandwich_check(const ConceptClass& C);

/// s(C) = st(C).
bool is_extremal(const ConceptClass& C);

/// Five equivalent characterizations of extremality, each evaluated on its own:
///   0: s(C) = st(C)      1: |s(C)| = |st(C)|      2: |st(C)| = |C|
///   3: |C| = |s(C)|      4: the complement of C is extremal
struct ExtremalityReport {
    bool is_extremal = false;
    std::size_t s_size = 0;
    std::size_t st_size = 0;
    std::size_t class_size = 0;
    std::array<bool, 5> conditions{};
    /// Canonically least member of s(C) \ st(C) when not extremal.
    std::optional<DimSet> witness;

    bool conditions_agree() const;
};

ExtremalityReport extremality_report(const ConceptClass& C);

/// One down-shifting step on column x.
ConceptClass down_shift(const ConceptClass& C, int x);

struct DownShiftClosure {
    ConceptClass result;
    int passes = 0;  ///< full sweeps over all columns until nothing moved (last sweep included)
    bool first_pass_sufficed = false;
};

/// Down-shifts every column in domain order, repeating sweeps to a fixpoint.
DownShiftClosure down_shift_closure(const ConceptClass& C);

}  // namespace extremal
