#include "extremal/shattering.hpp"

#include <algorithm>

#include "extremal/detail/kernels.hpp"
#include "extremal/text_format.hpp"

namespace extremal {

SetFamily::SetFamily(Domain d, std::vector<DimSet> s) : domain(std::move(d)), sets(std::move(s)) {
    sort_canonical(sets);
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

bool SetFamily::contains(DimSet S) const {
    return std::binary_search(sets.begin(), sets.end(), S, [](DimSet a, DimSet b) { return canonical_less(a, b); });
}

bool SetFamily::is_downward_closed() const {
    for (DimSet S : sets) {
        for (Mask rest = S.bits; rest != 0; rest &= rest - 1) {
            if (!contains(DimSet{S.bits & ~(rest & -rest)})) return false;
        }
    }
    return true;
}

std::vector<DimSet> SetFamily::maximal_sets() const {
    std::vector<DimSet> out;
    for (DimSet S : sets) {
        bool maximal = std::none_of(sets.begin(), sets.end(), [&](DimSet T) { return T != S && S.subset_of(T); });
        if (maximal) out.push_back(S);
    }
    return out;
}

bool SetFamily::subset_of(const SetFamily& other) const {
    return std::all_of(sets.begin(), sets.end(), [&](DimSet S) { return other.contains(S); });
}

bool operator==(const SetFamily& a, const SetFamily& b) { return a.domain == b.domain && a.sets == b.sets; }

std::string format_family(const SetFamily& F) {
    std::string out;
    for (DimSet S : F.sets) {
        out += S.empty() ? "{}" : format_dims(F.domain, S);
        out += '\n';
    }
    return out;
}

namespace {
SetFamily from_levels(const Domain& d, const std::vector<std::vector<Mask>>& levels) {
    std::vector<DimSet> sets;
    for (const auto& level : levels) {
        for (Mask S : level) sets.emplace_back(S);
    }
    return SetFamily(d, std::move(sets));
}
}  // namespace

SetFamily shattered_sets(const ConceptClass& C) {
    require_within_cap(C.dims(), "shattered_sets");
    return from_levels(C.domain(), detail::shattered_levels(C.rows(), C.domain().all().bits));
}

SetFamily strongly_shattered_sets(const ConceptClass& C) {
    require_within_cap(C.dims(), "strongly_shattered_sets");
    detail::ReductionTable table(C.rows(), C.domain().all().bits);
    return from_levels(C.domain(), table.levels());
}

int vc_dimension(const ConceptClass& C) {
    require_within_cap(C.dims(), "vc_dimension");
    auto levels = detail::shattered_levels(C.rows(), C.domain().all().bits);
    return static_cast<int>(levels.size()) - 1;
}

std::size_t sauer_shelah_bound(int n, int d) {
    std::size_t total = 0;
    std::size_t binom = 1;  // binomial(n, i)
    for (int i = 0; i <= d && i <= n; ++i) {
        total += binom;
        binom = binom * static_cast<std::size_t>(n - i) / static_cast<std::size_t>(i + 1);
    }
    return total;
}

SandwichCheck sandwich_check(const ConceptClass& C) {
    return SandwichCheck{strongly_shattered_sets(C).size(), C.size(), shattered_sets(C).size()};
}

bool is_extremal(const ConceptClass& C) { return shattered_sets(C) == strongly_shattered_sets(C); }

bool ExtremalityReport::conditions_agree() const {
    return std::all_of(conditions.begin(), conditions.end(), [&](bool f) { return f == conditions[0]; });
}

ExtremalityReport extremality_report(const ConceptClass& C) {
    SetFamily s = shattered_sets(C);
    SetFamily st = strongly_shattered_sets(C);
    ExtremalityReport rep;
    rep.s_size = s.size();
    rep.st_size = st.size();
    rep.class_size = C.size();
    rep.conditions[0] = s == st;
    rep.conditions[1] = s.size() == st.size();
    rep.conditions[2] = st.size() == C.size();
    rep.conditions[3] = C.size() == s.size();
    rep.conditions[4] = is_extremal(complement(C));
    rep.is_extremal = rep.conditions[0];
    for (DimSet S : s.sets) {
        if (!st.contains(S)) {
            rep.witness = S;
            break;
        }
    }
    return rep;
}

ConceptClass down_shift(const ConceptClass& C, int x) {
    if (x < 0 || x >= C.dims()) fail(ErrorCode::InputError, "down_shift: column index out of range");
    Mask b = C.domain().bit(x);
    std::vector<Mask> rows;
    rows.reserve(C.size());
    for (Mask r : C.rows()) {
        rows.push_back((r & b) && !C.contains(r & ~b) ? r & ~b : r);
    }
    return ConceptClass(C.domain(), std::move(rows));
}

DownShiftClosure down_shift_closure(const ConceptClass& C) {
    DownShiftClosure out{C, 0, false};
    while (true) {
        ConceptClass before = out.result;
        for (int x = 0; x < C.dims(); ++x) out.result = down_shift(out.result, x);
        ++out.passes;
        if (out.passes == 1) out.first_pass_sufficed = is_downward_closed(out.result);
        if (out.result == before) break;
    }
    return out;
}

}  // namespace extremal
