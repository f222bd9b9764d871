#include "extremal/detail/kernels.hpp"

#include <algorithm>
#include <unordered_set>

namespace extremal::detail {

bool contains_sorted(std::span<const Mask> rows, Mask m) { return std::binary_search(rows.begin(), rows.end(), m); }

std::vector<Mask> project(std::span<const Mask> rows, Mask universe) {
    std::vector<Mask> out;
    out.reserve(rows.size());
    for (Mask r : rows) out.push_back(r & universe);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

// Next-level candidates T = S ∪ {x} with x below the lowest bit of S, so each T is
// produced from exactly one parent (T minus its lowest member).
template <class F>
void for_each_child(Mask S, Mask universe, F&& f) {
    Mask below = S == 0 ? universe : universe & ((S & -S) - 1);
    for (Mask rest = below; rest != 0; rest &= rest - 1) f(S | (rest & -rest));
}

bool all_facets_present(Mask T, const std::unordered_set<Mask>& previous) {
    for (Mask rest = T; rest != 0; rest &= rest - 1) {
        if (!previous.count(T & ~(rest & -rest))) return false;
    }
    return true;
}

}  // namespace

std::vector<std::vector<Mask>> shattered_levels(std::span<const Mask> rows, Mask universe) {
    std::vector<std::vector<Mask>> levels;
    if (rows.empty()) return levels;
    levels.push_back({0});
    std::vector<char> seen;
    while (true) {
        const auto& prev = levels.back();
        int k = static_cast<int>(levels.size());
        if ((std::size_t{1} << k) > rows.size()) break;
        std::unordered_set<Mask> prev_set(prev.begin(), prev.end());
        std::vector<Mask> next;
        seen.assign(std::size_t{1} << k, 0);
        for (Mask S : prev) {
            for_each_child(S, universe, [&](Mask T) {
                if (!all_facets_present(T, prev_set)) return;
                std::fill(seen.begin(), seen.end(), 0);
                std::size_t distinct = 0;
                for (Mask r : rows) {
                    auto idx = static_cast<std::size_t>(gather_bits(r, T));
                    if (!seen[idx]) {
                        seen[idx] = 1;
                        if (++distinct == seen.size()) break;
                    }
                }
                if (distinct == seen.size()) next.push_back(T);
            });
        }
        if (next.empty()) break;
        std::sort(next.begin(), next.end());
        levels.push_back(std::move(next));
    }
    return levels;
}

ReductionTable::ReductionTable(std::span<const Mask> rows, Mask universe) : universe_(universe) {
    if (rows.empty()) return;
    table_.emplace(Mask{0}, std::vector<Mask>(rows.begin(), rows.end()));
    levels_.push_back({0});
    while (true) {
        std::vector<Mask> next;
        for (Mask S : levels_.back()) {
            const auto& base = table_.at(S);
            for_each_child(S, universe_, [&](Mask T) {
                Mask x = T & ~S;
                std::vector<Mask> tags;
                for (Mask t : base) {
                    if (!(t & x) && contains_sorted(base, t | x)) tags.push_back(t);
                }
                if (!tags.empty()) {
                    table_.emplace(T, std::move(tags));
                    next.push_back(T);
                }
            });
        }
        if (next.empty()) break;
        std::sort(next.begin(), next.end());
        levels_.push_back(std::move(next));
    }
}

std::span<const Mask> ReductionTable::tags(Mask S) const {
    auto it = table_.find(S);
    if (it == table_.end()) return {};
    return it->second;
}

std::size_t ReductionTable::cube_count() const {
    std::size_t n = 0;
    for (const auto& [S, tags] : table_) n += tags.size();
    return n;
}

bool ReductionTable::is_maximal(Mask S, Mask tag) const {
    auto own = tags(S);
    for (Mask rest = universe_ & ~S; rest != 0; rest &= rest - 1) {
        if (contains_sorted(own, tag ^ (rest & -rest))) return false;
    }
    return true;
}

std::vector<std::pair<Mask, Mask>> ReductionTable::maximal_cubes() const {
    std::vector<std::pair<Mask, Mask>> out;
    for (const auto& level : levels_) {
        for (Mask S : level) {
            for (Mask t : tags(S)) {
                if (is_maximal(S, t)) out.emplace_back(S, t);
            }
        }
    }
    return out;
}

}  // namespace extremal::detail
