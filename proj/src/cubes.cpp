#include "extremal/cubes.hpp"

#include <algorithm>

#include "extremal/detail/kernels.hpp"

namespace extremal {

namespace {

std::vector<Cube> to_cubes(const Domain& d, const std::vector<std::pair<Mask, Mask>>& raw) {
    std::vector<Cube> out;
    out.reserve(raw.size());
    for (auto [S, t] : raw) out.push_back(Cube{d, DimSet{S}, t});
    std::sort(out.begin(), out.end(), [](const Cube& a, const Cube& b) { return canonical_less(a, b); });
    return out;
}

}  // namespace

std::vector<Cube> cubes_with_dims(const ConceptClass& C, DimSet S) {
    if (!S.subset_of(C.domain().all())) fail(ErrorCode::InputError, "cubes_with_dims: dimension set outside the domain");
    std::vector<Cube> out;
    for (Mask r : C.rows()) {
        if (r & S.bits) continue;
        bool cube = true;
        for_each_subset(S.bits, [&](Mask sub) {
            if (cube && !C.contains(r | sub)) cube = false;
        });
        if (cube) out.push_back(Cube{C.domain(), S, r});
    }
    return out;
}

std::vector<Cube> all_cubes(const ConceptClass& C) {
    require_within_cap(C.dims(), "all_cubes");
    detail::ReductionTable table(C.rows(), C.domain().all().bits);
    std::vector<std::pair<Mask, Mask>> raw;
    for (const auto& level : table.levels()) {
        for (Mask S : level) {
            for (Mask t : table.tags(S)) raw.emplace_back(S, t);
        }
    }
    return to_cubes(C.domain(), raw);
}

std::vector<Cube> maximal_cubes(const ConceptClass& C) {
    require_within_cap(C.dims(), "maximal_cubes");
    detail::ReductionTable table(C.rows(), C.domain().all().bits);
    return to_cubes(C.domain(), table.maximal_cubes());
}

std::vector<Cube> maximal_cubes_at(const ConceptClass& C, Mask c) {
    std::vector<Cube> out;
    for (auto& B : maximal_cubes(C)) {
        if (B.contains(c)) out.push_back(std::move(B));
    }
    return out;
}

std::vector<Cube> maximal_cubes_containing(const ConceptClass& C, const Sample& s) {
    if (!(s.domain == C.domain())) fail(ErrorCode::InputError, "sample and class have different domains");
    Mask U = s.dims.bits;
    auto rows = detail::project(C.rows(), U);
    if (!detail::contains_sorted(rows, s.labels)) {
        fail(ErrorCode::NotASample, "no concept of the class is consistent with the sample");
    }
    detail::ReductionTable table(rows, U);
    Domain sub = C.domain().sub(s.dims);
    std::vector<std::pair<Mask, Mask>> raw;
    for (auto [S, t] : table.maximal_cubes()) {
        if ((s.labels & ~S) == t) raw.emplace_back(gather_bits(S, U), gather_bits(t, U));
    }
    return to_cubes(sub, raw);
}

bool maximal_cubes_form_antichain(const ConceptClass& C) {
    auto maximal = maximal_cubes(C);
    for (std::size_t i = 0; i < maximal.size(); ++i) {
        for (std::size_t j = 0; j < maximal.size(); ++j) {
            if (i != j && maximal[i].dims.subset_of(maximal[j].dims)) return false;
        }
    }
    // Any cube whose dimension set contains a maximal cube's set must be that cube.
    for (const auto& B : all_cubes(C)) {
        for (const auto& M : maximal) {
            if (M.dims.subset_of(B.dims) && !(B == M)) return false;
        }
    }
    return true;
}

CubeExpression parse_cube_expression(std::string_view text, std::optional<Domain> domain) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char ch : text) {
        if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') continue;
        if (ch == '+') {
            tokens.push_back(cur);
            cur.clear();
        } else if (ch == '0' || ch == '1' || ch == '*') {
            cur += ch;
        } else {
            fail(ErrorCode::ParseError, std::string("bad character '") + ch + "' in cube expression");
        }
    }
    tokens.push_back(cur);
    if (tokens.size() == 1 && tokens[0].empty() && !(domain && domain->empty())) {
        fail(ErrorCode::ParseError, "empty cube expression");
    }
    std::size_t n = tokens[0].size();
    for (const auto& t : tokens) {
        if (t.size() != n) fail(ErrorCode::ParseError, "cube expression tokens have different lengths");
        if (t.empty() && tokens.size() > 1) fail(ErrorCode::ParseError, "empty token in cube expression");
    }
    Domain d = domain ? *domain : Domain::numbered(static_cast<int>(n));
    if (static_cast<std::size_t>(d.size()) != n) {
        fail(ErrorCode::ParseError, "cube expression length does not match the domain size");
    }
    CubeExpression e{d, {}};
    for (const auto& t : tokens) {
        Cube B{d, DimSet{}, 0};
        for (std::size_t i = 0; i < n; ++i) {
            Mask b = d.bit(static_cast<int>(i));
            if (t[i] == '*') B.dims.bits |= b;
            if (t[i] == '1') B.tag |= b;
        }
        e.cubes.push_back(B);
    }
    return e;
}

std::string print_cube_expression(const CubeExpression& e) {
    std::string out;
    for (const auto& B : e.cubes) {
        if (!out.empty()) out += '+';
        out += to_string(B);
    }
    return out;
}

ConceptClass expression_to_class(const CubeExpression& e) {
    std::vector<Mask> rows;
    for (const auto& B : e.cubes) {
        auto v = B.vertices();
        rows.insert(rows.end(), v.begin(), v.end());
    }
    return ConceptClass(e.domain, std::move(rows));
}

CubeExpression as_expression(const Domain& domain, std::vector<Cube> cubes) { return CubeExpression{domain, std::move(cubes)}; }

}  // namespace extremal
