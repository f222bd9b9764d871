#include "extremal/generators.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <numeric>
#include <random>

#include "extremal/cubes.hpp"
#include "extremal/shattering.hpp"

namespace extremal {

ConceptClass downward_closure(const Domain& domain, std::span<const Mask> seeds) {
    std::vector<Mask> rows;
    for (Mask s : seeds) {
        if (s & ~domain.all().bits) fail(ErrorCode::InputError, "seed concept has bits outside the domain");
        for_each_subset(s, [&](Mask sub) { rows.push_back(sub); });
    }
    return ConceptClass(domain, std::move(rows));
}

ConceptClass hamming_ball(int n, int d) {
    if (n < 0 || d < 0 || d > n) fail(ErrorCode::InputError, "hamming_ball needs 0 <= d <= n");
    require_within_cap(n, "hamming_ball");
    std::vector<Mask> rows;
    for (Mask v = 0; v < (Mask{1} << n); ++v) {
        if (popcount(v) <= d) rows.push_back(v);
    }
    return ConceptClass(Domain::numbered(n), std::move(rows));
}

ConceptClass parity_class(int n) {
    if (n < 0) fail(ErrorCode::InputError, "parity_class needs n >= 0");
    require_within_cap(n, "parity_class");
    std::vector<Mask> rows;
    for (Mask v = 0; v < (Mask{1} << n); ++v) {
        if (popcount(v) % 2 == 0) rows.push_back(v);
    }
    return ConceptClass(Domain::numbered(n), std::move(rows));
}

// ---------------------------------------------------------------------------
// Line arrangements
// ---------------------------------------------------------------------------

namespace {

using Polygon = std::vector<Point>;

Rational side_value(const Line& l, const Point& p) { return l.a * p.x + l.b * p.y - l.c; }

std::optional<Point> intersection(const Line& l, const Line& m) {
    Rational det = l.a * m.b - m.a * l.b;
    if (det == 0) return std::nullopt;
    return Point{(l.c * m.b - m.c * l.b) / det, (l.a * m.c - m.a * l.c) / det};
}

Rational twice_area(const Polygon& poly) {
    Rational s = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point& p = poly[i];
        const Point& q = poly[(i + 1) % poly.size()];
        s += p.x * q.y - p.y * q.x;
    }
    return s;
}

// Part of the convex polygon strictly on one side of the line (closure of it).
Polygon clip(const Polygon& poly, const Line& l, bool positive) {
    Polygon out;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point& p = poly[i];
        const Point& q = poly[(i + 1) % poly.size()];
        Rational vp = side_value(l, p);
        Rational vq = side_value(l, q);
        bool keep_p = positive ? vp >= 0 : vp <= 0;
        if (keep_p) out.push_back(p);
        if ((vp > 0 && vq < 0) || (vp < 0 && vq > 0)) {
            Rational t = vp / (vp - vq);
            out.push_back(Point{p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
        }
    }
    return out;
}

bool proportional(const Line& l, const Line& m) {
    return l.a * m.b == m.a * l.b && l.a * m.c == m.a * l.c && l.b * m.c == m.b * l.c;
}

Polygon bounding_box(const std::vector<Line>& lines) {
    std::vector<Point> pts;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const Line& l = lines[i];
        Rational norm = l.a * l.a + l.b * l.b;
        pts.push_back(Point{l.a * l.c / norm, l.b * l.c / norm});
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            if (auto p = intersection(l, lines[j])) pts.push_back(*p);
        }
    }
    Rational lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
    for (const auto& p : pts) {
        lo_x = std::min(lo_x, p.x);
        hi_x = std::max(hi_x, p.x);
        lo_y = std::min(lo_y, p.y);
        hi_y = std::max(hi_y, p.y);
    }
    lo_x -= 1;
    lo_y -= 1;
    hi_x += 1;
    hi_y += 1;
    return {Point{lo_x, lo_y}, Point{hi_x, lo_y}, Point{hi_x, hi_y}, Point{lo_x, hi_y}};
}

Rational frac(long num, long den) { return Rational(num) / Rational(den); }

}  // namespace

void LineArrangement::validate() const {
    for (const auto& l : lines) {
        if (l.a == 0 && l.b == 0) fail(ErrorCode::InputError, "line with a = b = 0");
    }
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            if (proportional(lines[i], lines[j])) fail(ErrorCode::InputError, "two identical lines");
            auto p = intersection(lines[i], lines[j]);
            if (!p) continue;
            for (std::size_t k = j + 1; k < lines.size(); ++k) {
                if (side_value(lines[k], *p) == 0) fail(ErrorCode::InputError, "three lines meet in one point");
            }
        }
    }
    if (region) {
        const Polygon& poly = *region;
        if (poly.size() < 3) fail(ErrorCode::InputError, "region needs at least three vertices");
        Rational area = twice_area(poly);
        if (area == 0) fail(ErrorCode::InputError, "region has zero area");
        for (std::size_t i = 0; i < poly.size(); ++i) {
            const Point& p = poly[i];
            const Point& q = poly[(i + 1) % poly.size()];
            const Point& r = poly[(i + 2) % poly.size()];
            Rational turn = (q.x - p.x) * (r.y - q.y) - (q.y - p.y) * (r.x - q.x);
            if (turn == 0 || (turn > 0) != (area > 0)) fail(ErrorCode::InputError, "region is not strictly convex");
        }
    }
}

ConceptClass cells_in_region(const LineArrangement& arrangement) {
    arrangement.validate();
    const auto& lines = arrangement.lines;
    if (static_cast<int>(lines.size()) > kMaxDomainBits) fail(ErrorCode::InputError, "too many lines");
    Domain domain = Domain::numbered(static_cast<int>(lines.size()), "p");
    std::vector<std::pair<Mask, Polygon>> pieces{{0, arrangement.region ? *arrangement.region : bounding_box(lines)}};
    for (std::size_t i = 0; i < lines.size(); ++i) {
        Mask bit = domain.bit(static_cast<int>(i));
        std::vector<std::pair<Mask, Polygon>> next;
        for (const auto& [signs, poly] : pieces) {
            for (bool positive : {true, false}) {
                Polygon part = clip(poly, lines[i], positive);
                if (part.size() >= 3 && twice_area(part) != 0) next.emplace_back(positive ? signs | bit : signs, std::move(part));
            }
        }
        pieces = std::move(next);
    }
    std::vector<Mask> rows;
    for (const auto& piece : pieces) rows.push_back(piece.first);
    return ConceptClass(domain, std::move(rows));
}

LineArrangement fig3_arrangement() {
    LineArrangement arr;
    arr.lines = {
        Line{2, -1, -3},
        Line{-3, -3, 3},
        Line{-1, -3, 0},
        Line{-1, -3, 2},  // parallel to the third line
    };
    // A diamond standing in for the ellipse; it holds the crossings of lines
    // (1,2), (1,3) and (2,4) but not those of (1,4) and (2,3).
    arr.region = std::vector<Point>{
        Point{frac(-3, 10), frac(-1, 20)},
        Point{frac(-9, 10), frac(27, 20)},
        Point{frac(-3, 2), frac(-1, 20)},
        Point{frac(-9, 10), frac(-29, 20)},
    };
    return arr;
}

// ---------------------------------------------------------------------------
// s-t orientations
// ---------------------------------------------------------------------------

void RefGraph::validate() const {
    if (vertex_count <= 0) fail(ErrorCode::InputError, "graph has no vertices");
    if (s < 0 || s >= vertex_count || t < 0 || t >= vertex_count) fail(ErrorCode::InputError, "terminal out of range");
    if (s == t) fail(ErrorCode::InputError, "s and t must differ");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) fail(ErrorCode::InputError, "edge endpoint out of range");
        if (u == v) fail(ErrorCode::InputError, "graph must not have loops");
        for (std::size_t j = 0; j < i; ++j) {
            auto [a, b] = edges[j];
            if ((a == u && b == v) || (a == v && b == u)) fail(ErrorCode::InputError, "graph must not have parallel edges");
        }
    }
    if (static_cast<int>(edges.size()) > 20) fail(ErrorCode::InputError, "at most 20 edges are supported");
}

std::string RefGraph::vertex_name(int v) const {
    if (static_cast<std::size_t>(v) < vertex_names.size()) return vertex_names[static_cast<std::size_t>(v)];
    return "v" + std::to_string(v);
}

RefGraph parse_graph(std::string_view edges, std::string_view s, std::string_view t) {
    RefGraph g;
    auto vertex = [&](std::string_view name) {
        for (std::size_t i = 0; i < g.vertex_names.size(); ++i) {
            if (g.vertex_names[i] == name) return static_cast<int>(i);
        }
        g.vertex_names.emplace_back(name);
        return static_cast<int>(g.vertex_names.size() - 1);
    };
    g.s = vertex(s);
    g.t = vertex(t);
    std::size_t start = 0;
    while (start <= edges.size()) {
        auto comma = edges.find(',', start);
        std::string_view item = edges.substr(start, comma == std::string_view::npos ? edges.npos : comma - start);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        if (!item.empty()) {
            auto dash = item.find('-');
            if (dash == std::string_view::npos || dash == 0 || dash + 1 == item.size()) {
                fail(ErrorCode::ParseError, "edge '" + std::string(item) + "' must look like u-v");
            }
            int u = vertex(item.substr(0, dash));
            int v = vertex(item.substr(dash + 1));
            g.edges.emplace_back(u, v);
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    g.vertex_count = static_cast<int>(g.vertex_names.size());
    for (int terminal : {g.s, g.t}) {
        bool used = std::any_of(g.edges.begin(), g.edges.end(), [&](auto e) { return e.first == terminal || e.second == terminal; });
        if (!used) fail(ErrorCode::InputError, "terminal '" + g.vertex_names[static_cast<std::size_t>(terminal)] + "' is not on any edge");
    }
    g.validate();
    return g;
}

namespace {

// Is t reachable from s using the arcs (from, to)?
bool reachable(int vertex_count, const std::vector<std::pair<int, int>>& arcs, int s, int t) {
    std::vector<char> seen(static_cast<std::size_t>(vertex_count), 0);
    std::vector<int> stack{s};
    seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        if (u == t) return true;
        for (auto [a, b] : arcs) {
            if (a == u && !seen[static_cast<std::size_t>(b)]) {
                seen[static_cast<std::size_t>(b)] = 1;
                stack.push_back(b);
            }
        }
    }
    return false;
}

}  // namespace

ConceptClass st_orientation_class(const RefGraph& g) {
    g.validate();
    std::vector<std::string> names;
    for (auto [u, v] : g.edges) names.push_back(g.vertex_name(u) + "-" + g.vertex_name(v));
    Domain domain(std::move(names));
    const int m = static_cast<int>(g.edges.size());
    std::vector<Mask> rows;
    std::vector<std::pair<int, int>> arcs(g.edges.size());
    for (Mask d = 0; d < (Mask{1} << m); ++d) {
        for (int i = 0; i < m; ++i) {
            auto [u, v] = g.edges[static_cast<std::size_t>(i)];
            arcs[static_cast<std::size_t>(i)] = (d & domain.bit(i)) ? std::pair{v, u} : std::pair{u, v};
        }
        if (reachable(g.vertex_count, arcs, g.s, g.t)) rows.push_back(d);
    }
    return ConceptClass(std::move(domain), std::move(rows));
}

std::size_t count_st_connected_subgraphs(const RefGraph& g) {
    g.validate();
    const int m = static_cast<int>(g.edges.size());
    std::size_t count = 0;
    std::vector<std::pair<int, int>> arcs;
    for (Mask sub = 0; sub < (Mask{1} << m); ++sub) {
        arcs.clear();
        for (int i = 0; i < m; ++i) {
            if (sub & (Mask{1} << i)) {
                auto [u, v] = g.edges[static_cast<std::size_t>(i)];
                arcs.emplace_back(u, v);
                arcs.emplace_back(v, u);
            }
        }
        if (reachable(g.vertex_count, arcs, g.s, g.t)) ++count;
    }
    return count;
}

// ---------------------------------------------------------------------------
// Glued cubes
// ---------------------------------------------------------------------------

ConceptClass glued_cube(int k) {
    if (k < 1 || k > 5) fail(ErrorCode::InputError, "glued_cube needs 1 <= k <= 5");
    const int corners = 1 << k;
    std::vector<std::string> names;
    for (int i = 1; i <= k; ++i) names.push_back("y" + std::to_string(i));
    for (int j = 1; j <= corners; ++j) names.push_back("z" + std::to_string(j));
    Domain domain(std::move(names));
    std::vector<Mask> rows;
    for (int v = 0; v < corners; ++v) {
        // Vertex v of the k-cube: bit i of v (from the top) is y(i+1).
        Mask base = 0;
        for (int i = 0; i < k; ++i) {
            if (v & (1 << (k - 1 - i))) base |= domain.bit(i);
        }
        rows.push_back(base);
        rows.push_back(base | domain.bit(k + v));
    }
    return ConceptClass(std::move(domain), std::move(rows));
}

ConceptClass glued_cube_complement(int k) {
    if (k < 1 || k > 3) fail(ErrorCode::InputError, "glued_cube_complement needs 1 <= k <= 3");
    return complement(glued_cube(k));
}

DualityReport complement_duality_check(const ConceptClass& C) {
    SetFamily strong = strongly_shattered_sets(C);
    SetFamily other = shattered_sets(complement(C));
    DualityReport rep;
    DimSet all = C.domain().all();
    for_each_subset(all.bits, [&](Mask Y) {
        ++rep.checked;
        bool a = strong.contains(DimSet{Y});
        bool b = other.contains(all - DimSet{Y});
        if (a == b) rep.violations.emplace_back(Y);
    });
    return rep;
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

namespace {

// Vertex maps of the hyperoctahedral group acting on {0,1}^n: flip, then permute.
std::vector<std::vector<Mask>> symmetry_tables(int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<Mask>> tables;
    const Mask vertices = Mask{1} << n;
    do {
        for (Mask flip = 0; flip < vertices; ++flip) {
            std::vector<Mask> table(static_cast<std::size_t>(vertices));
            for (Mask v = 0; v < vertices; ++v) {
                Mask w = 0;
                Mask x = v ^ flip;
                for (int i = 0; i < n; ++i) {
                    if (x & (Mask{1} << i)) w |= Mask{1} << perm[static_cast<std::size_t>(i)];
                }
                table[static_cast<std::size_t>(v)] = w;
            }
            tables.push_back(std::move(table));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return tables;
}

}  // namespace

ConceptClass canonical_form(const ConceptClass& C) {
    const int n = C.dims();
    if (n > 6) fail(ErrorCode::InputError, "canonical_form supports n <= 6");
    std::uint64_t best = ~std::uint64_t{0};
    for (const auto& table : symmetry_tables(n)) {
        std::uint64_t image = 0;
        for (Mask r : C.rows()) image |= std::uint64_t{1} << table[static_cast<std::size_t>(r)];
        best = std::min(best, image);
    }
    std::vector<Mask> rows;
    for (std::uint64_t rest = C.empty() ? 0 : best; rest != 0; rest &= rest - 1) rows.push_back(static_cast<Mask>(std::countr_zero(rest)));
    return ConceptClass(C.domain(), std::move(rows));
}

void for_each_extremal(int n, bool up_to_symmetry, const std::function<void(const ConceptClass&)>& f) {
    if (n < 0 || n > 4) fail(ErrorCode::InputError, "exhaustive enumeration needs 0 <= n <= 4");
    Domain domain = Domain::numbered(n);
    const std::size_t vertices = std::size_t{1} << n;
    const std::uint64_t classes = std::uint64_t{1} << vertices;
    auto tables = up_to_symmetry ? symmetry_tables(n) : std::vector<std::vector<Mask>>{};
    std::vector<Mask> rows;
    for (std::uint64_t indicator = 0; indicator < classes; ++indicator) {
        if (up_to_symmetry) {
            bool canonical = true;
            for (const auto& table : tables) {
                std::uint64_t image = 0;
                for (std::uint64_t rest = indicator; rest != 0; rest &= rest - 1) {
                    image |= std::uint64_t{1} << table[static_cast<std::size_t>(std::countr_zero(rest))];
                }
                if (image < indicator) {
                    canonical = false;
                    break;
                }
            }
            if (!canonical) continue;
        }
        rows.clear();
        for (std::uint64_t rest = indicator; rest != 0; rest &= rest - 1) rows.push_back(static_cast<Mask>(std::countr_zero(rest)));
        ConceptClass C(domain, rows);
        if (is_extremal(C)) f(C);
    }
}

std::vector<ConceptClass> enumerate_extremal(int n, bool up_to_symmetry) {
    std::vector<ConceptClass> out;
    for_each_extremal(n, up_to_symmetry, [&](const ConceptClass& C) { out.push_back(C); });
    return out;
}

ConceptClass random_class(int n, double density, std::uint64_t seed) {
    if (n < 0) fail(ErrorCode::InputError, "random_class needs n >= 0");
    require_within_cap(n, "random_class");
    std::mt19937_64 rng(seed);
    std::vector<Mask> rows;
    for (Mask v = 0; v < (Mask{1} << n); ++v) {
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (u < density) rows.push_back(v);
    }
    return ConceptClass(Domain::numbered(n), std::move(rows));
}

ConceptClass random_extremal_class(int n, std::uint64_t seed, int walk_steps) {
    if (n < 0) fail(ErrorCode::InputError, "random_extremal_class needs n >= 0");
    require_within_cap(n, "random_extremal_class");
    std::mt19937_64 rng(seed);
    const Mask vertices = Mask{1} << n;
    Domain domain = Domain::numbered(n);
    std::vector<Mask> seeds(1 + rng() % static_cast<Mask>(n + 1));
    for (auto& s : seeds) s = rng() % vertices;
    ConceptClass C = downward_closure(domain, seeds);
    Mask flip = rng() % vertices;
    std::vector<Mask> flipped;
    for (Mask r : C.rows()) flipped.push_back(r ^ flip);
    C = ConceptClass(domain, std::move(flipped));
    for (int step = 0; step < walk_steps; ++step) {
        Mask v = rng() % vertices;
        ConceptClass next = C.contains(v) ? C.without(v) : C.with(v);
        if (!next.empty() && is_extremal(next)) C = std::move(next);
    }
    return C;
}

// ---------------------------------------------------------------------------
// Named classes
// ---------------------------------------------------------------------------

namespace {

const std::vector<std::string> kFig1Rows = {
    "000000", "001000", "010000", "100000", "001010", "001100", "101000", "110000", "001011",
    "001110", "001101", "101100", "111000", "110100", "001111", "101101", "111100", "101111",
};

const std::vector<std::string> kFig3Rows = {"1000", "1010", "1011", "1111", "1110", "0010", "0000", "0110"};

std::vector<int> parse_args(std::string_view name, std::string_view prefix, std::size_t count) {
    std::string_view rest = name.substr(prefix.size());
    if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')') fail(ErrorCode::InputError, "malformed builtin '" + std::string(name) + "'");
    rest = rest.substr(1, rest.size() - 2);
    std::vector<int> args;
    while (!rest.empty()) {
        auto comma = rest.find(',');
        std::string_view item = rest.substr(0, comma);
        int value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (ec != std::errc{} || ptr != item.data() + item.size()) fail(ErrorCode::InputError, "bad argument in '" + std::string(name) + "'");
        args.push_back(value);
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    if (args.size() != count) fail(ErrorCode::InputError, "wrong number of arguments in '" + std::string(name) + "'");
    return args;
}

bool starts_with(std::string_view s, std::string_view p) { return s.substr(0, p.size()) == p; }

}  // namespace

ConceptClass builtin(std::string_view name) {
    if (name == "fig1") return ConceptClass::from_strings(Domain::numbered(6), kFig1Rows);
    if (name == "fig2") return expression_to_class(parse_cube_expression(kFig2Expression));
    if (name == "fig3") return ConceptClass::from_strings(Domain::numbered(4, "p"), kFig3Rows);
    if (starts_with(name, "parity(")) return parity_class(parse_args(name, "parity", 1)[0]);
    if (starts_with(name, "hamming(")) {
        auto a = parse_args(name, "hamming", 2);
        return hamming_ball(a[0], a[1]);
    }
    if (starts_with(name, "glued_complement(")) return glued_cube_complement(parse_args(name, "glued_complement", 1)[0]);
    if (starts_with(name, "glued(")) return glued_cube(parse_args(name, "glued", 1)[0]);
    if (starts_with(name, "cube(")) {
        int n = parse_args(name, "cube", 1)[0];
        if (n < 0) fail(ErrorCode::InputError, "cube(n) needs n >= 0");
        return ConceptClass::full_cube(Domain::numbered(n));
    }
    fail(ErrorCode::InputError, "unknown builtin '" + std::string(name) + "'");
}

std::vector<std::string> builtin_names() {
    return {"fig1", "fig2", "fig3", "parity(n)", "hamming(n,d)", "glued(k)", "glued_complement(k)", "cube(n)"};
}

}  // namespace extremal
