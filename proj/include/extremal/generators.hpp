#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "extremal/core.hpp"

namespace extremal {

// ---------------------------------------------------------------------------
// Downward-closed classes
// ---------------------------------------------------------------------------

/// Every concept below some seed (coordinatewise).
ConceptClass downward_closure(const Domain& domain, std::span<const Mask> seeds);
/// Concepts over x1..xn with at most d ones.
ConceptClass hamming_ball(int n, int d);
/// Concepts over x1..xn with an even number of ones.
ConceptClass parity_class(int n);

// ---------------------------------------------------------------------------
// Line arrangements
// ---------------------------------------------------------------------------

using Rational = boost::multiprecision::cpp_rational;

/// The line a*x + b*y = c; its positive side is a*x + b*y > c.
struct Line {
    Rational a, b, c;
};

struct Point {
    Rational x, y;
};

/// Lines in the plane, optionally clipped to a convex polygon (the whole plane
/// when `region` is empty). Cell labels are named p1..pk after the lines.
struct LineArrangement {
    std::vector<Line> lines;
    std::optional<std::vector<Point>> region;

    /// Throws InputError for a null line, identical lines, three concurrent
    /// lines, or a region that is not a convex polygon with positive area.
    void validate() const;
};

/// Sign vectors of the open cells that meet the open region.
ConceptClass cells_in_region(const LineArrangement& arrangement);

/// Four lines (one parallel pair) and a convex polygon whose cells are
/// {1000,1010,1011,1111,1110,0010,0000,0110}.
LineArrangement fig3_arrangement();

// ---------------------------------------------------------------------------
// s-t orientations
// ---------------------------------------------------------------------------

/// Simple undirected graph with a reference orientation u -> v per edge.
struct RefGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;
    int s = 0;
    int t = 1;
    std::vector<std::string> vertex_names;  ///< optional; defaults to v0, v1, ...

    void validate() const;
    std::string vertex_name(int v) const;
};

/// Parses "s-u,u-t,s-t" (reference orientation left to right). `s` and `t` name
/// the terminals.
RefGraph parse_graph(std::string_view edges, std::string_view s, std::string_view t);

/// Orientations (bit 1 = reversed) with a directed s -> t path, over domain E.
/// Edge dimensions are named "u-v".
ConceptClass st_orientation_class(const RefGraph& g);
/// Edge subsets containing an undirected s - t path.
std::size_t count_st_connected_subgraphs(const RefGraph& g);

// ---------------------------------------------------------------------------
// Glued cubes
// ---------------------------------------------------------------------------

/// A k-cube over y1..yk with one pendant edge of a fresh dimension z1..z(2^k)
/// glued to each vertex: 2^(k+1) concepts over n = 2^k + k dimensions.
ConceptClass glued_cube(int k);
/// Complement of glued_cube(k). Needs 1 <= k <= 3.
ConceptClass glued_cube_complement(int k);

struct DualityReport {
    std::size_t checked = 0;
    std::vector<DimSet> violations;  ///< Y where not exactly one side holds
    bool passed() const { return violations.empty(); }
};

/// For every Y ⊆ X: exactly one of {C strongly shatters Y, complement(C) shatters X \ Y}.
DualityReport complement_duality_check(const ConceptClass& C);

// ---------------------------------------------------------------------------
// Enumeration and random classes
// ---------------------------------------------------------------------------

/// Image of C under column flips and dimension permutations with the least
/// indicator (sum of 2^v over its vertices v). The domain is kept. Needs n <= 6.
ConceptClass canonical_form(const ConceptClass& C);

/// Every extremal class over x1..xn (n <= 4), in indicator order; with
/// `up_to_symmetry` only canonical forms are kept, one per orbit.
std::vector<ConceptClass> enumerate_extremal(int n, bool up_to_symmetry = false);
void for_each_extremal(int n, bool up_to_symmetry, const std::function<void(const ConceptClass&)>& f);

/// Each vertex of {0,1}^n kept with probability `density`; seed-deterministic.
ConceptClass random_class(int n, double density, std::uint64_t seed);

/// Random extremal class over x1..xn: a random downward-closed class with random
/// column flips, then a walk of single-concept toggles that keep extremality.
ConceptClass random_extremal_class(int n, std::uint64_t seed, int walk_steps = 64);

// ---------------------------------------------------------------------------
// Named classes
// ---------------------------------------------------------------------------

/// fig1, fig2, fig3, parity(n), hamming(n,d), glued(k), cube(n).
ConceptClass builtin(std::string_view name);
std::vector<std::string> builtin_names();

/// The fig2 class as a cube expression.
inline constexpr std::string_view kFig2Expression = "**0*00+1***00+1101*0+01010*";

}  // namespace extremal
