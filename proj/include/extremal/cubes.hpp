#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "extremal/core.hpp"

namespace extremal {

/// Union of cubes over one domain, written "**0*00+1***00".
struct CubeExpression {
    Domain domain;
    std::vector<Cube> cubes;
};

/// Cubes of C whose dimension set is exactly S, ordered by tag.
std::vector<Cube> cubes_with_dims(const ConceptClass& C, DimSet S);

/// Every cube of C, in canonical cube order.
std::vector<Cube> all_cubes(const ConceptClass& C);

/// Cubes of C not strictly contained in another cube of C, in canonical cube order.
std::vector<Cube> maximal_cubes(const ConceptClass& C);

/// Maximal cubes of C containing the concept c.
std::vector<Cube> maximal_cubes_at(const ConceptClass& C, Mask c);

/// Maximal cubes of C|dom(s) that contain s, as cubes over the sub-domain dom(s).
/// Throws NotASample if no concept of C agrees with s.
std::vector<Cube> maximal_cubes_containing(const ConceptClass& C, const Sample& s);

/// For extremal C: maximal-cube dimension sets are pairwise incomparable, and no
/// other cube has a dimension set containing a maximal cube's one.
bool maximal_cubes_form_antichain(const ConceptClass& C);

/// Parses "+"-joined tokens over {0,1,*}. Without a domain, names are x1..xn.
CubeExpression parse_cube_expression(std::string_view text, std::optional<Domain> domain = std::nullopt);
std::string print_cube_expression(const CubeExpression& e);
ConceptClass expression_to_class(const CubeExpression& e);
CubeExpression as_expression(const Domain& domain, std::vector<Cube> cubes);

}  // namespace extremal
