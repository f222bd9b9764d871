#pragma once

#include <string>
#include <string_view>

#include "extremal/core.hpp"

namespace extremal {

// Concept-class text format:
//
//   # comment
//   x1 x2 x3        <- dimension names, whitespace separated
//   010             <- one bit string per concept
//   110
//
// `#` starts a comment anywhere on a line and blank lines are ignored. An empty
// domain is written as a header of `-`, and the empty concept as `-`.

std::string format_class(const ConceptClass& C);
ConceptClass parse_class(std::string_view text);
ConceptClass read_class_file(const std::string& path);
void write_class_file(const std::string& path, const ConceptClass& C);

/// "x2=1,x4=1,x5=0" in domain order; the empty sample is "".
std::string format_sample(const Sample& s);
Sample parse_sample(const Domain& domain, std::string_view text);

/// "x2,x4" in domain order; the empty set is "".
std::string format_dims(const Domain& domain, DimSet set);
/// "{x2,x4}"; the empty set is "{}".
std::string format_dims_braced(const Domain& domain, DimSet set);
/// Accepts "x2,x4", "{x2,x4}", "" and "{}".
DimSet parse_dims(const Domain& domain, std::string_view text);

}  // namespace extremal
