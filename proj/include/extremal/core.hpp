#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "extremal/bits.hpp"

namespace extremal {

enum class ErrorCode {
    InputError,
    ParseError,
    NotASample,
    NotExtremal,
    NoCube,
    UniquenessViolation,
};

std::string_view to_string(ErrorCode code);

/// Raised for caller mistakes and broken preconditions; `code()` says which kind.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what);
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

/// Largest domain accepted by operations that enumerate all subsets of the domain.
/// Defaults to 24; the CLI exposes it as `--max-n`.
int dimension_cap();
void set_dimension_cap(int cap);
void require_within_cap(int n, std::string_view operation);

// ---------------------------------------------------------------------------
// DimSet
// ---------------------------------------------------------------------------

/// A set of dimensions of some Domain, as a bit mask in that domain's layout.
struct DimSet {
    Mask bits = 0;

    constexpr DimSet() = default;
    constexpr explicit DimSet(Mask m) : bits(m) {}

    int size() const { return popcount(bits); }
    bool empty() const { return bits == 0; }
    bool contains(DimSet other) const { return is_subset(other.bits, bits); }
    bool subset_of(DimSet other) const { return is_subset(bits, other.bits); }

    friend DimSet operator|(DimSet a, DimSet b) { return DimSet{a.bits | b.bits}; }
    friend DimSet operator&(DimSet a, DimSet b) { return DimSet{a.bits & b.bits}; }
    friend DimSet operator-(DimSet a, DimSet b) { return DimSet{a.bits & ~b.bits}; }
    friend bool operator==(DimSet a, DimSet b) = default;
};

/// Canonical order on dimension sets: by size, then lexicographically by members
/// in domain order.
bool canonical_less(DimSet a, DimSet b);
void sort_canonical(std::vector<DimSet>& sets);

// ---------------------------------------------------------------------------
// Domain
// ---------------------------------------------------------------------------

/// Ordered list of distinct dimension labels. Cheap to copy.
///
/// The label at position i owns bit (n-1-i) of every mask over this domain, so
/// ascending mask order is lexicographic bit-string order.
class Domain {
public:
    Domain();
    explicit Domain(std::vector<std::string> names);

    /// x1, x2, ..., xn
    static Domain numbered(int n, std::string_view prefix = "x");

    int size() const { return static_cast<int>(names_->size()); }
    bool empty() const { return names_->empty(); }
    const std::string& name(int i) const { return (*names_)[static_cast<std::size_t>(i)]; }
    std::span<const std::string> names() const { return *names_; }

    Mask bit(int i) const { return Mask{1} << (size() - 1 - i); }
    int index_of_bit(Mask single_bit) const;
    DimSet all() const { return DimSet{low_bits(size())}; }

    std::optional<int> find(std::string_view label) const;
    /// Throws InputError on an unknown label.
    int index_of(std::string_view label) const;
    DimSet dim(std::string_view label) const { return DimSet{bit(index_of(label))}; }
    DimSet dims(std::initializer_list<std::string_view> labels) const;
    DimSet dims(std::span<const std::string> labels) const;

    /// Members of `set` in domain order.
    std::vector<std::string> labels(DimSet set) const;
    /// The sub-domain made of the members of `set`, in inherited order.
    Domain sub(DimSet set) const;

    friend bool operator==(const Domain& a, const Domain& b);

private:
    std::shared_ptr<const std::vector<std::string>> names_;
};

// ---------------------------------------------------------------------------
// Concept, Sample, Cube, Edge
// ---------------------------------------------------------------------------

/// Total 0/1 assignment on a domain.
struct Concept {
    Domain domain;
    Mask bits = 0;

    bool value(int i) const { return (bits & domain.bit(i)) != 0; }
    friend bool operator==(const Concept& a, const Concept& b) = default;
};

/// Bit string in domain order, e.g. "010100". The empty concept prints as "".
std::string to_bitstring(Mask bits, int n);
std::string to_string(const Concept& c);
/// Inverse of to_bitstring; throws ParseError on wrong length or characters.
Mask parse_bitstring(std::string_view text, int n);

/// Partial assignment: labels on the dimensions `dims` of `domain`.
struct Sample {
    Domain domain;
    DimSet dims;
    Mask labels = 0;  ///< always a subset of dims.bits

    int size() const { return dims.size(); }
    /// The sample c|S.
    static Sample of(const Concept& c, DimSet S);
    /// Same sample restricted further to `sub` ⊆ dims.
    Sample restricted_to(DimSet sub) const;
    bool consistent_with(Mask concept_bits) const { return (concept_bits & dims.bits) == labels; }
    friend bool operator==(const Sample& a, const Sample& b) = default;
};

/// Sub-hypercube of a domain: free dimensions `dims`, fixed bits `tag` elsewhere.
/// Tag bits live in the full-domain layout and are zero on `dims`.
struct Cube {
    Domain domain;
    DimSet dims;
    Mask tag = 0;

    bool contains(Mask concept_bits) const { return (concept_bits & ~dims.bits) == tag; }
    bool contains(const Cube& other) const {
        return other.dims.subset_of(dims) && contains(other.tag);
    }
    std::size_t vertex_count() const { return std::size_t{1} << dims.size(); }
    std::vector<Mask> vertices() const;
    /// The tag as a concept of domain \ dims (the reduction's coordinates).
    Concept tag_concept() const;
    friend bool operator==(const Cube& a, const Cube& b) = default;
};

/// "**0*00": '*' on free dimensions, tag bits elsewhere.
std::string to_string(const Cube& b);
/// Cube ordering: canonical dimension-set order, then tag.
bool canonical_less(const Cube& a, const Cube& b);

/// One-inclusion graph edge; `lo` has 0 on `dim`, `hi` has 1.
struct Edge {
    Mask lo = 0;
    Mask hi = 0;
    int dim = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
};

// ---------------------------------------------------------------------------
// ConceptClass
// ---------------------------------------------------------------------------

/// Deduplicated set of concepts over one domain, iterated in bit-string order.
class ConceptClass {
public:
    ConceptClass() = default;
    explicit ConceptClass(Domain domain) : domain_(std::move(domain)) {}
    /// Sorts and deduplicates; rows must be masks over `domain`.
    ConceptClass(Domain domain, std::vector<Mask> rows);

    /// Every vertex of {0,1}^n.
    static ConceptClass full_cube(Domain domain);
    /// Parses bit strings such as "010100".
    static ConceptClass from_strings(Domain domain, std::span<const std::string> rows);

    const Domain& domain() const { return domain_; }
    int dims() const { return domain_.size(); }
    std::size_t size() const { return rows_.size(); }
    bool empty() const { return rows_.empty(); }
    std::span<const Mask> rows() const { return rows_; }
    Concept concept_at(std::size_t i) const { return Concept{domain_, rows_[i]}; }

    bool contains(Mask bits) const;
    bool contains(const Concept& c) const;
    /// Position of `bits` in rows(), if present.
    std::optional<std::size_t> index_of(Mask bits) const;
    Concept concept_from(std::string_view bitstring) const;

    ConceptClass with(Mask bits) const;
    ConceptClass without(Mask bits) const;

    friend bool operator==(const ConceptClass& a, const ConceptClass& b);

private:
    Domain domain_;
    std::vector<Mask> rows_;
};

/// Builds a class from 0/1 vectors; each row must have |domain| entries.
ConceptClass make_class(Domain domain, const std::vector<std::vector<int>>& rows);

/// C|S on domain S. restrict(C, ∅) is {∅} for nonempty C and ∅ otherwise.
ConceptClass restrict(const ConceptClass& C, DimSet S);
/// C - S, i.e. restrict(C, dom(C) \ S).
ConceptClass remove_dims(const ConceptClass& C, DimSet S);
/// C^S: one tag per cube of C with dimension set S, on domain dom(C) \ S.
ConceptClass reduction(const ConceptClass& C, DimSet S);
/// {0,1}^n \ C.
ConceptClass complement(const ConceptClass& C);
/// Negates column x in every concept.
ConceptClass flip_column(const ConceptClass& C, int x);
/// C ∩ B for a cube B over dom(C).
ConceptClass intersect(const ConceptClass& C, const Cube& B);

bool is_downward_closed(const ConceptClass& C);

std::vector<Edge> one_inclusion_edges(const ConceptClass& C);

inline int hamming_distance(Mask a, Mask b) { return popcount(a ^ b); }

/// Shortest path length in the one-inclusion graph; nullopt when disconnected.
std::optional<int> graph_distance(const ConceptClass& C, Mask a, Mask b);

}  // namespace extremal
