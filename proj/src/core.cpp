#include "extremal/core.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <unordered_set>

namespace extremal {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InputError: return "INPUT_ERROR";
        case ErrorCode::ParseError: return "PARSE_ERROR";
        case ErrorCode::NotASample: return "NOT_A_SAMPLE";
        case ErrorCode::NotExtremal: return "NOT_EXTREMAL";
        case ErrorCode::NoCube: return "NO_CUBE";
        case ErrorCode::UniquenessViolation: return "UNIQUENESS_VIOLATION";
    }
    return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

namespace {
std::atomic<int> g_dimension_cap{24};
}

int dimension_cap() { return g_dimension_cap.load(); }

void set_dimension_cap(int cap) {
    if (cap < 0 || cap > kMaxDomainBits) {
        fail(ErrorCode::InputError, "dimension cap must lie in [0, " + std::to_string(kMaxDomainBits) + "]");
    }
    g_dimension_cap.store(cap);
}

void require_within_cap(int n, std::string_view operation) {
    if (n > dimension_cap()) {
        fail(ErrorCode::InputError, std::string(operation) + " needs n <= " + std::to_string(dimension_cap()) +
                                        " (got " + std::to_string(n) + "); raise the cap to override");
    }
}

// ---------------------------------------------------------------------------

bool canonical_less(DimSet a, DimSet b) {
    int sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    // Earlier dimensions own higher bits.
    return a.bits > b.bits;
}

void sort_canonical(std::vector<DimSet>& sets) {
    std::sort(sets.begin(), sets.end(), [](DimSet a, DimSet b) { return canonical_less(a, b); });
}

// ---------------------------------------------------------------------------

Domain::Domain() : names_(std::make_shared<const std::vector<std::string>>()) {}

Domain::Domain(std::vector<std::string> names) {
    if (static_cast<int>(names.size()) > kMaxDomainBits) {
        fail(ErrorCode::InputError, "domain has " + std::to_string(names.size()) + " dimensions; at most " +
                                        std::to_string(kMaxDomainBits) + " are supported");
    }
    std::unordered_set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty()) fail(ErrorCode::InputError, "dimension labels must be non-empty");
        if (!seen.insert(n).second) fail(ErrorCode::InputError, "duplicate dimension label '" + n + "'");
    }
    names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

Domain Domain::numbered(int n, std::string_view prefix) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) names.push_back(std::string(prefix) + std::to_string(i));
    return Domain(std::move(names));
}

int Domain::index_of_bit(Mask single_bit) const { return size() - 1 - std::countr_zero(single_bit); }

std::optional<int> Domain::find(std::string_view label) const {
    for (int i = 0; i < size(); ++i) {
        if (name(i) == label) return i;
    }
    return std::nullopt;
}

int Domain::index_of(std::string_view label) const {
    auto i = find(label);
    if (!i) fail(ErrorCode::InputError, "unknown dimension '" + std::string(label) + "'");
    return *i;
}

DimSet Domain::dims(std::initializer_list<std::string_view> labels) const {
    DimSet out;
    for (auto l : labels) out = out | dim(l);
    return out;
}

DimSet Domain::dims(std::span<const std::string> labels) const {
    DimSet out;
    for (const auto& l : labels) out = out | dim(l);
    return out;
}

std::vector<std::string> Domain::labels(DimSet set) const {
    std::vector<std::string> out;
    for (int i = 0; i < size(); ++i) {
        if (set.bits & bit(i)) out.push_back(name(i));
    }
    return out;
}

Domain Domain::sub(DimSet set) const { return Domain(labels(set)); }

bool operator==(const Domain& a, const Domain& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
}

// ---------------------------------------------------------------------------

std::string to_bitstring(Mask bits, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i) {
        if (bits & (Mask{1} << (n - 1 - i))) s[static_cast<std::size_t>(i)] = '1';
    }
    return s;
}

std::string to_string(const Concept& c) { return to_bitstring(c.bits, c.domain.size()); }

Mask parse_bitstring(std::string_view text, int n) {
    if (static_cast<int>(text.size()) != n) {
        fail(ErrorCode::ParseError, "bit string '" + std::string(text) + "' has length " +
                                        std::to_string(text.size()) + ", expected " + std::to_string(n));
    }
    Mask m = 0;
    for (char ch : text) {
        if (ch != '0' && ch != '1') fail(ErrorCode::ParseError, "bad character in bit string '" + std::string(text) + "'");
        m = (m << 1) | static_cast<Mask>(ch == '1');
    }
    return m;
}

Sample Sample::of(const Concept& c, DimSet S) { return Sample{c.domain, S, c.bits & S.bits}; }

Sample Sample::restricted_to(DimSet sub) const {
    if (!sub.subset_of(dims)) fail(ErrorCode::InputError, "sub-sample domain is not inside the sample domain");
    return Sample{domain, sub, labels & sub.bits};
}

std::vector<Mask> Cube::vertices() const {
    std::vector<Mask> out;
    out.reserve(vertex_count());
    for_each_subset(dims.bits, [&](Mask sub) { out.push_back(tag | sub); });
    std::sort(out.begin(), out.end());
    return out;
}

Concept Cube::tag_concept() const {
    DimSet rest = domain.all() - dims;
    return Concept{domain.sub(rest), gather_bits(tag, rest.bits)};
}

std::string to_string(const Cube& b) {
    int n = b.domain.size();
    std::string s = to_bitstring(b.tag, n);
    for (int i = 0; i < n; ++i) {
        if (b.dims.bits & b.domain.bit(i)) s[static_cast<std::size_t>(i)] = '*';
    }
    return s;
}

bool canonical_less(const Cube& a, const Cube& b) {
    if (a.dims != b.dims) return canonical_less(a.dims, b.dims);
    return a.tag < b.tag;
}

// ---------------------------------------------------------------------------

ConceptClass::ConceptClass(Domain domain, std::vector<Mask> rows) : domain_(std::move(domain)), rows_(std::move(rows)) {
    Mask outside = ~low_bits(domain_.size());
    for (Mask r : rows_) {
        if (r & outside) fail(ErrorCode::InputError, "concept has bits outside its domain");
    }
    std::sort(rows_.begin(), rows_.end());
    rows_.erase(std::unique(rows_.begin(), rows_.end()), rows_.end());
}

ConceptClass ConceptClass::full_cube(Domain domain) {
    require_within_cap(domain.size(), "full_cube");
    std::vector<Mask> rows(std::size_t{1} << domain.size());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
    return ConceptClass(std::move(domain), std::move(rows));
}

ConceptClass ConceptClass::from_strings(Domain domain, std::span<const std::string> rows) {
    std::vector<Mask> masks;
    masks.reserve(rows.size());
    for (const auto& r : rows) masks.push_back(parse_bitstring(r, domain.size()));
    return ConceptClass(std::move(domain), std::move(masks));
}

bool ConceptClass::contains(Mask bits) const { return std::binary_search(rows_.begin(), rows_.end(), bits); }

bool ConceptClass::contains(const Concept& c) const { return c.domain == domain_ && contains(c.bits); }

std::optional<std::size_t> ConceptClass::index_of(Mask bits) const {
    auto it = std::lower_bound(rows_.begin(), rows_.end(), bits);
    if (it == rows_.end() || *it != bits) return std::nullopt;
    return static_cast<std::size_t>(it - rows_.begin());
}

Concept ConceptClass::concept_from(std::string_view bitstring) const {
    return Concept{domain_, parse_bitstring(bitstring, domain_.size())};
}

ConceptClass ConceptClass::with(Mask bits) const {
    auto rows = rows_;
    rows.push_back(bits);
    return ConceptClass(domain_, std::move(rows));
}

ConceptClass ConceptClass::without(Mask bits) const {
    ConceptClass out(domain_);
    out.rows_.reserve(rows_.size());
    for (Mask r : rows_) {
        if (r != bits) out.rows_.push_back(r);
    }
    return out;
}

bool operator==(const ConceptClass& a, const ConceptClass& b) { return a.domain_ == b.domain_ && a.rows_ == b.rows_; }

ConceptClass make_class(Domain domain, const std::vector<std::vector<int>>& rows) {
    int n = domain.size();
    std::vector<Mask> masks;
    masks.reserve(rows.size());
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n) {
            fail(ErrorCode::InputError, "row has " + std::to_string(row.size()) + " entries, domain has " + std::to_string(n));
        }
        Mask m = 0;
        for (int i = 0; i < n; ++i) {
            int v = row[static_cast<std::size_t>(i)];
            if (v != 0 && v != 1) fail(ErrorCode::InputError, "row entries must be 0 or 1");
            if (v) m |= domain.bit(i);
        }
        masks.push_back(m);
    }
    return ConceptClass(std::move(domain), std::move(masks));
}

namespace {
void require_dims(const ConceptClass& C, DimSet S) {
    if (!S.subset_of(C.domain().all())) fail(ErrorCode::InputError, "dimension set is not a subset of the domain");
}
}  // namespace

ConceptClass restrict(const ConceptClass& C, DimSet S) {
    require_dims(C, S);
    std::vector<Mask> rows;
    rows.reserve(C.size());
    for (Mask r : C.rows()) rows.push_back(gather_bits(r, S.bits));
    return ConceptClass(C.domain().sub(S), std::move(rows));
}

ConceptClass remove_dims(const ConceptClass& C, DimSet S) {
    require_dims(C, S);
    return restrict(C, C.domain().all() - S);
}

ConceptClass reduction(const ConceptClass& C, DimSet S) {
    require_dims(C, S);
    DimSet rest = C.domain().all() - S;
    std::vector<Mask> tags;
    for (Mask r : C.rows()) {
        if (r & S.bits) continue;
        bool cube = true;
        for_each_subset(S.bits, [&](Mask sub) {
            if (cube && !C.contains(r | sub)) cube = false;
        });
        if (cube) tags.push_back(gather_bits(r, rest.bits));
    }
    return ConceptClass(C.domain().sub(rest), std::move(tags));
}

ConceptClass complement(const ConceptClass& C) {
    require_within_cap(C.dims(), "complement");
    std::vector<Mask> rows;
    Mask total = Mask{1} << C.dims();
    rows.reserve(static_cast<std::size_t>(total) - C.size());
    auto it = C.rows().begin();
    for (Mask v = 0; v < total; ++v) {
        if (it != C.rows().end() && *it == v) {
            ++it;
        } else {
            rows.push_back(v);
        }
    }
    return ConceptClass(C.domain(), std::move(rows));
}

ConceptClass flip_column(const ConceptClass& C, int x) {
    if (x < 0 || x >= C.dims()) fail(ErrorCode::InputError, "column index out of range");
    Mask b = C.domain().bit(x);
    std::vector<Mask> rows;
    rows.reserve(C.size());
    for (Mask r : C.rows()) rows.push_back(r ^ b);
    return ConceptClass(C.domain(), std::move(rows));
}

ConceptClass intersect(const ConceptClass& C, const Cube& B) {
    if (!(B.domain == C.domain())) fail(ErrorCode::InputError, "cube and class have different domains");
    std::vector<Mask> rows;
    for (Mask r : C.rows()) {
        if (B.contains(r)) rows.push_back(r);
    }
    return ConceptClass(C.domain(), std::move(rows));
}

bool is_downward_closed(const ConceptClass& C) {
    for (Mask r : C.rows()) {
        for (Mask s = r; s != 0; s &= s - 1) {
            if (!C.contains(r & ~(s & -s))) return false;
        }
    }
    return true;
}

std::vector<Edge> one_inclusion_edges(const ConceptClass& C) {
    std::vector<Edge> edges;
    int n = C.dims();
    for (Mask r : C.rows()) {
        for (int i = 0; i < n; ++i) {
            Mask b = C.domain().bit(i);
            if (!(r & b) && C.contains(r | b)) edges.push_back(Edge{r, r | b, i});
        }
    }
    return edges;
}

std::optional<int> graph_distance(const ConceptClass& C, Mask a, Mask b) {
    auto ia = C.index_of(a);
    auto ib = C.index_of(b);
    if (!ia || !ib) fail(ErrorCode::InputError, "graph_distance: concept is not a member of the class");
    std::vector<int> dist(C.size(), -1);
    std::deque<std::size_t> queue{*ia};
    dist[*ia] = 0;
    while (!queue.empty()) {
        std::size_t u = queue.front();
        queue.pop_front();
        if (u == *ib) return dist[u];
        Mask cu = C.rows()[u];
        for (int i = 0; i < C.dims(); ++i) {
            auto v = C.index_of(cu ^ C.domain().bit(i));
            if (v && dist[*v] < 0) {
                dist[*v] = dist[u] + 1;
                queue.push_back(*v);
            }
        }
    }
    return std::nullopt;
}

}  // namespace extremal
