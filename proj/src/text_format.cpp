#include "extremal/text_format.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace extremal {

namespace {

std::string_view strip(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream in{std::string(line)};
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::vector<std::string_view> split_commas(std::string_view text) {
    std::vector<std::string_view> out;
    if (strip(text).empty()) return out;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        out.push_back(strip(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace

std::string format_class(const ConceptClass& C) {
    std::string out;
    const Domain& d = C.domain();
    if (d.empty()) {
        out += "-\n";
    } else {
        for (int i = 0; i < d.size(); ++i) {
            if (i) out += ' ';
            out += d.name(i);
        }
        out += '\n';
    }
    for (Mask r : C.rows()) {
        out += d.empty() ? "-" : to_bitstring(r, d.size());
        out += '\n';
    }
    return out;
}

ConceptClass parse_class(std::string_view text) {
    std::optional<Domain> domain;
    std::vector<Mask> rows;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = strip(line);
        if (line.empty()) continue;
        if (!domain) {
            if (line == "-") {
                domain = Domain{};
            } else {
                domain = Domain(split_ws(line));
            }
            continue;
        }
        try {
            if (domain->empty()) {
                if (line != "-") fail(ErrorCode::ParseError, "empty-domain classes only hold the concept '-'");
                rows.push_back(0);
            } else {
                rows.push_back(parse_bitstring(line, domain->size()));
            }
        } catch (const Error& e) {
            fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (!domain) fail(ErrorCode::ParseError, "missing header line with dimension names");
    return ConceptClass(*domain, std::move(rows));
}

ConceptClass read_class_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::InputError, "cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_class(buf.str());
}

void write_class_file(const std::string& path, const ConceptClass& C) {
    std::ofstream out(path);
    if (!out) fail(ErrorCode::InputError, "cannot write '" + path + "'");
    out << format_class(C);
}

std::string format_sample(const Sample& s) {
    std::string out;
    for (int i = 0; i < s.domain.size(); ++i) {
        Mask b = s.domain.bit(i);
        if (!(s.dims.bits & b)) continue;
        if (!out.empty()) out += ',';
        out += s.domain.name(i);
        out += (s.labels & b) ? "=1" : "=0";
    }
    return out;
}

Sample parse_sample(const Domain& domain, std::string_view text) {
    Sample s{domain, DimSet{}, 0};
    for (auto item : split_commas(text)) {
        auto eq = item.find('=');
        if (eq == std::string_view::npos) fail(ErrorCode::ParseError, "sample item '" + std::string(item) + "' lacks '='");
        auto name = strip(item.substr(0, eq));
        auto value = strip(item.substr(eq + 1));
        if (value != "0" && value != "1") fail(ErrorCode::ParseError, "sample label must be 0 or 1 in '" + std::string(item) + "'");
        auto idx = domain.find(name);
        if (!idx) fail(ErrorCode::InputError, "unknown dimension '" + std::string(name) + "' in sample");
        Mask b = domain.bit(*idx);
        if (s.dims.bits & b) fail(ErrorCode::ParseError, "dimension '" + std::string(name) + "' repeated in sample");
        s.dims.bits |= b;
        if (value == "1") s.labels |= b;
    }
    return s;
}

std::string format_dims(const Domain& domain, DimSet set) {
    std::string out;
    for (const auto& l : domain.labels(set)) {
        if (!out.empty()) out += ',';
        out += l;
    }
    return out;
}

std::string format_dims_braced(const Domain& domain, DimSet set) { return "{" + format_dims(domain, set) + "}"; }

DimSet parse_dims(const Domain& domain, std::string_view text) {
    text = strip(text);
    if (text.size() >= 2 && text.front() == '{' && text.back() == '}') text = text.substr(1, text.size() - 2);
    DimSet out;
    for (auto item : split_commas(text)) {
        if (item.empty()) fail(ErrorCode::ParseError, "empty dimension name in set");
        DimSet d = domain.dim(item);
        if (out.contains(d)) fail(ErrorCode::ParseError, "dimension '" + std::string(item) + "' repeated in set");
        out = out | d;
    }
    return out;
}

}  // namespace extremal
