#include "extremal/cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "extremal/compression.hpp"
#include "extremal/cubes.hpp"
#include "extremal/generators.hpp"
#include "extremal/shattering.hpp"
#include "extremal/text_format.hpp"
#include "extremal/unlabeled.hpp"

namespace extremal::cli {

namespace {

using nlohmann::ordered_json;

struct Globals {
    bool json = false;
    std::uint64_t seed = 1;
    int jobs = 1;
    int max_n = 24;
};

struct Source {
    std::string builtin;
    std::string file;
    std::string expr;
};

// A finding: printed, then exit 1.
struct Finding {
    std::string text;
    ordered_json json;
};

class CapGuard {
public:
    explicit CapGuard(int cap) : saved_(dimension_cap()) { set_dimension_cap(cap); }
    ~CapGuard() { set_dimension_cap(saved_); }

private:
    int saved_;
};

void add_source(CLI::App* app, Source& src) {
    app->add_option("--builtin", src.builtin, "named class: " + [] {
        std::string s;
        for (const auto& n : builtin_names()) s += (s.empty() ? "" : ", ") + n;
        return s;
    }());
    app->add_option("--file", src.file, "concept-class text file");
    app->add_option("--expr", src.expr, "cube expression such as \"**0*00+1***00\"");
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::InputError, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ConceptClass load(const Source& src) {
    int given = !src.builtin.empty() + !src.file.empty() + !src.expr.empty();
    if (given != 1) fail(ErrorCode::InputError, "give exactly one of --builtin, --file, --expr");
    if (!src.builtin.empty()) return builtin(src.builtin);
    if (!src.file.empty()) return read_class_file(src.file);
    return expression_to_class(parse_cube_expression(src.expr));
}

// Builtin name, else a class file.
ConceptClass load_spec(const std::string& spec) {
    try {
        return builtin(spec);
    } catch (const Error&) {
        if (!std::filesystem::exists(spec)) fail(ErrorCode::InputError, "'" + spec + "' is neither a builtin nor a file");
    }
    return read_class_file(spec);
}

Sample read_sample(const Domain& d, const std::string& text) {
    return parse_sample(d, text == "{}" ? std::string_view{} : std::string_view{text});
}

std::string show_sample(const Sample& s) {
    return s.dims.empty() ? "{}" : format_sample(s);
}

ordered_json sample_json(const Sample& s) {
    ordered_json j = ordered_json::object();
    for (int i = 0; i < s.domain.size(); ++i) {
        Mask b = s.domain.bit(i);
        if (s.dims.bits & b) j[s.domain.name(i)] = (s.labels & b) ? 1 : 0;
    }
    return j;
}

ordered_json dims_json(const Domain& d, DimSet S) { return d.labels(S); }

ordered_json class_json(const ConceptClass& C) {
    ordered_json rows = ordered_json::array();
    for (Mask r : C.rows()) rows.push_back(to_bitstring(r, C.dims()));
    std::vector<std::string> names(C.domain().names().begin(), C.domain().names().end());
    return {{"domain", names}, {"concepts", rows}};
}

ordered_json envelope(const std::string& command) {
    return {{"schema_version", kReportSchemaVersion}, {"command", command}};
}

RepresentationMap load_map(const ConceptClass& C, const std::string& path) {
    if (path.empty()) return corner_peel(C).map;
    return parse_representation_map(C, slurp(path));
}

std::vector<Mask> parse_order(const ConceptClass& C, const std::string& text) {
    std::vector<Mask> order;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) continue;
        order.push_back(parse_bitstring(std::string_view(item).substr(b, e - b + 1), C.dims()));
    }
    return order;
}

Rational parse_rational(const std::string& text) {
    try {
        return Rational(text);
    } catch (const std::exception&) {
        fail(ErrorCode::ParseError, "bad rational '" + text + "'");
    }
}

// "a,b,c;a,b,c" -> groups of `width` rationals.
std::vector<std::vector<Rational>> parse_tuples(const std::string& text, std::size_t width, const char* what) {
    std::vector<std::vector<Rational>> out;
    std::istringstream groups(text);
    std::string group;
    while (std::getline(groups, group, ';')) {
        if (group.find_first_not_of(" \t") == std::string::npos) continue;
        std::vector<Rational> values;
        std::istringstream items(group);
        std::string item;
        while (std::getline(items, item, ',')) {
            item.erase(0, item.find_first_not_of(" \t"));
            item.erase(item.find_last_not_of(" \t") + 1);
            values.push_back(parse_rational(item));
        }
        if (values.size() != width) fail(ErrorCode::ParseError, std::string(what) + " '" + group + "' needs " + std::to_string(width) + " numbers");
        out.push_back(std::move(values));
    }
    return out;
}

ordered_json cube_json(const Cube& b) {
    return {{"cube", to_string(b)}, {"dims", dims_json(b.domain, b.dims)}};
}

// ---------------------------------------------------------------------------

struct Command {
    CLI::App* app = nullptr;
    std::function<int(std::ostream&)> action;
};

class Runner {
public:
    explicit Runner(std::ostream& err) : err_(err) {}

    int run(std::span<const std::string> args, std::ostream& out);

private:
    void setup();
    void emit(std::ostream& out, const std::string& text, const ordered_json& j) const {
        if (g_.json) {
            out << j.dump(2) << '\n';
        } else {
            out << text;
        }
    }

    std::ostream& err_;
    CLI::App app_{"Finite Boolean concept classes and extremal classes", "extremal"};
    Globals g_;
    std::vector<Command> commands_;

    Source src_;
    bool strong_ = false;
    bool maximal_ = false;
    std::string dims_, at_, sample_, cube_choice_ = "first", order_, map_, map_out_, set_, scheme_ = "labeled";
    std::string kind_, seeds_, graph_, s_name_ = "s", t_name_ = "t", lines_, region_, fixture_, inner_, outer_, dump_;
    std::string from_, to_;
    int n_ = 3, d_ = 1, k_ = 2, walk_ = 64;
    double density_ = 0.5;
    bool complement_ = false, exhaustive_ = false, no_symmetry_ = false;
    std::size_t samples_ = 200, budget_ = std::size_t{1} << 20;
};

void Runner::setup() {
    app_.require_subcommand(1);
    app_.fallthrough();
    app_.add_flag("--json", g_.json, "machine-readable report");
    app_.add_option("--seed", g_.seed, "seed for random generators and hunts")->capture_default_str();
    app_.add_option("--jobs", g_.jobs, "worker threads for hunts")->check(CLI::Range(1, 256))->capture_default_str();
    app_.add_option("--max-n", g_.max_n, "largest domain for exponential operations")->check(CLI::Range(0, 63))->capture_default_str();

    auto add = [&](const std::string& name, const std::string& help, bool with_source, std::function<int(std::ostream&)> action) {
        CLI::App* sub = app_.add_subcommand(name, help);
        if (with_source) add_source(sub, src_);
        commands_.push_back({sub, std::move(action)});
        return sub;
    };

    add("check", "extremality test with the Sandwich sizes", true, [this](std::ostream& out) {
        ConceptClass C = load(src_);
        auto r = extremality_report(C);
        int vc = vc_dimension(C);
        std::ostringstream t;
        t << "extremal: " << (r.is_extremal ? "true" : "false") << ", |C|=" << r.class_size;
        if (r.is_extremal) {
            t << ", |s|=|st|=" << r.s_size;
        } else {
            t << ", |s|=" << r.s_size << ", |st|=" << r.st_size;
        }
        t << ", VCdim=" << vc;
        if (r.witness) t << ", witness=" << format_dims_braced(C.domain(), *r.witness);
        t << '\n';
        auto j = envelope("check");
        j["extremal"] = r.is_extremal;
        j["class_size"] = r.class_size;
        j["s_size"] = r.s_size;
        j["st_size"] = r.st_size;
        j["vc_dimension"] = vc;
        j["conditions"] = r.conditions;
        j["witness"] = r.witness ? dims_json(C.domain(), *r.witness) : ordered_json(nullptr);
        emit(out, t.str(), j);
        if (!r.conditions_agree()) {
            err_ << "internal error: extremality characterizations disagree\n";
            return kExitInternalError;
        }
        return kExitOk;
    });

    add("vcdim", "VC dimension", true, [this](std::ostream& out) {
        ConceptClass C = load(src_);
        int vc = vc_dimension(C);
        auto j = envelope("vcdim");
        j["vc_dimension"] = vc;
        emit(out, std::to_string(vc) + "\n", j);
        return kExitOk;
    });

    auto* shatter = add("shatter", "shattered sets, or strongly shattered with --strong", true, [this](std::ostream& out) {
        ConceptClass C = load(src_);
        SetFamily F = strong_ ? strongly_shattered_sets(C) : shattered_sets(C);
        auto j = envelope("shatter");
        j["strong"] = strong_;
        j["count"] = F.size();
        ordered_json sets = ordered_json::array();
        for (DimSet S : F.sets) sets.push_back(dims_json(C.domain(), S));
        j["sets"] = sets;
        emit(out, format_family(F), j);
        return kExitOk;
    });
    shatter->add_flag("--strong", strong_, "st(C) instead of s(C)");

    auto* cubes = add("cubes", "cubes of the class", true, [this](std::ostream& out) {
        ConceptClass C = load(src_);
        std::vector<Cube> list;
        if (!at_.empty()) {
            list = maximal_cubes_at(C, parse_bitstring(at_, C.dims()));
        } else if (!dims_.empty()) {
            list = cubes_with_dims(C, parse_dims(C.domain(), dims_));
            if (maximal_) {
                auto all = maximal_cubes(C);
                std::erase_if(list, [&](const Cube& b) { return std::find(all.begin(), all.end(), b) == all.end(); });
            }
        } else {
            list = maximal_ ? maximal_cubes(C) : all_cubes(C);
        }
        std::string text;
        ordered_json arr = ordered_json::array();
        for (const auto& b : list) {
            text += to_string(b) + '\n';
            arr.push_back(cube_json(b));
        }
        auto j = envelope("cubes");
        j["maximal"] = maximal_ || !at_.empty();
        j["count"] = list.size();
        j["cubes"] = arr;
        emit(out, text, j);
        return kExitOk;
    });
    cubes->add_flag("--maximal", maximal_, "only maximal cubes");
    cubes->add_option("--dims", dims_, "only cubes with this dimension set, e.g. x2,x4");
    cubes->add_option("--at", at_, "maximal cubes containing this concept");

    auto* compress = add("compress", "labeled compression of a sample", true, [this](std::ostream& out) {
        ConceptClass C = load(src_);
        LabeledScheme scheme(C);
        Sample s = read_sample(C.domain(), sample_);
        std::vector<Sample> kept;
        if (cube_choice_ == "all") {
            kept = scheme.compress_all_choices(s);
        } else {
            kept.push_back(scheme.compress(s));
        }
        std::string text;
        ordered_json arr = ordered_json::array();
        for (const auto& k : kept) {
            text += show_sample(k) + '\n';
            arr.push_back(sample_json(k));
        }
        auto j = envelope("compress");
        j["sample"] = sample_json(s);
        j["cube_choice"] = cube_choice_;
        j["compressed"] = arr;
        j["vc_dimension"] = scheme.vc_dimension();
        emit(out, text, j);
        return kExitOk;
    });
    compress->add_option("--sample", sample_, "sample such as x2=1,x4=1,x5=0")->required();
    compress->add_option("--cube-choice", cube_choice_, "first or all")->check(CLI::IsMember({"first", "all"}))->capture_default_str();

    auto* decompress = add("decompress", "labeled reconstruction of a compressed sample", true, [this](std::ostream& out) {
        ConceptClass C = load(src_);
        LabeledScheme scheme(C);
        Sample s = read_sample(C.domain(), sample_);
        Concept h = scheme.reconstruct(s);
        auto j = envelope("decompress");
        j["compressed"] = sample_json(s);
        j["concept"] = to_string(h);
        emit(out, to_string(h) + '\n', j);
        return kExitOk;
    });
    decompress->add_option("--sample", sample_, "compressed sample such as x2=1,x4=1")->required();

    auto* peel = add("peel", "corner peeling certificate", true, [this](std::ostream& out) {
        ConceptClass C = load(src_);
        PeelResult r = [&] {
            try {
                return order_.empty() ? corner_peel(C) : peel_in_order(C, parse_order(C, order_));
            } catch (const NoCornerFound& e) {
                auto j = envelope("peel");
                j["finding"] = "no corner";
                j["remaining"] = class_json(e.remaining());
                if (!dump_.empty()) write_class_file(dump_, e.remaining());
                throw Finding{std::string("no corner; remaining class:\n") + format_class(e.remaining()), j};
            }
        }();
        if (!map_out_.empty()) {
            std::ofstream f(map_out_);
            if (!f) fail(ErrorCode::InputError, "cannot write '" + map_out_ + "'");
            f << format_representation_map(r.map);
        }
        auto j = envelope("peel");
        ordered_json steps = ordered_json::array();
        for (const auto& st : r.certificate.steps) {
            steps.push_back({{"concept", to_bitstring(st.concept_bits, C.dims())},
                             {"rep", dims_json(C.domain(), st.rep)},
                             {"cube", to_string(st.cube)}});
        }
        j["steps"] = steps;
        emit(out, format_certificate(r.certificate), j);
        return kExitOk;
    });
    peel->add_option("--order", order_, "peel in this order (comma-separated bit strings)");
    peel->add_option("--map-out", map_out_, "write the representation map here");
    peel->add_option("--dump", dump_, "write the remaining class here if no corner is found");

    auto* ucompress = add("u-compress", "unlabeled compression of a sample", true, [this](std::ostream& out) {
        ConceptClass C = load(src_);
        RepresentationMap r = load_map(C, map_);
        Sample s = read_sample(C.domain(), sample_);
        Concept c = unlabeled_representative(r, s);
        DimSet S = r.rep(c.bits);
        auto j = envelope("u-compress");
        j["sample"] = sample_json(s);
        j["set"] = dims_json(C.domain(), S);
        j["representative"] = to_string(c);
        emit(out, format_dims_braced(C.domain(), S) + '\n', j);
        return kExitOk;
    });
    ucompress->add_option("--sample", sample_, "sample such as x2=1,x4=1,x5=0")->required();
    ucompress->add_option("--map", map_, "representation map file (default: corner peeling)");

    auto* udecompress = add("u-decompress", "unlabeled reconstruction of a dimension set", true, [this](std::ostream& out) {
        ConceptClass C = load(src_);
        RepresentationMap r = load_map(C, map_);
        Concept c = reconstruct_unlabeled(r, parse_dims(C.domain(), set_));
        auto j = envelope("u-decompress");
        j["set"] = dims_json(C.domain(), parse_dims(C.domain(), set_));
        j["concept"] = to_string(c);
        emit(out, to_string(c) + '\n', j);
        return kExitOk;
    });
    udecompress->add_option("--set", set_, "dimension set such as x2,x4 or {}")->required();
    udecompress->add_option("--map", map_, "representation map file (default: corner peeling)");

    auto* verify = add("verify", "exhaustive round trip of a compression scheme", true, [this](std::ostream& out) {
        ConceptClass C = load(src_);
        std::string text;
        auto j = envelope("verify");
        bool ok = true;
        if (scheme_ == "labeled" || scheme_ == "both") {
            auto rep = verify_scheme(LabeledScheme(C));
            ok = ok && rep.passed();
            std::ostringstream t;
            t << "labeled: " << (rep.passed() ? "pass" : "FAIL") << ", subdomains=" << rep.subdomains
              << ", samples=" << rep.samples << ", round trips=" << rep.round_trips
              << ", max compressed size=" << rep.max_compressed_size << ", VCdim=" << rep.vc_dimension << '\n';
            ordered_json failures = ordered_json::array();
            for (const auto& f : rep.failures) {
                t << "  " << show_sample(f.sample) << " -> " << show_sample(f.compressed) << ": " << f.reason << '\n';
                failures.push_back({{"sample", sample_json(f.sample)}, {"compressed", sample_json(f.compressed)}, {"reason", f.reason}});
            }
            text += t.str();
            j["labeled"] = {{"passed", rep.passed()}, {"subdomains", rep.subdomains}, {"samples", rep.samples},
                            {"round_trips", rep.round_trips}, {"max_compressed_size", rep.max_compressed_size},
                            {"vc_dimension", rep.vc_dimension}, {"failures", failures}};
        }
        if (scheme_ == "unlabeled" || scheme_ == "both") {
            auto rep = verify_unlabeled(load_map(C, map_));
            ok = ok && rep.passed();
            std::ostringstream t;
            t << "unlabeled: " << (rep.passed() ? "pass" : "FAIL") << ", samples=" << rep.samples
              << ", max compressed size=" << rep.max_compressed_size << ", VCdim=" << rep.vc_dimension << '\n';
            ordered_json failures = ordered_json::array();
            for (const auto& s : rep.failures) {
                t << "  " << show_sample(s) << '\n';
                failures.push_back(sample_json(s));
            }
            text += t.str();
            j["unlabeled"] = {{"passed", rep.passed()}, {"samples", rep.samples}, {"max_compressed_size", rep.max_compressed_size},
                              {"vc_dimension", rep.vc_dimension}, {"failures", failures}};
        }
        emit(out, text, j);
        return ok ? kExitOk : kExitFinding;
    });
    verify->add_option("--scheme", scheme_, "labeled, unlabeled or both")->check(CLI::IsMember({"labeled", "unlabeled", "both"}))->capture_default_str();
    verify->add_option("--map", map_, "representation map file for the unlabeled scheme");

    auto* generate = add("generate", "build a class from a generator", false, [this](std::ostream& out) {
        ConceptClass C;
        if (kind_ == "hamming") {
            C = hamming_ball(n_, d_);
        } else if (kind_ == "parity") {
            C = parity_class(n_);
        } else if (kind_ == "downward") {
            Domain dom = Domain::numbered(n_);
            std::vector<Mask> seeds = parse_order(ConceptClass(dom), seeds_);
            C = downward_closure(dom, seeds);
        } else if (kind_ == "glued") {
            C = complement_ ? glued_cube_complement(k_) : glued_cube(k_);
        } else if (kind_ == "orientation") {
            if (graph_.empty()) fail(ErrorCode::InputError, "orientation needs --graph");
            C = st_orientation_class(parse_graph(graph_, s_name_, t_name_));
        } else if (kind_ == "random") {
            if (!(density_ >= 0.0 && density_ <= 1.0)) fail(ErrorCode::InputError, "--density must lie in [0,1]");
            C = random_class(n_, density_, g_.seed);
        } else if (kind_ == "random-extremal") {
            C = random_extremal_class(n_, g_.seed, walk_);
        } else {  // lines
            LineArrangement a;
            if (fixture_ == "fig3") {
                a = fig3_arrangement();
            } else if (!fixture_.empty()) {
                fail(ErrorCode::InputError, "unknown line fixture '" + fixture_ + "'");
            } else {
                for (auto& v : parse_tuples(lines_, 3, "line")) a.lines.push_back({v[0], v[1], v[2]});
                if (!region_.empty()) {
                    std::vector<Point> poly;
                    for (auto& v : parse_tuples(region_, 2, "point")) poly.push_back({v[0], v[1]});
                    a.region = std::move(poly);
                }
            }
            C = cells_in_region(a);
        }
        auto j = envelope("generate");
        j["kind"] = kind_;
        j["class"] = class_json(C);
        emit(out, format_class(C), j);
        return kExitOk;
    });
    generate->add_option("kind", kind_, "hamming, parity, downward, glued, orientation, random, random-extremal, lines")
        ->required()
        ->check(CLI::IsMember({"hamming", "parity", "downward", "glued", "orientation", "random", "random-extremal", "lines"}));
    generate->add_option("--n", n_, "number of dimensions")->capture_default_str();
    generate->add_option("--d", d_, "Hamming radius")->capture_default_str();
    generate->add_option("--k", k_, "glued cube dimension")->capture_default_str();
    generate->add_flag("--complement", complement_, "complement of the glued cube");
    generate->add_option("--seeds", seeds_, "downward closure generators, e.g. 110,011");
    generate->add_option("--graph", graph_, "edges u-v,... in reference orientation");
    generate->add_option("--s", s_name_, "source vertex")->capture_default_str();
    generate->add_option("--t", t_name_, "target vertex")->capture_default_str();
    generate->add_option("--density", density_, "keep probability for random")->capture_default_str();
    generate->add_option("--walk", walk_, "toggle steps for random-extremal")->capture_default_str();
    generate->add_option("--lines", lines_, "lines a,b,c;... meaning a*x+b*y=c");
    generate->add_option("--region", region_, "convex polygon x,y;... (default: whole plane)");
    generate->add_option("--fixture", fixture_, "fig3");

    auto* hunt = add("hunt", "conjecture search: cornerless or intermediate", false, [this](std::ostream& out) {
        if (kind_ == "cornerless") {
            HuntOptions o;
            o.n_max = n_;
            o.exhaustive_max = exhaustive_ ? n_ : -1;
            if (exhaustive_ && n_ > 4) fail(ErrorCode::InputError, "exhaustive search needs --n <= 4");
            o.up_to_symmetry = !no_symmetry_;
            o.random_samples = samples_;
            o.seed = g_.seed;
            o.jobs = g_.jobs;
            CornerlessHunt h = hunt_cornerless(o);
            auto j = envelope("hunt");
            j["kind"] = "cornerless";
            ordered_json levels = ordered_json::array();
            for (const auto& l : h.levels) levels.push_back({{"n", l.n}, {"exhaustive", l.exhaustive}, {"classes_checked", l.classes_checked}});
            j["levels"] = levels;
            j["total_checked"] = h.total_checked();
            if (h.counterexample) {
                j["counterexample"] = class_json(*h.counterexample);
                if (!dump_.empty()) write_class_file(dump_, *h.counterexample);
                throw Finding{"counterexample found after " + std::to_string(h.total_checked()) + " classes:\n" +
                                  format_class(*h.counterexample),
                              j};
            }
            j["counterexample"] = nullptr;
            emit(out, "no counterexample; " + std::to_string(h.total_checked()) + " extremal classes checked\n", j);
            return kExitOk;
        }
        if (inner_.empty() || outer_.empty()) fail(ErrorCode::InputError, "intermediate needs --inner and --outer");
        IntermediateHunt h = hunt_intermediate(load_spec(inner_), load_spec(outer_), budget_);
        auto j = envelope("hunt");
        j["kind"] = "intermediate";
        j["candidates_tried"] = h.candidates_tried;
        j["exhausted"] = h.exhausted;
        if (!h.found) {
            j["found"] = nullptr;
            throw Finding{std::string("NONE; ") + std::to_string(h.candidates_tried) + " candidates tried" +
                              (h.exhausted ? "" : " (budget reached)") + '\n',
                          j};
        }
        j["found"] = class_json(*h.found);
        if (!dump_.empty()) write_class_file(dump_, *h.found);
        emit(out, format_class(*h.found), j);
        return kExitOk;
    });
    hunt->add_option("kind", kind_, "cornerless or intermediate")->required()->check(CLI::IsMember({"cornerless", "intermediate"}));
    hunt->add_option("--n", n_, "largest domain size")->capture_default_str();
    hunt->add_flag("--exhaustive", exhaustive_, "enumerate every extremal class (n <= 4)");
    hunt->add_flag("--no-symmetry", no_symmetry_, "check every class, not one per symmetry orbit");
    hunt->add_option("--samples", samples_, "random classes per size when not exhaustive")->capture_default_str();
    hunt->add_option("--inner", inner_, "C1: builtin name or class file");
    hunt->add_option("--outer", outer_, "C2: builtin name or class file");
    hunt->add_option("--budget", budget_, "candidate limit for intermediate")->capture_default_str();
    hunt->add_option("--dump", dump_, "write the found class here");

    auto* distance = add("distance", "one-inclusion graph distance", true, [this](std::ostream& out) {
        ConceptClass C = load(src_);
        Mask a = parse_bitstring(from_, C.dims());
        Mask b = parse_bitstring(to_, C.dims());
        auto dist = graph_distance(C, a, b);
        auto j = envelope("distance");
        j["from"] = from_;
        j["to"] = to_;
        j["distance"] = dist ? ordered_json(*dist) : ordered_json(nullptr);
        j["hamming"] = hamming_distance(a, b);
        emit(out, (dist ? std::to_string(*dist) : std::string("disconnected")) + '\n', j);
        return kExitOk;
    });
    distance->add_option("--from", from_, "concept bit string")->required();
    distance->add_option("--to", to_, "concept bit string")->required();

    add("edges", "one-inclusion graph as an edge list", true, [this](std::ostream& out) {
        ConceptClass C = load(src_);
        std::string text;
        ordered_json arr = ordered_json::array();
        for (const auto& e : one_inclusion_edges(C)) {
            std::string lo = to_bitstring(e.lo, C.dims()), hi = to_bitstring(e.hi, C.dims());
            text += lo + ' ' + hi + ' ' + C.domain().name(e.dim) + '\n';
            arr.push_back({{"lo", lo}, {"hi", hi}, {"dim", C.domain().name(e.dim)}});
        }
        auto j = envelope("edges");
        j["count"] = arr.size();
        j["edges"] = arr;
        emit(out, text, j);
        return kExitOk;
    });
}

int Runner::run(std::span<const std::string> args, std::ostream& out) {
    setup();
    std::vector<const char*> argv{"extremal"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app_.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app_.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app_.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err_ << "usage error: " << e.what() << '\n' << "run 'extremal --help' for usage\n";
        return kExitInputError;
    }

    CapGuard cap(g_.max_n);
    for (const auto& c : commands_) {
        if (!c.app->parsed()) continue;
        try {
            return c.action(out);
        } catch (const Finding& f) {
            emit(out, f.text, f.json);
            return kExitFinding;
        } catch (const Error& e) {
            err_ << "error: " << e.what() << '\n';
            return kExitInputError;
        } catch (const NoCornerFound& e) {
            err_ << "finding: " << e.what() << '\n' << format_class(e.remaining());
            return kExitFinding;
        } catch (const std::exception& e) {
            err_ << "internal error: " << e.what() << '\n';
            return kExitInternalError;
        }
    }
    return kExitInputError;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    Runner runner(err);
    return runner.run(args, out);
}

}  // namespace extremal::cli
