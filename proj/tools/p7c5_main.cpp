// p7c5 command line: recognition, structure verification, and certified
// coloring for graphs without long induced paths and 5-holes.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "p7c5/batch.hpp"
#include "p7c5/coloring.hpp"
#include "p7c5/decompose.hpp"
#include "p7c5/families.hpp"
#include "p7c5/graph_io.hpp"
#include "p7c5/hole_structure.hpp"
#include "p7c5/isomorphism.hpp"
#include "p7c5/patterns.hpp"
#include "p7c5/theorems.hpp"

using nlohmann::json;
using namespace p7c5;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_violation = 1;
constexpr int exit_input = 2;
constexpr int exit_size = 3;

struct Options {
    std::string format = "g6";
    int limit_exact = default_exact_limit;
    int jobs = 1;
    unsigned long seed = 0; // accepted for interface stability; commands here are deterministic
};

std::vector<GraphRecord> load(const std::string& file, const Options& opt) {
    StreamFormat fmt;
    if (opt.format == "g6")
        fmt = StreamFormat::graph6;
    else if (opt.format == "edges")
        fmt = StreamFormat::edgelist;
    else
        throw input_error("unknown --format value: " + opt.format);
    if (file == "-") return read_graph_stream(std::cin, fmt, "<stdin>");
    std::ifstream in(file);
    if (!in) throw input_error("cannot open " + file);
    return read_graph_stream(in, fmt, file);
}

json embedding_json(const Embedding& e) {
    return json{{"pattern", e.pattern.name()}, {"vertices", e.image}};
}

json classify_one(const Graph& g) {
    json out;
    json classes;
    for (GraphClass c :
         {GraphClass::kp, GraphClass::diamond, GraphClass::paw, GraphClass::bull}) {
        auto m = class_membership(g, c);
        json entry{{"member", m.member}};
        if (m.witness) entry["witness"] = embedding_json(*m.witness);
        classes[class_name(c)] = entry;
    }
    out["classes"] = classes;
    if (auto spec = classify_family(g)) {
        json fam{{"id", family_name(spec->id)}};
        if (spec->id == FamilyId::f9) {
            fam["t1"] = spec->t1;
            fam["t2"] = spec->t2;
        } else if (spec->id == FamilyId::f10 || spec->id == FamilyId::f11) {
            fam["t1"] = spec->t1;
        }
        out["family"] = fam;
    } else {
        out["family"] = nullptr;
    }
    auto tq = twin_quotient(g);
    if (tq.quotient.vertex_count() == 7 && are_isomorphic(tq.quotient, Graph::cycle(7))) {
        std::vector<int> sizes;
        for (const auto& cls : tq.classes) sizes.push_back(cls.count());
        out["blowup"] = json{{"mode", "stable"}, {"sizes", canonical_blowup_sizes(sizes)}};
    } else {
        auto ttq = true_twin_quotient(g);
        if (ttq.quotient.vertex_count() == 7 && are_isomorphic(ttq.quotient, Graph::cycle(7)) &&
            g.vertex_count() > 7) {
            std::vector<int> sizes;
            for (const auto& cls : ttq.classes) sizes.push_back(cls.count());
            out["blowup"] = json{{"mode", "clique"}, {"sizes", canonical_blowup_sizes(sizes)}};
        } else {
            out["blowup"] = nullptr;
        }
    }
    return out;
}

json verdict_json(const TheoremVerdict& v) {
    json out;
    out["theorem"] = class_name(v.theorem);
    json hyps = json::array();
    for (const auto& h : v.hypotheses)
        hyps.push_back(json{{"name", h.name}, {"evaluated", h.evaluated}, {"holds", h.holds}});
    out["hypotheses"] = hyps;
    out["hypotheses_hold"] = v.hypotheses_hold;
    if (v.conclusion_holds)
        out["conclusion_holds"] = *v.conclusion_holds;
    else
        out["conclusion_holds"] = nullptr;
    out["certificate"] = v.certificate;
    if (v.family) out["family"] = v.family->to_string();
    if (v.blowup_sizes) out["blowup_sizes"] = *v.blowup_sizes;
    if (v.universal_clique) out["universal_clique"] = v.universal_clique->to_vector();
    return out;
}

std::string trace_summary(const ReductionTrace& trace) {
    std::ostringstream out;
    for (const auto& step : trace) {
        switch (step.kind) {
        case ReductionStep::Kind::remove_comparable:
            out << "remove-comparable " << step.payload[0] << "<=" << step.payload[1];
            break;
        case ReductionStep::Kind::extract_universal_clique:
            out << "peel-universal-clique[" << step.payload.size() << "]";
            break;
        case ReductionStep::Kind::split_clique_cutset:
            out << "split-cutset[" << step.payload.size() << "]";
            break;
        case ReductionStep::Kind::split_components: out << "split-components"; break;
        case ReductionStep::Kind::remove_low_degree:
            out << "set-aside-low-degree " << step.payload[0];
            break;
        case ReductionStep::Kind::contract_homogeneous:
            out << "contract-homogeneous[" << step.payload.size() << "]";
            break;
        case ReductionStep::Kind::base_perfect:
            out << "perfect-base[" << step.payload.size() << "]";
            break;
        case ReductionStep::Kind::base_family: out << "family-base " << step.label; break;
        case ReductionStep::Kind::base_blowup: out << "blowup-base " << step.label; break;
        }
        out << "; ";
    }
    return out.str();
}

int cmd_classify(const std::string& file, const Options& opt) {
    auto records = load(file, opt);
    auto lines = batch_map<std::string>((int)records.size(), opt.jobs, [&](int i) {
        json out = classify_one(records[i].graph);
        out["index"] = i;
        out["source"] = records[i].source;
        return out.dump();
    });
    for (const auto& line : lines) std::cout << line << '\n';
    return exit_ok;
}

int cmd_detect(const std::string& file, const std::string& pattern_name, const Options& opt) {
    Pattern p = Pattern::from_name(pattern_name);
    auto records = load(file, opt);
    auto lines = batch_map<std::string>((int)records.size(), opt.jobs, [&](int i) {
        auto hit = find_induced(records[i].graph, p);
        json out{{"index", i}, {"pattern", p.name()}};
        if (hit)
            out["witness"] = hit->image;
        else
            out["witness"] = nullptr;
        return out.dump();
    });
    for (const auto& line : lines) std::cout << line << '\n';
    return exit_ok;
}

int cmd_verify(const std::string& file, const std::string& theorem, const Options& opt) {
    GraphClass cls = class_from_name(theorem);
    auto records = load(file, opt);
    auto verdicts = batch_map<TheoremVerdict>((int)records.size(), opt.jobs, [&](int i) {
        if (cls == GraphClass::bull) return verify_perfect_divisibility(records[i].graph);
        return verify_structure(records[i].graph, cls);
    });
    bool violation = false;
    for (size_t i = 0; i < verdicts.size(); ++i) {
        json out = verdict_json(verdicts[i]);
        out["index"] = i;
        out["source"] = records[i].source;
        std::cout << out.dump() << '\n';
        if (verdicts[i].hypotheses_hold && verdicts[i].conclusion_holds &&
            !*verdicts[i].conclusion_holds)
            violation = true;
    }
    return violation ? exit_violation : exit_ok;
}

int cmd_color(const std::string& file, const std::string& cls_name, bool dot, const Options& opt) {
    GraphClass cls = class_from_name(cls_name);
    auto records = load(file, opt);
    bool violation = false;
    struct Result {
        Coloring coloring;
        int omega;
    };
    auto results = batch_map<Result>((int)records.size(), opt.jobs, [&](int i) {
        const Graph& g = records[i].graph;
        Coloring c = cls == GraphClass::bull ? divisible_color(g)
                                             : structural_color(g, cls, opt.limit_exact);
        return Result{std::move(c), max_clique(g).omega};
    });
    for (size_t i = 0; i < results.size(); ++i) {
        const Graph& g = records[i].graph;
        const Coloring& c = results[i].coloring;
        int bound = class_color_bound(cls, results[i].omega);
        if (dot) {
            std::cout << emit_dot(g, &c.assignment);
        } else {
            std::cout << "# graph " << i << " (" << records[i].source << "): colors="
                      << c.colors_used << " omega=" << results[i].omega << " bound=" << bound
                      << (c.colors_used <= bound ? "" : " BOUND-VIOLATION") << '\n';
            for (int v = 0; v < g.vertex_count(); ++v)
                std::cout << v << ':' << c.assignment[v] << '\n';
            std::cout << "# trace: " << trace_summary(c.trace) << '\n';
        }
        if (c.colors_used > bound) violation = true;
    }
    return violation ? exit_violation : exit_ok;
}

void print_attachment(const Graph& g, const HoleTuple& hole, bool& any_violation) {
    auto att = compute_attachments(g, hole);
    std::cout << "hole:";
    for (int v : hole) std::cout << ' ' << v;
    std::cout << '\n';
    auto print_set = [&](const std::string& name, const VertexSet& s) {
        if (s.empty()) return;
        std::cout << name << ':';
        s.for_each([&](int v) { std::cout << ' ' << v; });
        std::cout << '\n';
    };
    for (int i = 1; i <= 7; ++i) print_set("A" + std::to_string(i), att.a[i]);
    for (int i = 1; i <= 7; ++i) print_set("B" + std::to_string(i), att.b[i]);
    for (int i = 1; i <= 7; ++i) print_set("Bb" + std::to_string(i), att.bbar[i]);
    for (int i = 1; i <= 7; ++i) print_set("D" + std::to_string(i), att.d[i]);
    print_set("I", att.inner);
    print_set("R", att.far);
    print_set("spill", att.spill);
    if (!att.spill.empty()) any_violation = true;
    auto violations = check_m_properties(g, att);
    for (const auto& viol : violations) {
        std::cout << viol.to_line() << '\n';
        any_violation = true;
    }
    if (violations.empty() && att.spill.empty()) std::cout << "ok: no violations\n";
}

int cmd_attach(const std::string& file, bool all_holes, const Options& opt) {
    auto records = load(file, opt);
    bool any_violation = false;
    for (size_t i = 0; i < records.size(); ++i) {
        std::cout << "# graph " << i << " (" << records[i].source << ")\n";
        if (all_holes) {
            auto holes = enumerate_seven_holes(records[i].graph);
            if (holes.empty()) std::cout << "no seven-hole\n";
            for (const auto& hole : holes) print_attachment(records[i].graph, hole, any_violation);
        } else {
            auto hole = find_seven_hole(records[i].graph);
            if (!hole) {
                std::cout << "no seven-hole\n";
                continue;
            }
            print_attachment(records[i].graph, *hole, any_violation);
        }
    }
    return any_violation ? exit_violation : exit_ok;
}

int cmd_generate(const std::string& family, int t1, int t2, const std::string& blowup, bool clique,
                 const std::string& counterexample, const std::string& out_format) {
    Graph g;
    if (!family.empty()) {
        FamilySpec spec{family_from_name(family), 0, 0};
        if (spec.id == FamilyId::f9) spec = {spec.id, t1 ? t1 : 1, t2 ? t2 : 1};
        else if (spec.id == FamilyId::f10 || spec.id == FamilyId::f11)
            spec = {spec.id, t1 ? t1 : 1, 0};
        g = generate_family(spec);
    } else if (!blowup.empty()) {
        BlowupSpec spec;
        spec.clique = clique;
        std::istringstream in(blowup);
        std::string item;
        int idx = 0;
        while (std::getline(in, item, ',')) {
            if (idx >= 7) throw input_error("blowup takes exactly 7 sizes");
            spec.sizes[idx++] = std::stoi(item);
        }
        if (idx != 7) throw input_error("blowup takes exactly 7 sizes");
        g = generate_blowup(spec);
    } else if (!counterexample.empty()) {
        g = generate_counterexample(counterexample, t1 ? t1 : 2);
    } else {
        throw input_error("generate needs --family, --blowup, or --counterexample");
    }
    if (out_format == "edges")
        std::cout << emit_edgelist(g);
    else
        std::cout << emit_graph6(g) << '\n';
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"structure, recognition and certified coloring around 7-holes"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "input format: g6 or edges")->capture_default_str();
    app.add_option("--limit-exact", opt.limit_exact, "exact-coloring size cap")
        ->capture_default_str();
    app.add_option("--jobs", opt.jobs, "worker threads for per-graph analysis")
        ->capture_default_str();
    app.add_option("--seed", opt.seed, "seed for sampling commands");

    std::string file, pattern, theorem, cls, family, blowup, counterexample;
    int t1 = 0, t2 = 0;
    bool clique = false, dot = false, all_holes = false;

    auto* c_classify = app.add_subcommand("classify", "class membership, family, blowup per graph");
    c_classify->fallthrough();
    c_classify->add_option("file", file, "input file or -")->required();

    auto* c_detect = app.add_subcommand("detect", "find one induced pattern occurrence");
    c_detect->fallthrough();
    c_detect->add_option("file", file)->required();
    c_detect->add_option("--pattern", pattern, "p7|c5|diamond|kite|paraglider|paw|gem|bull|odd-hole|odd-antihole")
        ->required();

    auto* c_verify = app.add_subcommand("verify", "run a structure statement as a checker");
    c_verify->fallthrough();
    c_verify->add_option("file", file)->required();
    c_verify->add_option("--theorem", theorem, "kp|diamond|paw|bull")->required();

    auto* c_color = app.add_subcommand("color", "certified coloring against the class bound");
    c_color->fallthrough();
    c_color->add_option("file", file)->required();
    c_color->add_option("--class", cls, "kp|diamond|paw|bull")->required();
    c_color->add_flag("--dot", dot, "emit Graphviz with fill colors");

    auto* c_attach = app.add_subcommand("attach", "7-hole attachment partition and its checks");
    c_attach->fallthrough();
    c_attach->add_option("file", file)->required();
    c_attach->add_flag("--all-holes", all_holes, "analyze every 7-hole, not just the first");

    auto* c_generate = app.add_subcommand("generate", "emit a named graph");
    c_generate->fallthrough();
    c_generate->add_option("--family", family, "f1..f12");
    c_generate->add_option("--t1", t1, "first stable-set size");
    c_generate->add_option("--t2", t2, "second stable-set size (f9)");
    c_generate->add_option("--blowup", blowup, "7 comma-separated bag sizes");
    c_generate->add_flag("--clique", clique, "bags are cliques");
    c_generate->add_option("--counterexample", counterexample, "g1|g2|g3|g4 (g3 uses --t1)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_classify->parsed()) return cmd_classify(file, opt);
        if (c_detect->parsed()) return cmd_detect(file, pattern, opt);
        if (c_verify->parsed()) return cmd_verify(file, theorem, opt);
        if (c_color->parsed()) return cmd_color(file, cls, dot, opt);
        if (c_attach->parsed()) return cmd_attach(file, all_holes, opt);
        if (c_generate->parsed())
            return cmd_generate(family, t1, t2, blowup, clique, counterexample, opt.format);
    } catch (const size_limit_error& e) {
        std::cerr << "size limit: " << e.what() << '\n';
        return exit_size;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return exit_input;
    } catch (const structure_error& e) {
        std::cerr << "structure violation: " << e.what() << '\n';
        return exit_violation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    }
    return exit_ok;
}
