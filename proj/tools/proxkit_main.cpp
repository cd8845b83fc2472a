#include <chrono>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "proxkit/corpus.hpp"
#include "proxkit/dot.hpp"
#include "proxkit/errors.hpp"
#include "proxkit/exhaustive.hpp"
#include "proxkit/generate.hpp"
#include "proxkit/gleason.hpp"
#include "proxkit/io.hpp"
#include "proxkit/morphism.hpp"
#include "proxkit/report.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace proxkit;

struct Options {
    bool as_json = false;
    bool timing = false;
    std::string out;
};

void emit(const Report& report, const Options& opt) {
    std::string text = opt.as_json ? report.json_text(opt.timing) : report.text(opt.timing);
    std::cout << text;
    if (!opt.out.empty()) write_text_file(opt.out, text);
}

json point_members(const PriestleySpace& space) {
    json arr = json::array();
    for (const SmallSet& p : space.points) {
        json names = json::array();
        for (uint32_t a : p.indices()) names.push_back(space.source->name(a));
        arr.push_back(names);
    }
    return arr;
}

json pairs_json(const std::vector<std::pair<uint32_t, uint32_t>>& pairs) {
    json arr = json::array();
    for (auto [i, j] : pairs) arr.push_back({i, j});
    return arr;
}

// Lattice construction rendered as checks; returns nullptr when a law fails.
LatticePtr checked_lattice(const InstanceFile& f, Report& report, const std::string& label) {
    try {
        Poset p = poset_from_instance(f);
        report.add_check(label + ".order", CheckResult::ok());
        LatticePtr l = lattice_ptr_from_poset(p);
        report.add_check(label + ".bounds", CheckResult::ok());
        report.add_check(label + ".lattice", CheckResult::ok());
        report.add_check(label + ".distributive", CheckResult::ok());
        return l;
    } catch (const CycleError& e) {
        report.add_check(label + ".order", CheckResult::fail({}, e.what()));
    } catch (const NoBoundsError& e) {
        report.add_check(label + ".order", CheckResult::ok());
        report.add_check(label + ".bounds", CheckResult::fail({}, e.what()));
    } catch (const NotALatticeError& e) {
        report.add_check(label + ".order", CheckResult::ok());
        report.add_check(label + ".bounds", CheckResult::ok());
        report.add_check(label + ".lattice", CheckResult::fail({}, e.what()));
    } catch (const NotDistributiveError& e) {
        report.add_check(label + ".order", CheckResult::ok());
        report.add_check(label + ".bounds", CheckResult::ok());
        report.add_check(label + ".lattice", CheckResult::ok());
        report.add_check(label + ".distributive",
                         CheckResult::fail({e.witness[0], e.witness[1], e.witness[2]}, e.what()));
    }
    return nullptr;
}

// "leq" designates the order of the lattice itself.
Rel relation_argument(const std::string& arg, const Lattice& l) {
    if (arg == "leq") return l.poset().as_relation();
    InstanceFile f = load_instance(resolve_input(arg));
    return relation_from_instance(f, l.size());
}

void add_axiom_table(Report& report, const AxiomFlags& flags) {
    for (Axiom a : kAllAxioms) report.add_check(axiom_name(a), flags.get(a));
}

void add_gleason_table(Report& report, const GleasonFlags& flags) {
    report.add_check("item1.closed", flags.closed);
    report.add_check("item2.compat", flags.compat);
    report.add_check("item2p.contains-leq", flags.contains_leq);
    report.add_check("item3.preorder", flags.preorder);
    report.add_check("item4.saturation", flags.saturation);
}

int cmd_validate(const std::string& file, const std::string& rel_arg, const Options& opt) {
    auto start = std::chrono::steady_clock::now();
    Report report("validate");
    InstanceFile f = load_instance(resolve_input(file));
    report.add("input", file);
    report.add("kind", file_kind_name(f.kind));

    switch (f.kind) {
        case FileKind::Poset: {
            try {
                Poset p = poset_from_instance(f);
                report.add("elements", p.size());
                report.add_check("order", CheckResult::ok());
            } catch (const CycleError& e) {
                report.add_check("order", CheckResult::fail({}, e.what()));
            }
            break;
        }
        case FileKind::Lattice: {
            report.add("elements", f.elements.size());
            if (!rel_arg.empty()) report.add("relation", rel_arg);
            LatticePtr l = checked_lattice(f, report, "lattice");
            if (l && !rel_arg.empty()) {
                Rel rel = relation_argument(rel_arg, *l);
                add_axiom_table(report, check_all_axioms(*l, rel));
            }
            break;
        }
        case FileKind::Gleason: {
            GleasonSpace g = gleason_from_instance(f);
            report.add("points", g.size());
            add_gleason_table(report, check_gleason_axioms(g));
            break;
        }
        case FileKind::Relation:
        case FileKind::Morphism:
            throw ParseError(
                "validate a relation/morphism against its carriers: "
                "validate LATTICE RELATION or the morphism command");
    }

    auto stop = std::chrono::steady_clock::now();
    report.set_elapsed_ms(std::chrono::duration<double, std::milli>(stop - start).count());
    emit(report, opt);
    return report.exit_code();
}

int cmd_dualize(const std::string& lat_arg, const std::string& rel_arg, const Options& opt) {
    auto start = std::chrono::steady_clock::now();
    Report report("dualize");
    report.add("input", lat_arg);
    report.add("relation", rel_arg);

    InstanceFile f = load_instance(resolve_input(lat_arg));
    LatticePtr l = checked_lattice(f, report, "lattice");
    if (!l) {
        emit(report, opt);
        return report.exit_code();
    }

    Subordination s = make_subordination(l, relation_argument(rel_arg, *l));
    add_axiom_table(report, s.flags);
    if (!s.flags.is_subordination()) {
        report.add("dual", "skipped: S1-S4 do not hold");
        emit(report, opt);
        return report.exit_code();
    }

    GleasonSpace g = relation_from_subordination(s);
    report.add("points", g.size());
    report.add("point-filters", point_members(*g.space));
    report.add("R", pairs_json(g.r.pairs()));
    add_gleason_table(report, check_gleason_axioms(g));

    json out_doc;
    out_doc["kind"] = "gleason";
    out_doc["elements"] = g.order.names();
    out_doc["leq"] = pairs_json(g.order.as_relation().pairs());
    out_doc["R"] = pairs_json(g.r.pairs());
    out_doc["points"] = point_members(*g.space);

    if (g.r.preorder()) {
        QuotientPospace q = quotient(g);
        report.add("classes", q.size());
        json classes = json::array();
        for (const auto& members : q.classes) classes.push_back(members);
        report.add("class-members", classes);
        report.add("class-leq", pairs_json(q.order.as_relation().pairs()));
        out_doc["classes"] = classes;
        out_doc["class_leq"] = pairs_json(q.order.as_relation().pairs());
    } else {
        report.add("classes", "skipped: R is not a pre-order");
    }

    if (s.flags.is_proximity()) {
        std::vector<End> end_list = ends(s);
        report.add("ends", end_list.size());
        json ends_json = json::array();
        for (const End& p : end_list) {
            json names = json::array();
            for (uint32_t a : p.set.indices()) names.push_back(l->name(a));
            ends_json.push_back(names);
        }
        report.add("end-filters", ends_json);
        out_doc["ends"] = ends_json;

        SigmaReport sigma = sigma_check(g, s);
        report.add("sigma", sigma.sigma);
        report.add_check("sigma.well-defined", sigma.well_defined);
        report.add_check("sigma.bijective", sigma.bijective);
        report.add_check("sigma.order-iso", sigma.order_iso);
        report.add_check("sigma.minimal-witness", sigma.minimal_witness);
        report.add_check("sigma.subbase", sigma.subbase);
        out_doc["sigma"] = sigma.sigma;
    } else {
        report.add("sigma", "skipped: not a proximity frame");
    }

    auto stop = std::chrono::steady_clock::now();
    report.set_elapsed_ms(std::chrono::duration<double, std::milli>(stop - start).count());

    std::string text = opt.as_json ? report.json_text(opt.timing) : report.text(opt.timing);
    std::cout << text;
    if (!opt.out.empty()) write_text_file(opt.out, out_doc.dump(2) + "\n");
    return report.exit_code();
}

int cmd_morphism(const std::string& src_arg, const std::string& tgt_arg,
                 const std::string& map_arg, const std::string& srel_arg,
                 const std::string& trel_arg, const Options& opt) {
    Report report("morphism");
    report.add("source", src_arg);
    report.add("target", tgt_arg);
    report.add("map", map_arg);

    LatticePtr src = checked_lattice(load_instance(resolve_input(src_arg)), report, "source");
    LatticePtr tgt = checked_lattice(load_instance(resolve_input(tgt_arg)), report, "target");
    if (!src || !tgt) {
        emit(report, opt);
        return report.exit_code();
    }

    InstanceFile mf = load_instance(resolve_input(map_arg));
    if (mf.kind != FileKind::Morphism) throw ParseError("expected a morphism file");
    if (mf.map.size() != src->size()) throw ParseError("map table size does not match source");
    for (uint32_t v : mf.map)
        if (v >= tgt->size()) throw ParseError("map value out of range for target");
    HemiMorphism h{src, tgt, mf.map};

    Subordination s_src = make_subordination(src, relation_argument(srel_arg, *src));
    Subordination s_tgt = make_subordination(tgt, relation_argument(trel_arg, *tgt));
    report.add("source-subordination", s_src.flags.is_subordination());
    report.add("source-proximity", s_src.flags.is_proximity());
    report.add("target-subordination", s_tgt.flags.is_subordination());
    report.add("target-proximity", s_tgt.flags.is_proximity());

    CheckResult h0 = check_h(h, HAxiom::H0);
    report.add_check("H0", h0);
    if (!h0.pass) {
        emit(report, opt);
        return report.exit_code();
    }
    report.add_check("H1", check_h(h, HAxiom::H1, &s_src, &s_tgt));
    report.add_check("H2", check_h(h, HAxiom::H2, &s_src, &s_tgt));

    HemiRelation rho = relation_from_hemimorphism(h);
    report.add("rho", pairs_json(rho.rel.pairs()));
    report.add_check("condition1", rho.flags.c1);
    report.add_check("condition2", rho.flags.c2);
    report.add_check("condition3", rho.flags.c3);
    report.add_check("condition4", rho.flags.c4);

    if (s_src.flags.is_subordination() && s_tgt.flags.is_subordination()) {
        GleasonSpace g_src = relation_from_subordination(s_src);
        GleasonSpace g_tgt = relation_from_subordination(s_tgt);
        if (g_src.r.preorder() && g_tgt.r.preorder()) {
            report.add_check("ofc", check_ofc(rho, g_src, g_tgt));
            report.add_check("dvc", check_dvc(rho, g_src));
            if (rho.flags.strong() && check_ofc(rho, g_src, g_tgt).pass &&
                check_dvc(rho, g_src).pass) {
                XiMap xi = xi_map(rho, g_tgt, g_src);
                report.add("xi", xi.map);
            } else {
                report.add("xi", "skipped: conditions or ofc/dvc fail");
            }
        } else {
            report.add("ofc", "skipped: point relations are not pre-orders");
        }
    } else {
        report.add("ofc", "skipped: S1-S4 do not hold on both sides");
    }

    if (s_src.flags.is_proximity() && s_tgt.flags.is_proximity() &&
        check_h(h, HAxiom::H1, &s_src, &s_tgt).pass &&
        check_h(h, HAxiom::H2, &s_src, &s_tgt).pass) {
        report.add("ends-map", ends_map(h, s_src, s_tgt));
    } else {
        report.add("ends-map", "skipped: not a proximity morphism");
    }

    emit(report, opt);
    return report.exit_code();
}

int cmd_exhaust(const std::string& lat_arg, const std::string& check,
                const std::string& axioms_csv, uint64_t sample, uint64_t seed,
                uint32_t workers, const Options& opt) {
    Report report("exhaust");
    report.add("input", lat_arg);

    InstanceFile f = load_instance(resolve_input(lat_arg));
    LatticePtr l = checked_lattice(f, report, "lattice");
    if (!l) {
        emit(report, opt);
        return report.exit_code();
    }
    report.add("elements", l->size());

    bool exhaustive = l->size() <= kExhaustiveMaxElements;
    if (!exhaustive && sample == 0)
        throw SizeError("lattices above " + std::to_string(kExhaustiveMaxElements) +
                        " elements need --sample N");
    report.add("mode", exhaustive ? "exhaustive" : "sampled");
    if (!exhaustive) {
        report.add("sample", sample);
        report.add("seed", seed);
    }

    if (!check.empty()) {
        report.add("check", check);
        if (check == "collapse") {
            CollapseScanReport r =
                exhaustive ? collapse_scan(*l, workers) : collapse_sampled(*l, sample, seed);
            report.add("scanned", r.scanned);
            report.add("survivors", r.survivors);
            CheckResult verdict = CheckResult::ok();
            if (exhaustive && r.survivors != 1)
                verdict = CheckResult::fail({}, "expected exactly one S1-S5 relation");
            if (!r.only_leq)
                verdict = CheckResult::fail({}, "an S1-S5 relation differs from leq");
            report.add_check("collapse", verdict);
        } else if (check == "iff-s6" || check == "iff-s8") {
            BiconditionalScanReport r =
                check == "iff-s6"
                    ? (exhaustive ? iff_s6_scan(*l, workers) : iff_s6_sampled(*l, sample, seed))
                    : (exhaustive ? iff_s8_scan(*l, workers) : iff_s8_sampled(*l, sample, seed));
            report.add("scanned", r.scanned);
            report.add("subordinations", r.subordinations);
            report.add("counterexamples", r.counterexamples);
            report.add_check(check, r.pass() ? CheckResult::ok()
                                             : CheckResult::fail(r.first_failure->tuple,
                                                                 r.first_failure->detail));
        } else if (check == "lemma-correspondence") {
            CorrespondenceScanReport r = exhaustive
                                             ? lemma_correspondence_scan(*l, workers)
                                             : lemma_correspondence_sampled(*l, sample, seed);
            report.add("scanned", r.scanned);
            report.add("subordinations", r.subordinations);
            report.add("failures", r.failures);
            report.add_check("lemma-correspondence",
                             r.pass() ? CheckResult::ok()
                                      : CheckResult::fail(r.first_failure->tuple,
                                                          r.first_failure->detail));
        } else {
            throw ParseError("unknown --check '" + check +
                             "' (collapse, iff-s6, iff-s8, lemma-correspondence)");
        }
        emit(report, opt);
        return report.exit_code();
    }

    // Axiom-set streaming mode.
    std::vector<Axiom> axioms;
    std::stringstream ss(axioms_csv);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        auto a = axiom_from_name(token);
        if (!a) {
            if (token == "S7")
                throw ParseError("there is no axiom S7; the numbering skips it");
            throw ParseError("unknown axiom '" + token + "'");
        }
        axioms.push_back(*a);
    }
    if (axioms.empty()) throw ParseError("exhaust needs --check NAME or --axioms LIST");
    if (!exhaustive) throw SizeError("--axioms streaming requires an exhaustive-size lattice");

    std::vector<uint64_t> masks = relations_satisfying(*l, axioms, workers);
    report.add("scanned", uint64_t{1} << (l->size() * l->size()));
    report.add("count", masks.size());
    json rels = json::array();
    for (uint64_t m : masks)
        rels.push_back(pairs_json(Rel::from_mask(l->size(), m).pairs()).dump());
    report.add("relations", rels);
    emit(report, opt);
    return report.exit_code();
}

int cmd_generate(uint32_t poset_n, bool have_poset, const std::string& sub_arg, uint64_t seed,
                 const Options& opt) {
    std::string text;
    if (have_poset) {
        text = poset_to_json(random_poset(poset_n, seed));
    } else {
        InstanceFile f = load_instance(resolve_input(sub_arg));
        LatticePtr l = lattice_from_instance(f);
        text = relation_to_json(random_subordination(l, seed).rel);
    }
    if (!opt.out.empty())
        write_text_file(opt.out, text);
    else
        std::cout << text;
    return 0;
}

int cmd_dot(const std::string& file, const Options& opt) {
    InstanceFile f = load_instance(resolve_input(file));
    std::string text;
    switch (f.kind) {
        case FileKind::Poset:
            text = dot_poset(poset_from_instance(f));
            break;
        case FileKind::Lattice:
            text = dot_poset(lattice_from_instance(f)->poset(), "lattice");
            break;
        case FileKind::Gleason:
            text = dot_gleason(gleason_from_instance(f));
            break;
        default:
            throw ParseError("dot supports poset, lattice and gleason files");
    }
    if (!opt.out.empty())
        write_text_file(opt.out, text);
    else
        std::cout << text;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for subordinations and duality on finite distributive lattices"};
    app.require_subcommand(1);

    Options opt;

    auto* validate = app.add_subcommand("validate", "check a lattice/poset/relation/gleason file");
    std::string v_file, v_rel;
    validate->add_option("file", v_file, "instance file or fixture name")->required();
    validate->add_option("relation", v_rel, "relation file or 'leq'");
    validate->add_flag("--json", opt.as_json, "emit a JSON report");
    validate->add_flag("--timing", opt.timing, "include wall-clock timing");
    validate->add_option("--out", opt.out, "also write the report here");

    auto* dualize = app.add_subcommand("dualize", "compute the dual space, quotient and ends");
    std::string d_lat, d_rel = "leq";
    dualize->add_option("lattice", d_lat, "lattice file or fixture name")->required();
    dualize->add_option("relation", d_rel, "relation file or 'leq'");
    dualize->add_flag("--json", opt.as_json, "emit a JSON report");
    dualize->add_flag("--timing", opt.timing, "include wall-clock timing");
    dualize->add_option("--out", opt.out, "write the dual as a gleason file");

    auto* morphism = app.add_subcommand("morphism", "full diagnostic of an element map");
    std::string m_src, m_tgt, m_map, m_srel = "leq", m_trel = "leq";
    morphism->add_option("source", m_src)->required();
    morphism->add_option("target", m_tgt)->required();
    morphism->add_option("map", m_map)->required();
    morphism->add_option("source-relation", m_srel, "relation file or 'leq'");
    morphism->add_option("target-relation", m_trel, "relation file or 'leq'");
    morphism->add_flag("--json", opt.as_json, "emit a JSON report");
    morphism->add_flag("--timing", opt.timing, "include wall-clock timing");
    morphism->add_option("--out", opt.out, "also write the report here");

    auto* exhaust = app.add_subcommand("exhaust", "scan the relation space of a small lattice");
    std::string e_lat, e_check, e_axioms;
    uint64_t e_sample = 0, e_seed = 0;
    uint32_t e_workers = 1;
    exhaust->add_option("lattice", e_lat)->required();
    exhaust->add_option("--check", e_check, "collapse | iff-s6 | iff-s8 | lemma-correspondence");
    exhaust->add_option("--axioms", e_axioms, "comma-separated axiom list, e.g. S1,S2,S3,S4");
    exhaust->add_option("--sample", e_sample, "sample size for lattices above the scan cap");
    exhaust->add_option("--seed", e_seed, "sampling seed");
    exhaust->add_option("--workers", e_workers, "worker threads for the scan");
    exhaust->add_flag("--json", opt.as_json, "emit a JSON report");
    exhaust->add_option("--out", opt.out, "also write the report here");

    auto* generate = app.add_subcommand("generate", "seeded random instances");
    uint32_t g_poset = 0;
    std::string g_sub;
    uint64_t g_seed = 0;
    auto* g_poset_opt = generate->add_option("--poset", g_poset, "random poset on N points");
    auto* g_sub_opt =
        generate->add_option("--subordination", g_sub, "random S1-S4 relation on a lattice");
    generate->add_option("--seed", g_seed, "generator seed");
    generate->add_option("--out", opt.out, "write the instance here");
    g_poset_opt->excludes(g_sub_opt);

    auto* dot = app.add_subcommand("dot", "Graphviz export");
    std::string dot_file;
    dot->add_option("file", dot_file)->required();
    dot->add_option("--out", opt.out, "write the DOT text here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (validate->parsed()) return cmd_validate(v_file, v_rel, opt);
        if (dualize->parsed()) return cmd_dualize(d_lat, d_rel, opt);
        if (morphism->parsed())
            return cmd_morphism(m_src, m_tgt, m_map, m_srel, m_trel, opt);
        if (exhaust->parsed())
            return cmd_exhaust(e_lat, e_check, e_axioms, e_sample, e_seed, e_workers, opt);
        if (generate->parsed()) {
            if (!g_poset_opt->count() && !g_sub_opt->count())
                throw ParseError("generate needs --poset N or --subordination LATTICE");
            return cmd_generate(g_poset, g_poset_opt->count() > 0, g_sub, g_seed, opt);
        }
        if (dot->parsed()) return cmd_dot(dot_file, opt);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SizeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
