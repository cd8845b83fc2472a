// Acceptance suite: runs every top-level criterion at its stated tolerance
// and prints one pass/fail line each. Usage:
//   acceptance_tests <proxkit-binary> <fixture-dir>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "proxkit/corpus.hpp"
#include "proxkit/errors.hpp"
#include "proxkit/exhaustive.hpp"
#include "proxkit/morphism.hpp"
#include "proxkit/pospace.hpp"

using namespace proxkit;

namespace {

std::string g_binary;
std::string g_fixtures;

struct RunResult {
    int exit_code = -1;
    std::string out;
    double ms = 0;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = "PROXKIT_CORPUS=" + g_fixtures + " " + g_binary + " " + args + " 2>&1";
    auto start = std::chrono::steady_clock::now();
    FILE* pipe = popen(cmd.c_str(), "r");
    RunResult r;
    if (!pipe) return r;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
               .count();
    return r;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

std::vector<LatticePtr> scan_corpus() {
    return {chain_lattice(1), chain_lattice(2), chain_lattice(3), chain_lattice(4),
            boolean_lattice(2)};
}

// Criterion 1: the S1-S5 collapse, through the CLI, under five seconds.
bool collapse_corollary(std::string& detail) {
    struct Case {
        const char* name;
        uint64_t expected;
    };
    for (const Case c : {Case{"C3", 512}, Case{"B2", 65536}}) {
        RunResult r = run_cli(std::string("exhaust ") + c.name + " --check collapse");
        if (r.exit_code != 0 || !contains(r.out, "scanned: " + std::to_string(c.expected)) ||
            !contains(r.out, "survivors: 1")) {
            detail = std::string(c.name) + ": unexpected report (exit " +
                     std::to_string(r.exit_code) + ")";
            return false;
        }
        if (r.ms >= 5000) {
            detail = std::string(c.name) + " took " + std::to_string(r.ms) + " ms";
            return false;
        }
    }
    detail = "512 and 65536 relations scanned, one survivor each, < 5 s";
    return true;
}

// Criterion 2: a prec b iff R[eta(a),-] <= eta(b) for every S1-S4 relation
// on every lattice with at most 4 elements.
bool correspondence_lemma(std::string& detail) {
    uint64_t total = 0;
    for (const LatticePtr& l : scan_corpus()) {
        CorrespondenceScanReport r = lemma_correspondence_scan(*l);
        if (r.failures != 0) {
            detail = "counterexample on a " + std::to_string(l->size()) + "-element lattice";
            return false;
        }
        total += r.subordinations;
    }
    detail = std::to_string(total) + " subordinations checked, zero counterexamples";
    return true;
}

// Criterion 3: R reflexive iff S6, R transitive iff S8, same corpora.
bool reflexivity_transitivity(std::string& detail) {
    uint64_t total = 0;
    for (const LatticePtr& l : scan_corpus()) {
        BiconditionalScanReport s6 = iff_s6_scan(*l);
        BiconditionalScanReport s8 = iff_s8_scan(*l);
        if (s6.counterexamples != 0 || s8.counterexamples != 0) {
            detail = "biconditional fails on a " + std::to_string(l->size()) +
                     "-element lattice";
            return false;
        }
        total += s6.subordinations;
    }
    detail = std::to_string(total) + " subordinations checked, zero counterexamples";
    return true;
}

// Criterion 4: sigma is an isomorphism (with the subbase identity) for every
// proximity instance induced by the fixture corpus.
bool sigma_isomorphism(std::string& detail) {
    uint32_t checked = 0;
    for (const auto& [name, l] : corpus_lattices()) {
        Subordination s = leq_subordination(l);
        SigmaReport r = sigma_check(relation_from_subordination(s), s);
        if (!r.pass) {
            detail = "sigma fails on " + name;
            return false;
        }
        ++checked;
    }
    detail = std::to_string(checked) + " proximity instances pass, subbase identity included";
    return true;
}

// Criterion 5: phi and phi_inverse invert each other on all round filters and
// all nonempty R-increasing point sets.
bool phi_bijection(std::string& detail) {
    uint64_t filters = 0, sets = 0;
    for (const auto& [name, l] : corpus_lattices()) {
        Subordination s = leq_subordination(l);
        GleasonSpace g = relation_from_subordination(s);
        for (const RoundFilter& f : round_filters(s)) {
            ++filters;
            if (!(phi_inverse(g, phi(g, f)).set == f.set)) {
                detail = "phi_inverse(phi(F)) != F on " + name;
                return false;
            }
        }
        for (uint64_t mask = 1; mask < (uint64_t{1} << g.size()); ++mask) {
            SmallSet c(g.size(), mask);
            if (!r_image(g, c).subset_of(c)) continue;
            ++sets;
            if (!(phi(g, phi_inverse(g, c)) == c)) {
                detail = "phi(phi_inverse(C)) != C on " + name;
                return false;
            }
        }
    }
    detail = std::to_string(filters) + " round filters and " + std::to_string(sets) +
             " R-increasing sets round-trip";
    return true;
}

// Criterion 6: H1 iff ofc and H2 iff dvc across every enumerated H0 map, and
// the h <-> rho transforms invert each other.
bool morphism_equivalences(std::string& detail) {
    std::vector<std::pair<LatticePtr, LatticePtr>> pairs = {
        {chain_lattice(2), chain_lattice(2)},   {chain_lattice(2), chain_lattice(3)},
        {chain_lattice(3), chain_lattice(2)},   {chain_lattice(3), chain_lattice(3)},
        {boolean_lattice(2), chain_lattice(2)}, {chain_lattice(2), boolean_lattice(2)},
        {boolean_lattice(2), boolean_lattice(2)}, {boolean_lattice(2), chain_lattice(3)},
        {chain_lattice(3), boolean_lattice(2)}, {chain_lattice(4), chain_lattice(4)},
        {chain_lattice(4), boolean_lattice(2)}, {boolean_lattice(2), chain_lattice(4)},
    };
    uint64_t maps = 0;
    for (auto& [a, b] : pairs) {
        Subordination sa = leq_subordination(a);
        Subordination sb = leq_subordination(b);
        GleasonSpace ga = relation_from_subordination(sa);
        GleasonSpace gb = relation_from_subordination(sb);
        for (const HemiMorphism& h : enumerate_strong_meet_hemimorphisms(a, b)) {
            ++maps;
            HemiRelation rho = relation_from_hemimorphism(h);
            bool h1 = check_h(h, HAxiom::H1, &sa, &sb).pass;
            bool h2 = check_h(h, HAxiom::H2, &sa, &sb).pass;
            if (h1 != check_ofc(rho, ga, gb).pass) {
                detail = "H1/ofc discrepancy";
                return false;
            }
            if (h2 != check_dvc(rho, ga).pass) {
                detail = "H2/dvc discrepancy";
                return false;
            }
            if (!(hemimorphism_from_relation(rho).map == h.map)) {
                detail = "h -> rho -> h is not the identity";
                return false;
            }
        }
    }
    detail = std::to_string(maps) + " H0 maps over " + std::to_string(pairs.size()) +
             " lattice pairs, zero discrepancies";
    return true;
}

// Criterion 7: the star calculus is associative with neutral identities and
// transports to hemirelations functorially.
bool star_calculus(std::string& detail) {
    std::vector<LatticePtr> ls = {chain_lattice(2), chain_lattice(3), boolean_lattice(2)};
    std::vector<Subordination> subs;
    for (const LatticePtr& l : ls) subs.push_back(leq_subordination(l));
    std::vector<GleasonSpace> gs;
    for (const Subordination& s : subs) gs.push_back(relation_from_subordination(s));

    auto morphisms = [&](size_t i, size_t j) {
        std::vector<HemiMorphism> out;
        for (HemiMorphism& h : enumerate_strong_meet_hemimorphisms(ls[i], ls[j]))
            if (check_h(h, HAxiom::H1, &subs[i], &subs[j]).pass &&
                check_h(h, HAxiom::H2, &subs[i], &subs[j]).pass)
                out.push_back(std::move(h));
        return out;
    };

    uint64_t triples = 0, pairs = 0;
    for (size_t i = 0; i < ls.size(); ++i)
        for (size_t j = 0; j < ls.size(); ++j)
            for (size_t k = 0; k < ls.size(); ++k) {
                auto hij = morphisms(i, j);
                auto hjk = morphisms(j, k);
                for (const HemiMorphism& h1 : hij)
                    for (const HemiMorphism& h2 : hjk) {
                        ++pairs;
                        // Identity neutrality on each side.
                        std::vector<uint32_t> idt(ls[i]->size());
                        for (uint32_t t = 0; t < ls[i]->size(); ++t) idt[t] = t;
                        HemiMorphism idi{ls[i], ls[i], idt};
                        if (!(star(idi, h1, subs[i], subs[i], subs[j]).map == h1.map)) {
                            detail = "left identity fails";
                            return false;
                        }
                        // Relation transport.
                        HemiRelation lhs =
                            relation_from_hemimorphism(star(h1, h2, subs[i], subs[j], subs[k]));
                        HemiRelation rhs = compose_hemirelations(
                            relation_from_hemimorphism(h1), relation_from_hemimorphism(h2),
                            subs[i], subs[j], subs[k]);
                        if (!(lhs.rel == rhs.rel)) {
                            detail = "relation transport fails";
                            return false;
                        }
                        // xi functoriality.
                        XiMap x1 = xi_map(relation_from_hemimorphism(h1), gs[j], gs[i]);
                        XiMap x2 = xi_map(relation_from_hemimorphism(h2), gs[k], gs[j]);
                        XiMap xc = xi_map(lhs, gs[k], gs[i]);
                        for (uint32_t c = 0; c < xc.row_quotient.size(); ++c)
                            if (xc.map[c] != x1.map[x2.map[c]]) {
                                detail = "xi functoriality fails";
                                return false;
                            }
                        // Associativity over every extension to a triple.
                        for (size_t m = 0; m < ls.size(); ++m)
                            for (const HemiMorphism& h3 : morphisms(k, m)) {
                                ++triples;
                                HemiMorphism left =
                                    star(star(h1, h2, subs[i], subs[j], subs[k]), h3, subs[i],
                                         subs[k], subs[m]);
                                HemiMorphism right =
                                    star(h1, star(h2, h3, subs[j], subs[k], subs[m]), subs[i],
                                         subs[j], subs[m]);
                                if (!(left.map == right.map)) {
                                    detail = "associativity fails";
                                    return false;
                                }
                            }
                    }
            }
    detail = std::to_string(pairs) + " composable pairs and " + std::to_string(triples) +
             " triples pass";
    return true;
}

// Criterion 8: ends(omega(P)) is order-isomorphic to P for every poset on up
// to 3 points and all chains to length 4.
bool pospace_roundtrip(std::string& detail) {
    uint64_t checked = 0;
    for (uint32_t n = 0; n <= 3; ++n)
        for (const Poset& p : all_posets(n)) {
            if (!roundtrip_pospace(p).pass) {
                detail = "roundtrip fails on a " + std::to_string(n) + "-point poset";
                return false;
            }
            ++checked;
        }
    for (uint32_t n = 1; n <= 4; ++n) {
        if (!roundtrip_pospace(chain_poset(n)).pass) {
            detail = "roundtrip fails on the " + std::to_string(n) + "-chain";
            return false;
        }
        ++checked;
    }
    detail = std::to_string(checked) + " pospaces reproduced from their ends";
    return true;
}

// Criterion 9: the negative paths reject with the expected witnesses.
bool negative_paths(std::string& detail) {
    try {
        lattice_from_poset(m3_poset());
        detail = "M3 accepted";
        return false;
    } catch (const NotDistributiveError& e) {
        if (!(e.witness == std::array<int, 3>{1, 2, 3})) {
            detail = "M3 witness is not (x,y,z)";
            return false;
        }
    }
    try {
        lattice_from_poset(n5_poset());
        detail = "N5 accepted";
        return false;
    } catch (const NotDistributiveError&) {
    }

    HemiMorphism jb{boolean_lattice(2), chain_lattice(2), {0, 0, 0, 1}};
    Subordination sa = leq_subordination(jb.source);
    Subordination sb = leq_subordination(jb.target);
    CheckResult h1 = check_h(jb, HAxiom::H1, &sa, &sb);
    HemiRelation rho = relation_from_hemimorphism(jb);
    CheckResult ofc = check_ofc(rho, relation_from_subordination(sa),
                                relation_from_subordination(sb));
    if (h1.pass || ofc.pass) {
        detail = "join-breaking map not rejected";
        return false;
    }
    if (!(h1.witness == std::vector<int>{1, 2, 1, 2}) ||
        !(ofc.witness == std::vector<int>{0, 0, 0, 1})) {
        detail = "unexpected witnesses";
        return false;
    }
    detail = "M3/N5 rejected with witness triples; H1 and ofc fail together";
    return true;
}

// Criterion 10: identical inputs give byte-identical reports across runs and
// worker counts.
bool determinism(std::string& detail) {
    for (const std::string& cmd :
         {std::string("dualize C3 leq"), std::string("dualize B2 b2_prec0.json --json"),
          std::string("generate --poset 5 --seed 3"), std::string("validate b3 leq")}) {
        RunResult a = run_cli(cmd);
        RunResult b = run_cli(cmd);
        if (a.out != b.out) {
            detail = "output differs across runs for: " + cmd;
            return false;
        }
    }
    RunResult w1 = run_cli("exhaust B2 --check lemma-correspondence --workers 1");
    RunResult w4 = run_cli("exhaust B2 --check lemma-correspondence --workers 4");
    if (w1.out != w4.out || w1.exit_code != 0) {
        detail = "worker counts change the report";
        return false;
    }
    detail = "reports byte-identical across runs and worker counts";
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: acceptance_tests <proxkit-binary> <fixture-dir>\n";
        return 2;
    }
    g_binary = argv[1];
    g_fixtures = argv[2];

    struct Criterion {
        const char* name;
        std::function<bool(std::string&)> fn;
    };
    std::vector<Criterion> criteria = {
        {"1 collapse-corollary", collapse_corollary},
        {"2 correspondence-lemma", correspondence_lemma},
        {"3 reflexivity-s6-transitivity-s8", reflexivity_transitivity},
        {"4 sigma-isomorphism", sigma_isomorphism},
        {"5 phi-bijection", phi_bijection},
        {"6 morphism-equivalences", morphism_equivalences},
        {"7 star-calculus", star_calculus},
        {"8 pospace-roundtrip", pospace_roundtrip},
        {"9 negative-paths", negative_paths},
        {"10 determinism", determinism},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = c.fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::cout << (ok ? "PASS" : "FAIL") << "  " << c.name << "  (" << detail << ")\n";
        if (!ok) ++failures;
    }
    std::cout << (failures == 0 ? "all criteria pass" : "criteria failing") << "\n";
    return failures == 0 ? 0 : 1;
}
