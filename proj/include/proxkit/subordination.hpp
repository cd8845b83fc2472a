#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "proxkit/check.hpp"
#include "proxkit/lattice.hpp"

namespace proxkit {

// Axioms for a binary relation `prec` on a bounded lattice. There is no S7:
// the numbering follows the subordination/pre-contact literature, which
// skips it, and we keep the established names.
enum class Axiom { S1, S2, S3, S4, S5, S6, S8 };

constexpr std::array<Axiom, 7> kAllAxioms = {Axiom::S1, Axiom::S2, Axiom::S3, Axiom::S4,
                                             Axiom::S5, Axiom::S6, Axiom::S8};

const char* axiom_name(Axiom a);
std::optional<Axiom> axiom_from_name(const std::string& name);

struct AxiomFlags {
    CheckResult s1, s2, s3, s4, s5, s6, s8;

    const CheckResult& get(Axiom a) const;
    // S1-S4.
    bool is_subordination() const { return s1.pass && s2.pass && s3.pass && s4.pass; }
    // S1-S6 and S8.
    bool is_proximity() const {
        return is_subordination() && s5.pass && s6.pass && s8.pass;
    }
};

// A binary relation on a lattice together with its per-axiom verdicts.
struct Subordination {
    LatticePtr lattice;
    Rel rel;  // rel.at(a, b) means a prec b
    AxiomFlags flags;

    bool prec(uint32_t a, uint32_t b) const { return rel.at(a, b); }
};

Subordination make_subordination(LatticePtr l, Rel rel);
// The order itself as a relation; the canonical proximity on a finite frame.
Subordination leq_subordination(LatticePtr l);

CheckResult check_axiom(const Lattice& l, const Rel& rel, Axiom which);
AxiomFlags check_all_axioms(const Lattice& l, const Rel& rel);

// up_arrow: {b | exists s in set : s prec b}; down_arrow dually.
SmallSet up_arrow(const Subordination& s, const SmallSet& set);
SmallSet down_arrow(const Subordination& s, const SmallSet& set);
SmallSet up_arrow(const Subordination& s, uint32_t a);
SmallSet down_arrow(const Subordination& s, uint32_t a);

// Proper filter fixed by up_arrow.
struct RoundFilter {
    SmallSet set;
    bool operator==(const RoundFilter& o) const = default;
};

// Round filter prime among round filters: F1 & F2 <= p only if F1 <= p or F2 <= p.
struct End {
    SmallSet set;
    bool operator==(const End& o) const = default;
};

// All proper round filters, sorted by ascending bitmap. Requires S1-S4.
std::vector<RoundFilter> round_filters(const Subordination& s);
std::vector<End> ends(const Subordination& s);
// Ends containing a.
std::vector<End> mu(const Subordination& s, uint32_t a);

// Least relation containing the seed pairs and {(0,0),(1,1)}, closed under
// S2, S3 and S4. Always exists (the full relation qualifies).
Subordination subordination_closure(LatticePtr l, const Rel& seed);

// Every relation satisfying S1-S5 on a finite lattice equals the order; this
// scans the relation space (exhaustively for |L| <= 4, by seeded sampling
// above) and reports the survivors.
struct CollapseReport {
    uint64_t scanned = 0;
    uint64_t survivors = 0;
    bool only_leq = true;       // every survivor equals <=
    bool exhaustive = true;
    std::optional<Rel> offender;  // least non-<= survivor, if any
};

CollapseReport collapse_check(LatticePtr l, uint64_t sample_count = 100000,
                              uint64_t seed = 0);

}  // namespace proxkit
