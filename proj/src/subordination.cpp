#include "proxkit/subordination.hpp"

#include <algorithm>
#include <random>

#include "proxkit/errors.hpp"
#include "proxkit/exhaustive.hpp"

namespace proxkit {

const char* axiom_name(Axiom a) {
    switch (a) {
        case Axiom::S1: return "S1";
        case Axiom::S2: return "S2";
        case Axiom::S3: return "S3";
        case Axiom::S4: return "S4";
        case Axiom::S5: return "S5";
        case Axiom::S6: return "S6";
        case Axiom::S8: return "S8";
    }
    return "?";
}

std::optional<Axiom> axiom_from_name(const std::string& name) {
    for (Axiom a : kAllAxioms)
        if (name == axiom_name(a)) return a;
    return std::nullopt;
}

const CheckResult& AxiomFlags::get(Axiom a) const {
    switch (a) {
        case Axiom::S1: return s1;
        case Axiom::S2: return s2;
        case Axiom::S3: return s3;
        case Axiom::S4: return s4;
        case Axiom::S5: return s5;
        case Axiom::S6: return s6;
        case Axiom::S8: return s8;
    }
    return s1;
}

namespace {

CheckResult check_s1(const Lattice& l, const Rel& rel) {
    if (!rel.at(l.bottom(), l.bottom()))
        return CheckResult::fail({static_cast<int>(l.bottom()), static_cast<int>(l.bottom())},
                                 "0 prec 0 missing");
    if (!rel.at(l.top(), l.top()))
        return CheckResult::fail({static_cast<int>(l.top()), static_cast<int>(l.top())},
                                 "1 prec 1 missing");
    return CheckResult::ok();
}

CheckResult check_s2(const Lattice& l, const Rel& rel) {
    uint32_t n = l.size();
    for (uint32_t a = 0; a < n; ++a)
        for (uint32_t b = 0; b < n; ++b) {
            if (!rel.at(a, b)) continue;
            for (uint32_t c = 0; c < n; ++c)
                if (rel.at(a, c) && !rel.at(a, l.meet(b, c)))
                    return CheckResult::fail(
                        {static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)},
                        l.name(a) + " prec " + l.name(b) + "," + l.name(c) + " but not " +
                            l.name(a) + " prec " + l.name(l.meet(b, c)));
        }
    return CheckResult::ok();
}

CheckResult check_s3(const Lattice& l, const Rel& rel) {
    uint32_t n = l.size();
    for (uint32_t a = 0; a < n; ++a)
        for (uint32_t b = 0; b < n; ++b)
            for (uint32_t c = 0; c < n; ++c)
                if (rel.at(a, c) && rel.at(b, c) && !rel.at(l.join(a, b), c))
                    return CheckResult::fail(
                        {static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)},
                        l.name(a) + "," + l.name(b) + " prec " + l.name(c) + " but not " +
                            l.name(l.join(a, b)) + " prec " + l.name(c));
    return CheckResult::ok();
}

CheckResult check_s4(const Lattice& l, const Rel& rel) {
    uint32_t n = l.size();
    for (uint32_t a = 0; a < n; ++a)
        for (uint32_t b = 0; b < n; ++b) {
            if (!l.leq(a, b)) continue;
            for (uint32_t c = 0; c < n; ++c) {
                if (!rel.at(b, c)) continue;
                for (uint32_t d = 0; d < n; ++d)
                    if (l.leq(c, d) && !rel.at(a, d))
                        return CheckResult::fail({static_cast<int>(a), static_cast<int>(b),
                                                  static_cast<int>(c), static_cast<int>(d)},
                                                 l.name(a) + " <= " + l.name(b) + " prec " +
                                                     l.name(c) + " <= " + l.name(d) +
                                                     " but not " + l.name(a) + " prec " +
                                                     l.name(d));
            }
        }
    return CheckResult::ok();
}

CheckResult check_s5(const Lattice& l, const Rel& rel) {
    uint32_t n = l.size();
    for (uint32_t a = 0; a < n; ++a) {
        uint32_t acc = l.bottom();
        for (uint32_t b = 0; b < n; ++b)
            if (rel.at(b, a)) acc = l.join(acc, b);
        if (acc != a)
            return CheckResult::fail({static_cast<int>(a), static_cast<int>(acc)},
                                     "join of {b | b prec " + l.name(a) + "} is " +
                                         l.name(acc) + ", not " + l.name(a));
    }
    return CheckResult::ok();
}

CheckResult check_s6(const Lattice& l, const Rel& rel) {
    uint32_t n = l.size();
    for (uint32_t a = 0; a < n; ++a)
        for (uint32_t b = 0; b < n; ++b)
            if (rel.at(a, b) && !l.leq(a, b))
                return CheckResult::fail({static_cast<int>(a), static_cast<int>(b)},
                                         l.name(a) + " prec " + l.name(b) + " but not " +
                                             l.name(a) + " <= " + l.name(b));
    return CheckResult::ok();
}

CheckResult check_s8(const Lattice& l, const Rel& rel) {
    uint32_t n = l.size();
    for (uint32_t a = 0; a < n; ++a)
        for (uint32_t b = 0; b < n; ++b) {
            if (!rel.at(a, b)) continue;
            // a prec c prec b for some c: row(a) must meet column(b).
            if ((rel.row(a) & rel.column(b)) == 0)
                return CheckResult::fail({static_cast<int>(a), static_cast<int>(b)},
                                         "no c with " + l.name(a) + " prec c prec " +
                                             l.name(b));
        }
    return CheckResult::ok();
}

}  // namespace

CheckResult check_axiom(const Lattice& l, const Rel& rel, Axiom which) {
    switch (which) {
        case Axiom::S1: return check_s1(l, rel);
        case Axiom::S2: return check_s2(l, rel);
        case Axiom::S3: return check_s3(l, rel);
        case Axiom::S4: return check_s4(l, rel);
        case Axiom::S5: return check_s5(l, rel);
        case Axiom::S6: return check_s6(l, rel);
        case Axiom::S8: return check_s8(l, rel);
    }
    return CheckResult::ok();
}

AxiomFlags check_all_axioms(const Lattice& l, const Rel& rel) {
    return {check_s1(l, rel), check_s2(l, rel), check_s3(l, rel), check_s4(l, rel),
            check_s5(l, rel), check_s6(l, rel), check_s8(l, rel)};
}

Subordination make_subordination(LatticePtr l, Rel rel) {
    if (rel.size() != l->size())
        throw IndexError("relation carrier does not match the lattice");
    AxiomFlags flags = check_all_axioms(*l, rel);
    return {std::move(l), std::move(rel), std::move(flags)};
}

Subordination leq_subordination(LatticePtr l) {
    Rel rel = l->poset().as_relation();
    return make_subordination(std::move(l), std::move(rel));
}

SmallSet up_arrow(const Subordination& s, const SmallSet& set) { return s.rel.image(set); }
SmallSet down_arrow(const Subordination& s, const SmallSet& set) {
    return s.rel.pre_image(set);
}
SmallSet up_arrow(const Subordination& s, uint32_t a) {
    return up_arrow(s, SmallSet::single(s.lattice->size(), a));
}
SmallSet down_arrow(const Subordination& s, uint32_t a) {
    return down_arrow(s, SmallSet::single(s.lattice->size(), a));
}

namespace {

void require_subordination(const Subordination& s, const char* op) {
    if (!s.flags.is_subordination())
        throw AxiomError(std::string(op) + " requires S1-S4 to hold");
}

}  // namespace

std::vector<RoundFilter> round_filters(const Subordination& s) {
    require_subordination(s, "round_filters");
    const Lattice& l = *s.lattice;
    std::vector<RoundFilter> out;
    // Every filter of a finite lattice is a principal upset; proper means
    // the generator is not bottom (so the one-element lattice has none).
    for (uint32_t c = 0; c < l.size(); ++c) {
        if (c == l.bottom()) continue;
        SmallSet f(l.size(), l.poset().upset_of(c));
        if (up_arrow(s, f) == f) out.push_back({f});
    }
    std::sort(out.begin(), out.end(), [](const RoundFilter& a, const RoundFilter& b) {
        return a.set.bits() < b.set.bits();
    });
    return out;
}

std::vector<End> ends(const Subordination& s) {
    std::vector<RoundFilter> rounds = round_filters(s);
    std::vector<End> out;
    for (const RoundFilter& p : rounds) {
        bool prime = true;
        for (const RoundFilter& f1 : rounds) {
            for (const RoundFilter& f2 : rounds) {
                SmallSet cap = f1.set & f2.set;
                if (cap.subset_of(p.set) && !f1.set.subset_of(p.set) &&
                    !f2.set.subset_of(p.set)) {
                    prime = false;
                    break;
                }
            }
            if (!prime) break;
        }
        if (prime) out.push_back({p.set});
    }
    return out;
}

std::vector<End> mu(const Subordination& s, uint32_t a) {
    if (a >= s.lattice->size()) throw IndexError("mu: element out of range");
    std::vector<End> out;
    for (const End& p : ends(s))
        if (p.set.contains(a)) out.push_back(p);
    return out;
}

Subordination subordination_closure(LatticePtr l, const Rel& seed) {
    const Lattice& lat = *l;
    uint32_t n = lat.size();
    if (seed.size() != n) throw IndexError("seed carrier does not match the lattice");

    Rel rel = seed;
    rel.set(lat.bottom(), lat.bottom());
    rel.set(lat.top(), lat.top());

    bool changed = true;
    while (changed) {
        changed = false;
        // S4: a <= b prec c <= d.
        for (uint32_t b = 0; b < n; ++b) {
            uint64_t closure = 0;
            for (uint64_t bits = rel.row(b); bits != 0; bits &= bits - 1)
                closure |= lat.poset().upset_of(static_cast<uint32_t>(std::countr_zero(bits)));
            for (uint32_t a = 0; a < n; ++a) {
                if (!lat.leq(a, b)) continue;
                for (uint64_t bits = closure & ~rel.row(a); bits != 0; bits &= bits - 1) {
                    rel.set(a, static_cast<uint32_t>(std::countr_zero(bits)));
                    changed = true;
                }
            }
        }
        // S2: a prec b, c forces a prec b meet c.
        for (uint32_t a = 0; a < n; ++a) {
            auto row = rel.row_set(a).indices();
            for (uint32_t b : row)
                for (uint32_t c : row) {
                    uint32_t m = lat.meet(b, c);
                    if (!rel.at(a, m)) {
                        rel.set(a, m);
                        changed = true;
                    }
                }
        }
        // S3: a, b prec c forces a join b prec c.
        for (uint32_t c = 0; c < n; ++c) {
            SmallSet col(n, rel.column(c));
            auto below = col.indices();
            for (uint32_t a : below)
                for (uint32_t b : below) {
                    uint32_t j = lat.join(a, b);
                    if (!rel.at(j, c)) {
                        rel.set(j, c);
                        changed = true;
                    }
                }
        }
    }
    return make_subordination(std::move(l), std::move(rel));
}

CollapseReport collapse_check(LatticePtr l, uint64_t sample_count, uint64_t seed) {
    CollapseReport out;
    uint32_t n = l->size();
    const Rel leq = l->poset().as_relation();

    if (n <= kExhaustiveMaxElements) {
        CollapseScanReport scan = collapse_scan(*l);
        out.scanned = scan.scanned;
        out.survivors = scan.survivors;
        out.only_leq = scan.only_leq;
        out.offender = scan.offender;
        out.exhaustive = true;
        return out;
    }

    out.exhaustive = false;
    std::mt19937_64 rng(seed);
    for (uint64_t i = 0; i < sample_count; ++i) {
        Rel rel(n);
        for (uint32_t row = 0; row < n; ++row) {
            uint64_t bits = rng();
            if (n < 64) bits &= (uint64_t{1} << n) - 1;
            for (uint32_t j = 0; j < n; ++j)
                if ((bits >> j) & 1) rel.set(row, j);
        }
        ++out.scanned;
        bool s15 = check_axiom(*l, rel, Axiom::S1).pass && check_axiom(*l, rel, Axiom::S2).pass &&
                   check_axiom(*l, rel, Axiom::S3).pass && check_axiom(*l, rel, Axiom::S4).pass &&
                   check_axiom(*l, rel, Axiom::S5).pass;
        if (!s15) continue;
        ++out.survivors;
        if (!(rel == leq)) {
            out.only_leq = false;
            if (!out.offender) out.offender = rel;
        }
    }
    return out;
}

}  // namespace proxkit
