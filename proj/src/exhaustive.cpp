#include "proxkit/exhaustive.hpp"

#include <algorithm>
#include <random>
#include <thread>

#include "proxkit/errors.hpp"
#include "proxkit/priestley.hpp"

namespace proxkit {

namespace {

struct DualContext {
    std::vector<uint64_t> prime_bits;  // element bitmap per point
    std::vector<uint64_t> eta_mask;    // point bitmap per element
};

DualContext dual_context(const Lattice& l) {
    DualContext ctx;
    for (const SmallSet& p : prime_filters(l)) ctx.prime_bits.push_back(p.bits());
    ctx.eta_mask.assign(l.size(), 0);
    for (uint32_t a = 0; a < l.size(); ++a)
        for (uint32_t x = 0; x < ctx.prime_bits.size(); ++x)
            if ((ctx.prime_bits[x] >> a) & 1) ctx.eta_mask[a] |= uint64_t{1} << x;
    return ctx;
}

// Point relation of Eq-style duals: x R y iff up_arrow(x) <= y.
void point_relation(const Rel& rel, const DualContext& ctx, std::vector<uint64_t>& rrows) {
    size_t np = ctx.prime_bits.size();
    rrows.assign(np, 0);
    for (size_t x = 0; x < np; ++x) {
        uint64_t up = 0;
        for (uint64_t b = ctx.prime_bits[x]; b != 0; b &= b - 1)
            up |= rel.row(static_cast<uint32_t>(std::countr_zero(b)));
        for (size_t y = 0; y < np; ++y)
            if ((up & ~ctx.prime_bits[y]) == 0) rrows[x] |= uint64_t{1} << y;
    }
}

bool point_relation_reflexive(const std::vector<uint64_t>& rrows) {
    for (size_t x = 0; x < rrows.size(); ++x)
        if (!((rrows[x] >> x) & 1)) return false;
    return true;
}

bool point_relation_transitive(const std::vector<uint64_t>& rrows) {
    for (size_t x = 0; x < rrows.size(); ++x)
        for (uint64_t b = rrows[x]; b != 0; b &= b - 1)
            if (rrows[std::countr_zero(b)] & ~rrows[x]) return false;
    return true;
}

bool satisfies_s1_s4(const Lattice& l, const Rel& rel) {
    return check_axiom(l, rel, Axiom::S1).pass && check_axiom(l, rel, Axiom::S2).pass &&
           check_axiom(l, rel, Axiom::S3).pass && check_axiom(l, rel, Axiom::S4).pass;
}

void require_scan_size(const Lattice& l) {
    if (l.size() > kExhaustiveMaxElements)
        throw SizeError("exhaustive scans are capped at " +
                        std::to_string(kExhaustiveMaxElements) + " elements; sample instead");
}

// Runs body(begin, end, slot) over `workers` contiguous mask ranges. Slots
// are merged in range order, so the outcome is schedule-independent.
template <typename Slot, typename Body>
std::vector<Slot> scan_chunks(uint64_t total, uint32_t workers, Body body) {
    if (workers == 0) workers = 1;
    workers = static_cast<uint32_t>(std::min<uint64_t>(workers, std::max<uint64_t>(total, 1)));
    std::vector<Slot> slots(workers);
    std::vector<std::thread> threads;
    uint64_t chunk = (total + workers - 1) / workers;
    for (uint32_t w = 0; w < workers; ++w) {
        uint64_t begin = w * chunk;
        uint64_t end = std::min(total, begin + chunk);
        threads.emplace_back([&, w, begin, end] { body(begin, end, slots[w]); });
    }
    for (auto& t : threads) t.join();
    return slots;
}

}  // namespace

CollapseScanReport collapse_scan(const Lattice& l, uint32_t workers) {
    require_scan_size(l);
    uint32_t n = l.size();
    uint64_t total = uint64_t{1} << (n * n);
    const Rel leq = l.poset().as_relation();

    struct Slot {
        uint64_t survivors = 0;
        std::optional<Rel> offender;
    };
    auto slots = scan_chunks<Slot>(total, workers, [&](uint64_t begin, uint64_t end, Slot& s) {
        for (uint64_t mask = begin; mask < end; ++mask) {
            Rel rel = Rel::from_mask(n, mask);
            if (!satisfies_s1_s4(l, rel)) continue;
            if (!check_axiom(l, rel, Axiom::S5).pass) continue;
            ++s.survivors;
            if (!(rel == leq) && !s.offender) s.offender = rel;
        }
    });

    CollapseScanReport out;
    out.scanned = total;
    for (const auto& s : slots) {
        out.survivors += s.survivors;
        if (s.offender && !out.offender) out.offender = s.offender;
    }
    out.only_leq = !out.offender.has_value();
    return out;
}

CorrespondenceScanReport lemma_correspondence_scan(const Lattice& l, uint32_t workers) {
    require_scan_size(l);
    uint32_t n = l.size();
    uint64_t total = uint64_t{1} << (n * n);
    const DualContext ctx = dual_context(l);

    struct Slot {
        uint64_t subordinations = 0;
        uint64_t failures = 0;
        std::optional<ScanWitness> first;
    };
    auto slots = scan_chunks<Slot>(total, workers, [&](uint64_t begin, uint64_t end, Slot& s) {
        std::vector<uint64_t> rrows;
        for (uint64_t mask = begin; mask < end; ++mask) {
            Rel rel = Rel::from_mask(n, mask);
            if (!satisfies_s1_s4(l, rel)) continue;
            ++s.subordinations;
            point_relation(rel, ctx, rrows);
            for (uint32_t a = 0; a < n; ++a)
                for (uint32_t b = 0; b < n; ++b) {
                    // R[eta(a),-] <= eta(b)
                    uint64_t forward = 0;
                    for (uint64_t bits = ctx.eta_mask[a]; bits != 0; bits &= bits - 1)
                        forward |= rrows[std::countr_zero(bits)];
                    bool rhs = (forward & ~ctx.eta_mask[b]) == 0;
                    if (rel.at(a, b) != rhs) {
                        ++s.failures;
                        if (!s.first)
                            s.first = ScanWitness{
                                mask,
                                {static_cast<int>(a), static_cast<int>(b)},
                                "prec(" + l.name(a) + "," + l.name(b) +
                                    ") disagrees with R[eta(a),-] <= eta(b)"};
                    }
                }
        }
    });

    CorrespondenceScanReport out;
    out.scanned = total;
    for (const auto& s : slots) {
        out.subordinations += s.subordinations;
        out.failures += s.failures;
        if (s.first && !out.first_failure) out.first_failure = s.first;
    }
    return out;
}

namespace {

BiconditionalScanReport iff_scan(const Lattice& l, uint32_t workers, bool s6_side) {
    require_scan_size(l);
    uint32_t n = l.size();
    uint64_t total = uint64_t{1} << (n * n);
    const DualContext ctx = dual_context(l);

    struct Slot {
        uint64_t subordinations = 0;
        uint64_t counterexamples = 0;
        std::optional<ScanWitness> first;
    };
    auto slots = scan_chunks<Slot>(total, workers, [&](uint64_t begin, uint64_t end, Slot& s) {
        std::vector<uint64_t> rrows;
        for (uint64_t mask = begin; mask < end; ++mask) {
            Rel rel = Rel::from_mask(n, mask);
            if (!satisfies_s1_s4(l, rel)) continue;
            ++s.subordinations;
            point_relation(rel, ctx, rrows);
            bool point_side =
                s6_side ? point_relation_reflexive(rrows) : point_relation_transitive(rrows);
            bool axiom_side =
                check_axiom(l, rel, s6_side ? Axiom::S6 : Axiom::S8).pass;
            if (point_side != axiom_side) {
                ++s.counterexamples;
                if (!s.first)
                    s.first = ScanWitness{mask,
                                          {},
                                          std::string(s6_side ? "reflexivity/S6" : "transitivity/S8") +
                                              " biconditional fails"};
            }
        }
    });

    BiconditionalScanReport out;
    out.scanned = total;
    for (const auto& s : slots) {
        out.subordinations += s.subordinations;
        out.counterexamples += s.counterexamples;
        if (s.first && !out.first_failure) out.first_failure = s.first;
    }
    return out;
}

}  // namespace

BiconditionalScanReport iff_s6_scan(const Lattice& l, uint32_t workers) {
    return iff_scan(l, workers, true);
}

BiconditionalScanReport iff_s8_scan(const Lattice& l, uint32_t workers) {
    return iff_scan(l, workers, false);
}

std::vector<uint64_t> relations_satisfying(const Lattice& l, const std::vector<Axiom>& axioms,
                                           uint32_t workers) {
    require_scan_size(l);
    uint32_t n = l.size();
    uint64_t total = uint64_t{1} << (n * n);

    using Slot = std::vector<uint64_t>;
    auto slots = scan_chunks<Slot>(total, workers, [&](uint64_t begin, uint64_t end, Slot& s) {
        for (uint64_t mask = begin; mask < end; ++mask) {
            Rel rel = Rel::from_mask(n, mask);
            bool ok = true;
            for (Axiom a : axioms)
                if (!check_axiom(l, rel, a).pass) {
                    ok = false;
                    break;
                }
            if (ok) s.push_back(mask);
        }
    });

    std::vector<uint64_t> out;
    for (auto& s : slots) out.insert(out.end(), s.begin(), s.end());
    return out;
}

namespace {

template <typename Check>
void sampled_scan(const Lattice& l, uint64_t count, uint64_t seed, Check check) {
    uint32_t n = l.size();
    std::mt19937_64 rng(seed);
    for (uint64_t i = 0; i < count; ++i) {
        Rel rel(n);
        for (uint32_t row = 0; row < n; ++row) {
            uint64_t bits = rng();
            for (uint32_t j = 0; j < n; ++j)
                if ((bits >> j) & 1) rel.set(row, j);
        }
        check(rel);
    }
}

}  // namespace

CollapseScanReport collapse_sampled(const Lattice& l, uint64_t count, uint64_t seed) {
    CollapseScanReport out;
    const Rel leq = l.poset().as_relation();
    sampled_scan(l, count, seed, [&](const Rel& rel) {
        ++out.scanned;
        if (!satisfies_s1_s4(l, rel) || !check_axiom(l, rel, Axiom::S5).pass) return;
        ++out.survivors;
        if (!(rel == leq)) {
            out.only_leq = false;
            if (!out.offender) out.offender = rel;
        }
    });
    return out;
}

CorrespondenceScanReport lemma_correspondence_sampled(const Lattice& l, uint64_t count,
                                                      uint64_t seed) {
    CorrespondenceScanReport out;
    const DualContext ctx = dual_context(l);
    std::vector<uint64_t> rrows;
    sampled_scan(l, count, seed, [&](const Rel& rel) {
        ++out.scanned;
        if (!satisfies_s1_s4(l, rel)) return;
        ++out.subordinations;
        point_relation(rel, ctx, rrows);
        for (uint32_t a = 0; a < l.size(); ++a)
            for (uint32_t b = 0; b < l.size(); ++b) {
                uint64_t forward = 0;
                for (uint64_t bits = ctx.eta_mask[a]; bits != 0; bits &= bits - 1)
                    forward |= rrows[std::countr_zero(bits)];
                bool rhs = (forward & ~ctx.eta_mask[b]) == 0;
                if (rel.at(a, b) != rhs) {
                    ++out.failures;
                    if (!out.first_failure)
                        out.first_failure =
                            ScanWitness{0,
                                        {static_cast<int>(a), static_cast<int>(b)},
                                        "correspondence fails at (" + l.name(a) + "," +
                                            l.name(b) + ")"};
                }
            }
    });
    return out;
}

namespace {

BiconditionalScanReport iff_sampled(const Lattice& l, uint64_t count, uint64_t seed,
                                    bool s6_side) {
    BiconditionalScanReport out;
    const DualContext ctx = dual_context(l);
    std::vector<uint64_t> rrows;
    sampled_scan(l, count, seed, [&](const Rel& rel) {
        ++out.scanned;
        if (!satisfies_s1_s4(l, rel)) return;
        ++out.subordinations;
        point_relation(rel, ctx, rrows);
        bool point_side =
            s6_side ? point_relation_reflexive(rrows) : point_relation_transitive(rrows);
        bool axiom_side = check_axiom(l, rel, s6_side ? Axiom::S6 : Axiom::S8).pass;
        if (point_side != axiom_side) {
            ++out.counterexamples;
            if (!out.first_failure)
                out.first_failure = ScanWitness{
                    0, {}, std::string(s6_side ? "reflexivity/S6" : "transitivity/S8") +
                               " biconditional fails"};
        }
    });
    return out;
}

}  // namespace

BiconditionalScanReport iff_s6_sampled(const Lattice& l, uint64_t count, uint64_t seed) {
    return iff_sampled(l, count, seed, true);
}

BiconditionalScanReport iff_s8_sampled(const Lattice& l, uint64_t count, uint64_t seed) {
    return iff_sampled(l, count, seed, false);
}

}  // namespace proxkit
