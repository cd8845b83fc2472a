#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "proxkit/subordination.hpp"

namespace proxkit {

// Exhaustive scans over the full relation space of a small lattice
// (2^(n*n) relations, n <= 4). Scans may be partitioned across workers; all
// reported data is independent of the worker count: counts are summed and
// witnesses are global minima in relation-mask order.

constexpr uint32_t kExhaustiveMaxElements = 4;

struct ScanWitness {
    uint64_t rel_mask = 0;
    std::vector<int> tuple;
    std::string detail;
};

struct CollapseScanReport {
    uint64_t scanned = 0;
    uint64_t survivors = 0;  // relations satisfying S1-S5
    bool only_leq = true;    // every survivor equals <=
    std::optional<Rel> offender;  // least non-<= survivor, if any
    bool pass() const { return survivors == 1 && only_leq; }
};

CollapseScanReport collapse_scan(const Lattice& l, uint32_t workers = 1);

// Correspondence between prec and the point relation: a prec b iff
// R[eta(a),-] <= eta(b), for every S1-S4 relation.
struct CorrespondenceScanReport {
    uint64_t scanned = 0;
    uint64_t subordinations = 0;
    uint64_t failures = 0;
    std::optional<ScanWitness> first_failure;
    bool pass() const { return failures == 0; }
};

CorrespondenceScanReport lemma_correspondence_scan(const Lattice& l, uint32_t workers = 1);

// R reflexive iff S6, over every S1-S4 relation.
struct BiconditionalScanReport {
    uint64_t scanned = 0;
    uint64_t subordinations = 0;
    uint64_t counterexamples = 0;
    std::optional<ScanWitness> first_failure;
    bool pass() const { return counterexamples == 0; }
};

BiconditionalScanReport iff_s6_scan(const Lattice& l, uint32_t workers = 1);
// R transitive iff S8, over every S1-S4 relation.
BiconditionalScanReport iff_s8_scan(const Lattice& l, uint32_t workers = 1);

// All relations satisfying the given axiom subset, as ascending masks.
std::vector<uint64_t> relations_satisfying(const Lattice& l, const std::vector<Axiom>& axioms,
                                           uint32_t workers = 1);

// Sampled variants for |L| > 4: `count` relations drawn with a seeded
// generator, deterministic for a fixed seed.
CollapseScanReport collapse_sampled(const Lattice& l, uint64_t count, uint64_t seed);
CorrespondenceScanReport lemma_correspondence_sampled(const Lattice& l, uint64_t count,
                                                      uint64_t seed);
BiconditionalScanReport iff_s6_sampled(const Lattice& l, uint64_t count, uint64_t seed);
BiconditionalScanReport iff_s8_sampled(const Lattice& l, uint64_t count, uint64_t seed);

}  // namespace proxkit
