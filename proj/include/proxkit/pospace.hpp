#pragma once

#include "proxkit/subordination.hpp"

namespace proxkit {

// A finite poset read as a compact pospace: the patch topology is discrete,
// the open-upset topology is the Alexandrov one, and every subset is compact.

// Open-set frame of the pospace: the upset lattice with prec = inclusion.
// Every interpolating compact set exists finitely, so the relation is the
// order itself and satisfies S1-S6 and S8.
Subordination omega(const Poset& p);

// K_F = {ends p | p <= F} for a round filter F; the closed sets of the
// co-compact side. Requires a proximity instance.
SmallSet k_set(const Subordination& s, const RoundFilter& f);

// Certifies that the ends of omega(P), ordered by inclusion, reproduce P via
// p |-> {upsets containing p}.
struct PospaceReport {
    bool pass = true;
    std::vector<uint32_t> point_to_end;  // point of P -> end index
    std::string detail;
};

PospaceReport roundtrip_pospace(const Poset& p);

}  // namespace proxkit
