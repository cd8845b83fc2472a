#pragma once

#include <memory>
#include <vector>

#include "proxkit/lattice.hpp"

namespace proxkit {

// Dual space of a finite bounded distributive lattice: prime filters ordered
// by inclusion. The patch topology is discrete at this scale, so no topology
// is materialised; clopen upsets are exactly the images of eta.
struct PriestleySpace {
    LatticePtr source;
    std::vector<SmallSet> points;  // proper prime filters, sorted by bitmap
    Poset order;                   // inclusion order on points

    uint32_t size() const { return static_cast<uint32_t>(points.size()); }
};

using PriestleyPtr = std::shared_ptr<const PriestleySpace>;

// All proper prime filters, sorted by ascending bitmap.
std::vector<SmallSet> prime_filters(const Lattice& l);

PriestleySpace priestley_dual(LatticePtr l);
PriestleyPtr priestley_dual_ptr(LatticePtr l);

// eta(a) = {x in Prim(L) | a in x}, as a point set of the dual space.
SmallSet eta(const PriestleySpace& x, uint32_t a);

// Lattice of all up-closed subsets of a poset, ordered by inclusion, with
// intersection/union as meet/join. Element i corresponds to upset_of[i].
struct UpsetLattice {
    LatticePtr lattice;
    std::vector<uint64_t> upset_of;

    // Index of a given upset bitmap; throws IndexError if absent.
    uint32_t index_of(uint64_t mask) const;
};

UpsetLattice upset_lattice(const Poset& x);
UpsetLattice downset_lattice(const Poset& x);

// Certifies that a |-> eta(a) is a bijective bounded-lattice homomorphism
// onto the upset lattice of the dual space.
struct BirkhoffReport {
    bool pass = true;
    std::vector<uint32_t> element_to_upset;  // a -> index in upset_lattice(order)
    std::vector<uint32_t> upset_to_element;
    std::string detail;
};

BirkhoffReport birkhoff_check(LatticePtr l);

}  // namespace proxkit
