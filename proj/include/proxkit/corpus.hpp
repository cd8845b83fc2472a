#pragma once

#include <string>
#include <vector>

#include "proxkit/lattice.hpp"

namespace proxkit {

// Named fixture instances and small-scale enumerations backing the test and
// invariant suites.

Poset chain_poset(uint32_t n);      // C1..: 0 < 1 < ... < n-1
Poset antichain_poset(uint32_t n);
Poset boolean_poset(uint32_t atoms);  // subsets of {0..atoms-1} by inclusion
Poset m3_poset();                   // diamond: 0 < x,y,z < 1
Poset n5_poset();                   // pentagon: 0 < a < c < 1, 0 < b < 1

LatticePtr chain_lattice(uint32_t n);
LatticePtr boolean_lattice(uint32_t atoms);  // B2 = boolean_lattice(2)

struct NamedLattice {
    std::string name;
    LatticePtr lattice;
};

// C1-C5, B2, B3 and the downset lattices of every poset on up to 3 points.
std::vector<NamedLattice> corpus_lattices();

// All labeled posets on n points (ascending relation-mask order). n <= 5.
std::vector<Poset> all_posets(uint32_t n);

// All distributive lattices arising as downset lattices of posets on up to
// `max_points` points, filtered to at most `max_size` elements.
std::vector<NamedLattice> small_distributive_lattices(uint32_t max_points,
                                                      uint32_t max_size);

}  // namespace proxkit
