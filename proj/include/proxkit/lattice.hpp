#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "proxkit/poset.hpp"
#include "proxkit/smallset.hpp"

namespace proxkit {

// Bounded distributive lattice over a validated poset. Meet/join tables are
// total; distributivity is certified at construction.
class Lattice {
public:
    Lattice() = default;
    Lattice(Poset poset, uint32_t bottom, uint32_t top, std::vector<uint8_t> meet,
            std::vector<uint8_t> join);

    uint32_t size() const { return poset_.size(); }
    const Poset& poset() const { return poset_; }
    const std::string& name(uint32_t a) const { return poset_.name(a); }
    bool leq(uint32_t a, uint32_t b) const { return poset_.leq(a, b); }

    uint32_t bottom() const { return bottom_; }
    uint32_t top() const { return top_; }
    uint32_t meet(uint32_t a, uint32_t b) const { return meet_[a * size() + b]; }
    uint32_t join(uint32_t a, uint32_t b) const { return join_[a * size() + b]; }

    uint32_t meet_all(const SmallSet& s) const;  // empty set -> top
    uint32_t join_all(const SmallSet& s) const;  // empty set -> bottom

    std::string set_label(const SmallSet& s) const;

private:
    Poset poset_;
    uint32_t bottom_ = 0, top_ = 0;
    std::vector<uint8_t> meet_, join_;
};

using LatticePtr = std::shared_ptr<const Lattice>;

// Computes meet/join tables from the order and certifies bounds, the lattice
// property and distributivity. Throws NoBoundsError, NotALatticeError or
// NotDistributiveError (with the least witness triple).
Lattice lattice_from_poset(const Poset& p);
LatticePtr lattice_ptr_from_poset(const Poset& p);

// Elements j != bottom such that j = a v b forces j in {a, b}.
SmallSet join_irreducibles(const Lattice& l);

// Least up-closed meet-closed superset of s; {top} for empty s.
SmallSet filter_generated(const Lattice& l, const SmallSet& s);
// Least down-closed join-closed superset of s; {bottom} for empty s.
SmallSet ideal_generated(const Lattice& l, const SmallSet& s);

bool is_filter(const Lattice& l, const SmallSet& s);         // up/meet-closed, may be improper
bool is_proper_filter(const Lattice& l, const SmallSet& s);  // contains top, excludes bottom
bool is_prime_filter(const Lattice& l, const SmallSet& s);

}  // namespace proxkit
