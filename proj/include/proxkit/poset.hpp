#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "proxkit/smallset.hpp"

namespace proxkit {

// Finite partial order. up[i] is the bitmap of {j | i <= j}, so leq is
// reflexive, antisymmetric and transitive by construction.
class Poset {
public:
    Poset() = default;
    Poset(std::vector<std::string> names, std::vector<uint64_t> up);

    uint32_t size() const { return static_cast<uint32_t>(up_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(uint32_t i) const { return names_[i]; }

    bool leq(uint32_t i, uint32_t j) const { return (up_[i] >> j) & 1; }
    bool lt(uint32_t i, uint32_t j) const { return i != j && leq(i, j); }
    uint64_t upset_of(uint32_t i) const { return up_[i]; }
    uint64_t downset_of(uint32_t i) const;

    bool is_upset(uint64_t mask) const;
    bool is_downset(uint64_t mask) const;
    SmallSet up_closure(const SmallSet& s) const;
    SmallSet down_closure(const SmallSet& s) const;

    // All up-closed subsets, as bitmaps in ascending numeric order.
    std::vector<uint64_t> all_upsets() const;
    std::vector<uint64_t> all_downsets() const;

    // Covering pairs (i, j): i < j with nothing strictly between.
    std::vector<std::pair<uint32_t, uint32_t>> hasse_edges() const;

    std::vector<uint32_t> minimal_elements() const;
    std::vector<uint32_t> maximal_elements() const;

    Poset dual() const;
    Rel as_relation() const;

    bool operator==(const Poset& o) const { return up_ == o.up_; }

private:
    std::vector<std::string> names_;
    std::vector<uint64_t> up_;
};

// Reflexive-transitive closure of `pairs` on `size` elements. The input may
// be any relation whose closure is a partial order; a closure that breaks
// antisymmetry raises CycleError, out-of-range indices raise IndexError.
Poset close_order(const std::vector<std::pair<uint32_t, uint32_t>>& pairs, uint32_t size,
                  std::vector<std::string> names = {});

std::vector<std::string> default_names(uint32_t size, const std::string& prefix = "e");

}  // namespace proxkit
