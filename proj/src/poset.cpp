#include "proxkit/poset.hpp"

#include <algorithm>

#include "proxkit/errors.hpp"

namespace proxkit {

std::vector<std::string> default_names(uint32_t size, const std::string& prefix) {
    std::vector<std::string> names;
    names.reserve(size);
    for (uint32_t i = 0; i < size; ++i) names.push_back(prefix + std::to_string(i));
    return names;
}

Poset::Poset(std::vector<std::string> names, std::vector<uint64_t> up)
    : names_(std::move(names)), up_(std::move(up)) {
    assert(names_.size() == up_.size());
}

uint64_t Poset::downset_of(uint32_t i) const {
    uint64_t d = 0;
    for (uint32_t j = 0; j < size(); ++j)
        if (leq(j, i)) d |= uint64_t{1} << j;
    return d;
}

bool Poset::is_upset(uint64_t mask) const {
    for (uint64_t b = mask; b != 0; b &= b - 1)
        if (up_[std::countr_zero(b)] & ~mask) return false;
    return true;
}

bool Poset::is_downset(uint64_t mask) const {
    for (uint64_t b = mask; b != 0; b &= b - 1)
        if (downset_of(static_cast<uint32_t>(std::countr_zero(b))) & ~mask) return false;
    return true;
}

SmallSet Poset::up_closure(const SmallSet& s) const {
    uint64_t out = 0;
    for (uint64_t b = s.bits(); b != 0; b &= b - 1) out |= up_[std::countr_zero(b)];
    return {size(), out};
}

SmallSet Poset::down_closure(const SmallSet& s) const {
    uint64_t out = 0;
    for (uint64_t b = s.bits(); b != 0; b &= b - 1)
        out |= downset_of(static_cast<uint32_t>(std::countr_zero(b)));
    return {size(), out};
}

std::vector<uint64_t> Poset::all_upsets() const {
    if (size() > 24) throw SizeError("upset enumeration capped at 24 points");
    std::vector<uint64_t> out;
    uint64_t limit = uint64_t{1} << size();
    for (uint64_t mask = 0; mask < limit; ++mask)
        if (is_upset(mask)) out.push_back(mask);
    return out;
}

std::vector<uint64_t> Poset::all_downsets() const {
    if (size() > 24) throw SizeError("downset enumeration capped at 24 points");
    std::vector<uint64_t> out;
    uint64_t limit = uint64_t{1} << size();
    for (uint64_t mask = 0; mask < limit; ++mask)
        if (is_downset(mask)) out.push_back(mask);
    return out;
}

std::vector<std::pair<uint32_t, uint32_t>> Poset::hasse_edges() const {
    std::vector<std::pair<uint32_t, uint32_t>> out;
    for (uint32_t i = 0; i < size(); ++i)
        for (uint32_t j = 0; j < size(); ++j) {
            if (!lt(i, j)) continue;
            bool covered = true;
            for (uint32_t k = 0; k < size() && covered; ++k)
                if (lt(i, k) && lt(k, j)) covered = false;
            if (covered) out.emplace_back(i, j);
        }
    return out;
}

std::vector<uint32_t> Poset::minimal_elements() const {
    std::vector<uint32_t> out;
    for (uint32_t i = 0; i < size(); ++i) {
        bool minimal = true;
        for (uint32_t j = 0; j < size() && minimal; ++j)
            if (lt(j, i)) minimal = false;
        if (minimal) out.push_back(i);
    }
    return out;
}

std::vector<uint32_t> Poset::maximal_elements() const {
    std::vector<uint32_t> out;
    for (uint32_t i = 0; i < size(); ++i) {
        bool maximal = true;
        for (uint32_t j = 0; j < size() && maximal; ++j)
            if (lt(i, j)) maximal = false;
        if (maximal) out.push_back(i);
    }
    return out;
}

Poset Poset::dual() const {
    std::vector<uint64_t> up(size(), 0);
    for (uint32_t i = 0; i < size(); ++i) up[i] = downset_of(i);
    return {names_, std::move(up)};
}

Rel Poset::as_relation() const {
    Rel r(size());
    for (uint32_t i = 0; i < size(); ++i)
        for (uint32_t j = 0; j < size(); ++j)
            if (leq(i, j)) r.set(i, j);
    return r;
}

Poset close_order(const std::vector<std::pair<uint32_t, uint32_t>>& pairs, uint32_t size,
                  std::vector<std::string> names) {
    if (size > 64) throw SizeError("carriers are capped at 64 elements");
    if (names.empty()) names = default_names(size);
    if (names.size() != size) throw IndexError("name list does not match size");

    std::vector<uint64_t> up(size, 0);
    for (uint32_t i = 0; i < size; ++i) up[i] = uint64_t{1} << i;
    for (auto [i, j] : pairs) {
        if (i >= size || j >= size)
            throw IndexError("pair (" + std::to_string(i) + "," + std::to_string(j) +
                             ") out of range for size " + std::to_string(size));
        up[i] |= uint64_t{1} << j;
    }

    // Warshall transitive closure on row bitmaps.
    for (uint32_t k = 0; k < size; ++k)
        for (uint32_t i = 0; i < size; ++i)
            if ((up[i] >> k) & 1) up[i] |= up[k];

    for (uint32_t i = 0; i < size; ++i)
        for (uint32_t j = i + 1; j < size; ++j)
            if (((up[i] >> j) & 1) && ((up[j] >> i) & 1))
                throw CycleError("closure relates " + names[i] + " and " + names[j] +
                                 " in both directions");

    return {std::move(names), std::move(up)};
}

}  // namespace proxkit
