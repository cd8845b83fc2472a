#include "proxkit/lattice.hpp"

#include <algorithm>
#include <bit>

#include "proxkit/errors.hpp"

namespace proxkit {

Lattice::Lattice(Poset poset, uint32_t bottom, uint32_t top, std::vector<uint8_t> meet,
                 std::vector<uint8_t> join)
    : poset_(std::move(poset)), bottom_(bottom), top_(top), meet_(std::move(meet)),
      join_(std::move(join)) {
    assert(meet_.size() == size_t{size()} * size());
    assert(join_.size() == size_t{size()} * size());
}

uint32_t Lattice::meet_all(const SmallSet& s) const {
    uint32_t acc = top_;
    for (uint64_t b = s.bits(); b != 0; b &= b - 1)
        acc = meet(acc, static_cast<uint32_t>(std::countr_zero(b)));
    return acc;
}

uint32_t Lattice::join_all(const SmallSet& s) const {
    uint32_t acc = bottom_;
    for (uint64_t b = s.bits(); b != 0; b &= b - 1)
        acc = join(acc, static_cast<uint32_t>(std::countr_zero(b)));
    return acc;
}

std::string Lattice::set_label(const SmallSet& s) const {
    std::string out = "{";
    bool first = true;
    for (uint32_t i : s.indices()) {
        if (!first) out += ",";
        out += name(i);
        first = false;
    }
    return out + "}";
}

namespace {

// Greatest lower bound of {a, b} in p, or -1 when none exists.
int bound_of_pair(const Poset& p, uint32_t a, uint32_t b, bool lower) {
    uint64_t candidates = 0;
    for (uint32_t c = 0; c < p.size(); ++c) {
        bool below = lower ? (p.leq(c, a) && p.leq(c, b)) : (p.leq(a, c) && p.leq(b, c));
        if (below) candidates |= uint64_t{1} << c;
    }
    for (uint64_t bb = candidates; bb != 0; bb &= bb - 1) {
        uint32_t c = static_cast<uint32_t>(std::countr_zero(bb));
        bool extreme = true;
        for (uint64_t b2 = candidates; b2 != 0 && extreme; b2 &= b2 - 1) {
            uint32_t d = static_cast<uint32_t>(std::countr_zero(b2));
            if (lower ? !p.leq(d, c) : !p.leq(c, d)) extreme = false;
        }
        if (extreme) return static_cast<int>(c);
    }
    return -1;
}

}  // namespace

Lattice lattice_from_poset(const Poset& p) {
    uint32_t n = p.size();
    if (n == 0) throw NoBoundsError("empty poset has no bounds");

    auto mins = p.minimal_elements();
    auto maxs = p.maximal_elements();
    if (mins.size() != 1 || maxs.size() != 1)
        throw NoBoundsError("poset lacks a unique bottom/top");
    uint32_t bottom = mins[0], top = maxs[0];

    std::vector<uint8_t> meet(size_t{n} * n), join(size_t{n} * n);
    for (uint32_t a = 0; a < n; ++a)
        for (uint32_t b = 0; b < n; ++b) {
            int m = bound_of_pair(p, a, b, true);
            int j = bound_of_pair(p, a, b, false);
            if (m < 0)
                throw NotALatticeError("pair (" + p.name(a) + "," + p.name(b) +
                                       ") has no greatest lower bound");
            if (j < 0)
                throw NotALatticeError("pair (" + p.name(a) + "," + p.name(b) +
                                       ") has no least upper bound");
            meet[a * n + b] = static_cast<uint8_t>(m);
            join[a * n + b] = static_cast<uint8_t>(j);
        }

    // Full triple scan; the least witness gives the best error message.
    for (uint32_t a = 0; a < n; ++a)
        for (uint32_t b = 0; b < n; ++b)
            for (uint32_t c = 0; c < n; ++c) {
                uint32_t lhs = meet[a * n + join[b * n + c]];
                uint32_t rhs = join[meet[a * n + b] * n + meet[a * n + c]];
                if (lhs != rhs)
                    throw NotDistributiveError(
                        "distributivity fails at (" + p.name(a) + "," + p.name(b) + "," +
                            p.name(c) + ")",
                        {static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)});
            }

    return {p, bottom, top, std::move(meet), std::move(join)};
}

LatticePtr lattice_ptr_from_poset(const Poset& p) {
    return std::make_shared<const Lattice>(lattice_from_poset(p));
}

SmallSet join_irreducibles(const Lattice& l) {
    uint32_t n = l.size();
    SmallSet out = SmallSet::empty(n);
    for (uint32_t j = 0; j < n; ++j) {
        if (j == l.bottom()) continue;
        bool irreducible = true;
        for (uint32_t a = 0; a < n && irreducible; ++a)
            for (uint32_t b = 0; b < n && irreducible; ++b)
                if (l.join(a, b) == j && a != j && b != j) irreducible = false;
        if (irreducible) out.add(j);
    }
    return out;
}

SmallSet filter_generated(const Lattice& l, const SmallSet& s) {
    // The least filter over a finite lattice is the principal filter of the
    // meet of the generators; tests cross-check this against a fixpoint oracle.
    uint32_t c = l.meet_all(s);
    return {l.size(), l.poset().upset_of(c)};
}

SmallSet ideal_generated(const Lattice& l, const SmallSet& s) {
    uint32_t c = l.join_all(s);
    return {l.size(), l.poset().downset_of(c)};
}

bool is_filter(const Lattice& l, const SmallSet& s) {
    if (s.is_empty()) return false;
    for (uint32_t a : s.indices()) {
        if (l.poset().upset_of(a) & ~s.bits()) return false;
        for (uint32_t b : s.indices())
            if (!s.contains(l.meet(a, b))) return false;
    }
    return true;
}

bool is_proper_filter(const Lattice& l, const SmallSet& s) {
    return is_filter(l, s) && s.contains(l.top()) && !s.contains(l.bottom());
}

bool is_prime_filter(const Lattice& l, const SmallSet& s) {
    if (!is_proper_filter(l, s)) return false;
    for (uint32_t a = 0; a < l.size(); ++a)
        for (uint32_t b = 0; b < l.size(); ++b)
            if (s.contains(l.join(a, b)) && !s.contains(a) && !s.contains(b)) return false;
    return true;
}

}  // namespace proxkit
