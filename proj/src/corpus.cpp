#include "proxkit/corpus.hpp"

#include <bit>

#include "proxkit/errors.hpp"
#include "proxkit/priestley.hpp"

namespace proxkit {

Poset chain_poset(uint32_t n) {
    std::vector<std::string> names;
    std::vector<uint64_t> up(n, 0);
    for (uint32_t i = 0; i < n; ++i) {
        if (i == 0)
            names.push_back("0");
        else if (i + 1 == n)
            names.push_back("1");
        else
            names.push_back(n == 3 ? "m" : "m" + std::to_string(i));
        for (uint32_t j = i; j < n; ++j) up[i] |= uint64_t{1} << j;
    }
    if (n == 1) names[0] = "*";
    return {std::move(names), std::move(up)};
}

Poset antichain_poset(uint32_t n) {
    std::vector<uint64_t> up(n, 0);
    for (uint32_t i = 0; i < n; ++i) up[i] = uint64_t{1} << i;
    return {default_names(n, "p"), std::move(up)};
}

Poset boolean_poset(uint32_t atoms) {
    if (atoms > 6) throw SizeError("boolean posets capped at 6 atoms");
    uint32_t n = uint32_t{1} << atoms;
    std::vector<std::string> names;
    for (uint32_t m = 0; m < n; ++m) {
        if (m == 0) {
            names.push_back("0");
        } else if (m == n - 1) {
            names.push_back("1");
        } else {
            std::string label;
            for (uint32_t a = 0; a < atoms; ++a)
                if ((m >> a) & 1) label += static_cast<char>('a' + a);
            names.push_back(label);
        }
    }
    std::vector<uint64_t> up(n, 0);
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j)
            if ((i & ~j) == 0) up[i] |= uint64_t{1} << j;
    return {std::move(names), std::move(up)};
}

Poset m3_poset() {
    return close_order({{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}, 5,
                       {"0", "x", "y", "z", "1"});
}

Poset n5_poset() {
    return close_order({{0, 1}, {1, 3}, {0, 2}, {2, 4}, {3, 4}}, 5, {"0", "a", "b", "c", "1"});
}

LatticePtr chain_lattice(uint32_t n) { return lattice_ptr_from_poset(chain_poset(n)); }
LatticePtr boolean_lattice(uint32_t atoms) {
    return lattice_ptr_from_poset(boolean_poset(atoms));
}

std::vector<NamedLattice> corpus_lattices() {
    std::vector<NamedLattice> out;
    for (uint32_t n = 1; n <= 5; ++n)
        out.push_back({"C" + std::to_string(n), chain_lattice(n)});
    out.push_back({"B2", boolean_lattice(2)});
    out.push_back({"B3", boolean_lattice(3)});
    for (uint32_t n = 0; n <= 3; ++n) {
        uint32_t idx = 0;
        for (const Poset& p : all_posets(n))
            out.push_back({"D" + std::to_string(n) + "_" + std::to_string(idx++),
                           downset_lattice(p).lattice});
    }
    return out;
}

std::vector<Poset> all_posets(uint32_t n) {
    if (n > 5) throw SizeError("poset enumeration capped at 5 points");
    std::vector<Poset> out;
    if (n == 0) {
        out.push_back(Poset({}, {}));
        return out;
    }

    // Scan the strict part (off-diagonal bits) in ascending mask order.
    uint32_t offdiag = n * n - n;
    for (uint64_t mask = 0; mask < (uint64_t{1} << offdiag); ++mask) {
        std::vector<uint64_t> up(n, 0);
        uint32_t bit = 0;
        for (uint32_t i = 0; i < n; ++i) {
            up[i] |= uint64_t{1} << i;
            for (uint32_t j = 0; j < n; ++j) {
                if (i == j) continue;
                if ((mask >> bit) & 1) up[i] |= uint64_t{1} << j;
                ++bit;
            }
        }
        bool ok = true;
        for (uint32_t i = 0; i < n && ok; ++i)
            for (uint32_t j = 0; j < n && ok; ++j) {
                if (i != j && ((up[i] >> j) & 1) && ((up[j] >> i) & 1)) ok = false;  // antisym
                if (((up[i] >> j) & 1) && (up[j] & ~up[i]) != 0) ok = false;         // trans
            }
        if (ok) out.push_back(Poset(default_names(n, "p"), std::move(up)));
    }
    return out;
}

std::vector<NamedLattice> small_distributive_lattices(uint32_t max_points,
                                                      uint32_t max_size) {
    std::vector<NamedLattice> out;
    for (uint32_t n = 0; n <= max_points; ++n) {
        uint32_t idx = 0;
        for (const Poset& p : all_posets(n)) {
            UpsetLattice dl = downset_lattice(p);
            if (dl.lattice->size() <= max_size)
                out.push_back({"D" + std::to_string(n) + "_" + std::to_string(idx),
                               dl.lattice});
            ++idx;
        }
    }
    return out;
}

}  // namespace proxkit
