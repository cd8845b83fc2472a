#include "proxkit/priestley.hpp"

#include <algorithm>

#include "proxkit/errors.hpp"

namespace proxkit {

std::vector<SmallSet> prime_filters(const Lattice& l) {
    // Every filter of a finite lattice is principal, so scanning the upsets
    // of single elements covers them all.
    std::vector<SmallSet> out;
    for (uint32_t c = 0; c < l.size(); ++c) {
        SmallSet f(l.size(), l.poset().upset_of(c));
        if (is_prime_filter(l, f)) out.push_back(f);
    }
    std::sort(out.begin(), out.end(),
              [](const SmallSet& a, const SmallSet& b) { return a.bits() < b.bits(); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

PriestleySpace priestley_dual(LatticePtr l) {
    PriestleySpace space;
    space.source = std::move(l);
    space.points = prime_filters(*space.source);

    uint32_t n = static_cast<uint32_t>(space.points.size());
    std::vector<std::string> names;
    std::vector<uint64_t> up(n, 0);
    for (uint32_t i = 0; i < n; ++i) {
        // A prime filter is the upset of its meet; label points by that element.
        names.push_back("^" + space.source->name(space.source->meet_all(space.points[i])));
        for (uint32_t j = 0; j < n; ++j)
            if (space.points[i].subset_of(space.points[j])) up[i] |= uint64_t{1} << j;
    }
    space.order = Poset(std::move(names), std::move(up));
    return space;
}

PriestleyPtr priestley_dual_ptr(LatticePtr l) {
    return std::make_shared<const PriestleySpace>(priestley_dual(std::move(l)));
}

SmallSet eta(const PriestleySpace& x, uint32_t a) {
    if (a >= x.source->size()) throw IndexError("eta: element out of range");
    SmallSet out = SmallSet::empty(x.size());
    for (uint32_t i = 0; i < x.size(); ++i)
        if (x.points[i].contains(a)) out.add(i);
    return out;
}

uint32_t UpsetLattice::index_of(uint64_t mask) const {
    auto it = std::lower_bound(upset_of.begin(), upset_of.end(), mask);
    if (it == upset_of.end() || *it != mask)
        throw IndexError("point set is not an upset of the carrier");
    return static_cast<uint32_t>(it - upset_of.begin());
}

namespace {

UpsetLattice upset_lattice_impl(const Poset& x, const std::vector<uint64_t>& masks,
                                const std::string& label_prefix) {
    uint32_t n = static_cast<uint32_t>(masks.size());
    if (n > 64) throw SizeError("upset lattice exceeds the 64-element carrier cap");

    std::vector<std::string> names;
    names.reserve(n);
    for (uint64_t m : masks) {
        std::string label = label_prefix + "{";
        bool first = true;
        for (uint64_t b = m; b != 0; b &= b - 1) {
            if (!first) label += ",";
            label += x.name(static_cast<uint32_t>(std::countr_zero(b)));
            first = false;
        }
        names.push_back(label + "}");
    }

    std::vector<uint64_t> up(n, 0);
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j)
            if ((masks[i] & ~masks[j]) == 0) up[i] |= uint64_t{1} << j;
    Poset order(std::move(names), std::move(up));

    auto index_of = [&](uint64_t m) {
        return static_cast<uint8_t>(std::lower_bound(masks.begin(), masks.end(), m) -
                                    masks.begin());
    };
    std::vector<uint8_t> meet(size_t{n} * n), join(size_t{n} * n);
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j) {
            meet[i * n + j] = index_of(masks[i] & masks[j]);
            join[i * n + j] = index_of(masks[i] | masks[j]);
        }

    UpsetLattice out;
    out.lattice = std::make_shared<const Lattice>(
        Lattice(std::move(order), index_of(0), index_of(masks.back()), std::move(meet),
                std::move(join)));
    out.upset_of = masks;
    return out;
}

}  // namespace

UpsetLattice upset_lattice(const Poset& x) {
    return upset_lattice_impl(x, x.all_upsets(), "");
}

UpsetLattice downset_lattice(const Poset& x) {
    return upset_lattice_impl(x, x.all_downsets(), "v");
}

BirkhoffReport birkhoff_check(LatticePtr l) {
    BirkhoffReport report;
    PriestleySpace space = priestley_dual(l);
    UpsetLattice ul = upset_lattice(space.order);

    uint32_t n = l->size();
    if (ul.lattice->size() != n) {
        report.pass = false;
        report.detail = "upset count " + std::to_string(ul.lattice->size()) +
                        " differs from lattice size " + std::to_string(n);
        return report;
    }

    report.element_to_upset.resize(n);
    report.upset_to_element.assign(n, n);
    for (uint32_t a = 0; a < n; ++a) {
        uint32_t idx;
        try {
            idx = ul.index_of(eta(space, a).bits());
        } catch (const IndexError&) {
            report.pass = false;
            report.detail = "eta(" + l->name(a) + ") is not an upset of the dual";
            return report;
        }
        report.element_to_upset[a] = idx;
        if (report.upset_to_element[idx] != n) {
            report.pass = false;
            report.detail = "eta is not injective at " + l->name(a);
            return report;
        }
        report.upset_to_element[idx] = a;
    }

    auto expect = [&](bool cond, const std::string& what) {
        if (!cond && report.pass) {
            report.pass = false;
            report.detail = what;
        }
    };
    expect(report.element_to_upset[l->bottom()] == ul.lattice->bottom(),
           "eta does not send bottom to the empty upset");
    expect(report.element_to_upset[l->top()] == ul.lattice->top(),
           "eta does not send top to the full upset");
    for (uint32_t a = 0; a < n && report.pass; ++a)
        for (uint32_t b = 0; b < n && report.pass; ++b) {
            expect(report.element_to_upset[l->meet(a, b)] ==
                       ul.lattice->meet(report.element_to_upset[a], report.element_to_upset[b]),
                   "eta does not preserve meet at (" + l->name(a) + "," + l->name(b) + ")");
            expect(report.element_to_upset[l->join(a, b)] ==
                       ul.lattice->join(report.element_to_upset[a], report.element_to_upset[b]),
                   "eta does not preserve join at (" + l->name(a) + "," + l->name(b) + ")");
            expect(l->leq(a, b) == ul.lattice->leq(report.element_to_upset[a],
                                                   report.element_to_upset[b]),
                   "eta does not reflect order at (" + l->name(a) + "," + l->name(b) + ")");
        }
    return report;
}

}  // namespace proxkit
