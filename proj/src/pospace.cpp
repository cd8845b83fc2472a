#include "proxkit/pospace.hpp"

#include "proxkit/errors.hpp"
#include "proxkit/priestley.hpp"

namespace proxkit {

Subordination omega(const Poset& p) {
    UpsetLattice ul = upset_lattice(p);
    // Every subset of a finite space is compact, so an interpolant always
    // exists and the relation collapses to inclusion.
    return leq_subordination(ul.lattice);
}

SmallSet k_set(const Subordination& s, const RoundFilter& f) {
    if (!s.flags.is_proximity()) throw AxiomError("k_set requires a proximity relation");
    if (!is_proper_filter(*s.lattice, f.set))
        throw AxiomError("k_set requires a proper round filter");
    std::vector<End> end_list = ends(s);
    SmallSet out = SmallSet::empty(static_cast<uint32_t>(end_list.size()));
    for (uint32_t i = 0; i < end_list.size(); ++i)
        if (end_list[i].set.subset_of(f.set)) out.add(i);
    return out;
}

PospaceReport roundtrip_pospace(const Poset& p) {
    PospaceReport report;
    UpsetLattice ul = upset_lattice(p);
    Subordination s = leq_subordination(ul.lattice);
    std::vector<End> end_list = ends(s);

    if (end_list.size() != p.size()) {
        report.pass = false;
        report.detail = "expected " + std::to_string(p.size()) + " ends, found " +
                        std::to_string(end_list.size());
        return report;
    }

    report.point_to_end.assign(p.size(), 0);
    std::vector<bool> hit(end_list.size(), false);
    for (uint32_t pt = 0; pt < p.size(); ++pt) {
        // The point filter of pt: all upsets containing it.
        SmallSet filter = SmallSet::empty(ul.lattice->size());
        for (uint32_t e = 0; e < ul.lattice->size(); ++e)
            if ((ul.upset_of[e] >> pt) & 1) filter.add(e);
        bool found = false;
        for (uint32_t i = 0; i < end_list.size(); ++i)
            if (end_list[i].set == filter) {
                report.point_to_end[pt] = i;
                hit[i] = true;
                found = true;
                break;
            }
        if (!found) {
            report.pass = false;
            report.detail = "point filter of " + p.name(pt) + " is not an end";
            return report;
        }
    }
    for (bool h : hit)
        if (!h) {
            report.pass = false;
            report.detail = "some end is not a point filter";
            return report;
        }

    for (uint32_t a = 0; a < p.size() && report.pass; ++a)
        for (uint32_t b = 0; b < p.size(); ++b) {
            bool lhs = p.leq(a, b);
            bool rhs = end_list[report.point_to_end[a]].set.subset_of(
                end_list[report.point_to_end[b]].set);
            if (lhs != rhs) {
                report.pass = false;
                report.detail = "order mismatch at (" + p.name(a) + "," + p.name(b) + ")";
                break;
            }
        }
    return report;
}

}  // namespace proxkit
