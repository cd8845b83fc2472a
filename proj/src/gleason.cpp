#include "proxkit/gleason.hpp"

#include <algorithm>

#include "proxkit/errors.hpp"

namespace proxkit {

namespace {

std::string point_list(const Poset& order, const SmallSet& s) {
    std::string out = "{";
    bool first = true;
    for (uint32_t i : s.indices()) {
        if (!first) out += ",";
        out += order.name(i);
        first = false;
    }
    return out + "}";
}

}  // namespace

GleasonFlags check_gleason_axioms(const GleasonSpace& g) {
    GleasonFlags flags;
    const Poset& p = g.order;
    const Rel& r = g.r;
    uint32_t n = p.size();

    flags.closed = CheckResult::ok();
    flags.closed.detail = "automatic: finite patch topology is discrete";

    // Item 2: x <= y R z <= t implies x R t.
    for (uint32_t x = 0; x < n && flags.compat.pass; ++x)
        for (uint32_t y = 0; y < n && flags.compat.pass; ++y) {
            if (!p.leq(x, y)) continue;
            for (uint32_t z = 0; z < n && flags.compat.pass; ++z) {
                if (!r.at(y, z)) continue;
                for (uint32_t t = 0; t < n; ++t)
                    if (p.leq(z, t) && !r.at(x, t)) {
                        flags.compat = CheckResult::fail(
                            {static_cast<int>(x), static_cast<int>(y), static_cast<int>(z),
                             static_cast<int>(t)},
                            p.name(x) + " <= " + p.name(y) + " R " + p.name(z) + " <= " +
                                p.name(t) + " but not " + p.name(x) + " R " + p.name(t));
                        break;
                    }
            }
        }

    // Item 2': x <= y implies x R y.
    for (uint32_t x = 0; x < n && flags.contains_leq.pass; ++x)
        for (uint32_t y = 0; y < n; ++y)
            if (p.leq(x, y) && !r.at(x, y)) {
                flags.contains_leq = CheckResult::fail(
                    {static_cast<int>(x), static_cast<int>(y)},
                    p.name(x) + " <= " + p.name(y) + " but not " + p.name(x) + " R " +
                        p.name(y));
                break;
            }

    // Item 3: pre-order.
    for (uint32_t x = 0; x < n && flags.preorder.pass; ++x)
        if (!r.at(x, x))
            flags.preorder =
                CheckResult::fail({static_cast<int>(x)}, "R is not reflexive at " + p.name(x));
    for (uint32_t x = 0; x < n && flags.preorder.pass; ++x)
        for (uint32_t y = 0; y < n && flags.preorder.pass; ++y) {
            if (!r.at(x, y)) continue;
            for (uint32_t z = 0; z < n; ++z)
                if (r.at(y, z) && !r.at(x, z)) {
                    flags.preorder = CheckResult::fail(
                        {static_cast<int>(x), static_cast<int>(y), static_cast<int>(z)},
                        p.name(x) + " R " + p.name(y) + " R " + p.name(z) + " but not " +
                            p.name(x) + " R " + p.name(z));
                    break;
                }
        }

    // Item 4: O = R[-, O^c]^c for every upset O (closure is the identity).
    for (uint64_t mask : p.all_upsets()) {
        SmallSet o(n, mask);
        SmallSet rebuilt = r.pre_image(o.complement()).complement();
        if (!(rebuilt == o)) {
            std::vector<int> w;
            for (uint32_t i : o.indices()) w.push_back(static_cast<int>(i));
            flags.saturation = CheckResult::fail(
                w, "upset " + point_list(p, o) + " rebuilds to " + point_list(p, rebuilt));
            break;
        }
    }
    return flags;
}

GleasonSpace relation_from_subordination(const Subordination& s) {
    if (!s.flags.is_subordination())
        throw AxiomError("relation_from_subordination requires S1-S4 to hold");

    GleasonSpace g;
    g.space = priestley_dual(s.lattice);
    g.order = g.space->order;
    uint32_t n = g.space->size();
    g.r = Rel(n);
    for (uint32_t x = 0; x < n; ++x) {
        SmallSet up = up_arrow(s, g.space->points[x]);
        for (uint32_t y = 0; y < n; ++y)
            if (up.subset_of(g.space->points[y])) g.r.set(x, y);
    }
    return g;
}

Subordination subordination_from_relation(const GleasonSpace& g) {
    UpsetLattice ul = upset_lattice(g.order);
    uint32_t n = ul.lattice->size();
    Rel rel(n);
    for (uint32_t o = 0; o < n; ++o) {
        SmallSet forward = g.r.image(SmallSet(g.size(), ul.upset_of[o]));
        for (uint32_t u = 0; u < n; ++u)
            if ((forward.bits() & ~ul.upset_of[u]) == 0) rel.set(o, u);
    }
    return make_subordination(ul.lattice, std::move(rel));
}

SmallSet r_image(const GleasonSpace& g, const SmallSet& e) { return g.r.image(e); }
SmallSet r_preimage(const GleasonSpace& g, const SmallSet& e) { return g.r.pre_image(e); }

SmallSet r_minimals_in(const GleasonSpace& g, const SmallSet& f) {
    if (!g.r.preorder()) throw PreorderError("r_minimals_in requires R to be a pre-order");
    SmallSet out = SmallSet::empty(g.size());
    for (uint32_t x : f.indices()) {
        bool minimal = true;
        for (uint32_t y : f.indices())
            if (g.r.at(y, x) && !g.r.at(x, y)) {
                minimal = false;
                break;
            }
        if (minimal) out.add(x);
    }
    return out;
}

QuotientPospace quotient(const GleasonSpace& g) {
    if (!g.r.preorder()) throw PreorderError("quotient requires R to be a pre-order");
    uint32_t n = g.size();

    QuotientPospace q;
    q.class_of.assign(n, n);
    for (uint32_t x = 0; x < n; ++x) {
        if (q.class_of[x] != n) continue;
        uint32_t k = static_cast<uint32_t>(q.classes.size());
        std::vector<uint32_t> members;
        for (uint32_t y = 0; y < n; ++y)
            if (g.r.at(x, y) && g.r.at(y, x)) {
                q.class_of[y] = k;
                members.push_back(y);
            }
        q.classes.push_back(std::move(members));
    }

    uint32_t m = static_cast<uint32_t>(q.classes.size());
    // The order must not depend on the chosen representatives.
    for (uint32_t i = 0; i < m; ++i)
        for (uint32_t j = 0; j < m; ++j) {
            bool expected = g.r.at(q.classes[i][0], q.classes[j][0]);
            for (uint32_t x : q.classes[i])
                for (uint32_t y : q.classes[j])
                    if (g.r.at(x, y) != expected)
                        throw PreorderError("quotient order is not representative-independent");
        }

    std::vector<std::string> names;
    std::vector<uint64_t> up(m, 0);
    for (uint32_t i = 0; i < m; ++i) {
        SmallSet members = SmallSet::empty(n);
        for (uint32_t x : q.classes[i]) members.add(x);
        names.push_back(point_list(g.order, members));
        for (uint32_t j = 0; j < m; ++j)
            if (g.r.at(q.classes[i][0], q.classes[j][0])) up[i] |= uint64_t{1} << j;
    }
    for (uint32_t i = 0; i < m; ++i)
        for (uint32_t j = i + 1; j < m; ++j)
            if (((up[i] >> j) & 1) && ((up[j] >> i) & 1))
                throw PreorderError("quotient order is not antisymmetric");
    q.order = Poset(std::move(names), std::move(up));
    return q;
}

SmallSet phi(const GleasonSpace& g, const RoundFilter& f) {
    if (!g.space) throw AxiomError("phi requires the dual of a subordination");
    const PriestleySpace& space = *g.space;
    if (f.set.universe() != space.source->size())
        throw IndexError("filter carrier does not match the source lattice");
    if (!is_proper_filter(*space.source, f.set))
        throw AxiomError("phi requires a proper filter");
    SmallSet out = SmallSet::empty(g.size());
    for (uint32_t x = 0; x < g.size(); ++x)
        if (f.set.subset_of(space.points[x])) out.add(x);
    return out;
}

RoundFilter phi_inverse(const GleasonSpace& g, const SmallSet& c) {
    if (!g.space) throw AxiomError("phi_inverse requires the dual of a subordination");
    const PriestleySpace& space = *g.space;
    if (c.universe() != g.size()) throw IndexError("point set carrier mismatch");
    if (!r_image(g, c).subset_of(c))
        throw NotRIncreasingError("point set is not R-increasing");
    if (c.is_empty())
        throw NotRIncreasingError(
            "the empty set corresponds to no proper filter; phi_inverse is defined on "
            "nonempty R-increasing sets");

    SmallSet filter = SmallSet::full(space.source->size());
    for (uint32_t x : c.indices()) filter = filter & space.points[x];
    return {filter};
}

SigmaReport sigma_check(const GleasonSpace& g, const Subordination& s) {
    SigmaReport report;
    if (!s.flags.is_proximity()) throw AxiomError("sigma_check requires a proximity relation");
    if (!g.space || g.space->source->size() != s.lattice->size())
        throw IndexError("gleason space is not the dual of this subordination");
    {
        GleasonSpace expected = relation_from_subordination(s);
        if (!(expected.r == g.r) || !(expected.order == g.order))
            throw IndexError("gleason space is not the dual of this subordination");
    }

    const PriestleySpace& space = *g.space;
    QuotientPospace q = quotient(g);
    std::vector<End> end_list = ends(s);

    auto end_index = [&](const SmallSet& set) -> int {
        for (uint32_t i = 0; i < end_list.size(); ++i)
            if (end_list[i].set == set) return static_cast<int>(i);
        return -1;
    };

    uint32_t m = q.size();
    report.sigma.assign(m, 0);
    for (uint32_t k = 0; k < m && report.well_defined.pass; ++k) {
        SmallSet image = up_arrow(s, space.points[q.classes[k][0]]);
        for (uint32_t x : q.classes[k])
            if (!(up_arrow(s, space.points[x]) == image)) {
                report.well_defined = CheckResult::fail(
                    {static_cast<int>(k)}, "class " + q.order.name(k) +
                                               " has representatives with different images");
                break;
            }
        int idx = end_index(image);
        if (idx < 0) {
            report.well_defined = CheckResult::fail(
                {static_cast<int>(k)},
                "image of class " + q.order.name(k) + " is not an end");
            break;
        }
        report.sigma[k] = static_cast<uint32_t>(idx);
    }

    if (report.well_defined.pass) {
        std::vector<bool> hit(end_list.size(), false);
        for (uint32_t k = 0; k < m; ++k) {
            if (hit[report.sigma[k]]) {
                report.bijective =
                    CheckResult::fail({static_cast<int>(k)}, "sigma is not injective");
                break;
            }
            hit[report.sigma[k]] = true;
        }
        if (report.bijective.pass && m != end_list.size())
            report.bijective = CheckResult::fail(
                {}, "quotient has " + std::to_string(m) + " classes but there are " +
                        std::to_string(end_list.size()) + " ends");
    }

    if (report.well_defined.pass && report.bijective.pass)
        for (uint32_t i = 0; i < m && report.order_iso.pass; ++i)
            for (uint32_t j = 0; j < m; ++j) {
                bool lhs = q.order.leq(i, j);
                bool rhs = end_list[report.sigma[i]].set.subset_of(end_list[report.sigma[j]].set);
                if (lhs != rhs) {
                    report.order_iso = CheckResult::fail(
                        {static_cast<int>(i), static_cast<int>(j)},
                        "quotient order and end inclusion disagree at (" + q.order.name(i) +
                            "," + q.order.name(j) + ")");
                    break;
                }
            }

    // F_p = R[x,-] for the unique class of R-minimal points of F_p.
    for (uint32_t e = 0; e < end_list.size() && report.minimal_witness.pass; ++e) {
        SmallSet fp = phi(g, RoundFilter{end_list[e].set});
        SmallSet minimals = r_minimals_in(g, fp);
        if (minimals.is_empty() && !fp.is_empty()) {
            report.minimal_witness = CheckResult::fail(
                {static_cast<int>(e)}, "no R-minimal point in F_p for end " +
                                           s.lattice->set_label(end_list[e].set));
            break;
        }
        if (fp.is_empty()) continue;
        uint32_t klass = q.class_of[minimals.indices()[0]];
        for (uint32_t x : minimals.indices()) {
            if (q.class_of[x] != klass) {
                report.minimal_witness = CheckResult::fail(
                    {static_cast<int>(e)}, "R-minimal points of F_p span several classes");
                break;
            }
            if (!(r_image(g, SmallSet::single(g.size(), x)) == fp)) {
                report.minimal_witness = CheckResult::fail(
                    {static_cast<int>(e), static_cast<int>(x)},
                    "R[" + g.order.name(x) + ",-] differs from F_p");
                break;
            }
        }
    }

    // Subbase identity: the projection preimage of sigma^{-1}(mu(a)) equals
    // the union of eta(b) over b prec a.
    bool sigma_usable = report.well_defined.pass && report.bijective.pass;
    for (uint32_t a = 0; sigma_usable && a < s.lattice->size() && report.subbase.pass; ++a) {
        SmallSet lhs = SmallSet::empty(g.size());
        for (uint32_t x = 0; x < g.size(); ++x)
            if (end_list[report.sigma[q.class_of[x]]].set.contains(a)) lhs.add(x);
        SmallSet rhs = SmallSet::empty(g.size());
        for (uint32_t b = 0; b < s.lattice->size(); ++b)
            if (s.prec(b, a)) rhs = rhs | eta(space, b);
        if (!(lhs == rhs))
            report.subbase = CheckResult::fail(
                {static_cast<int>(a)},
                "subbase identity fails at " + s.lattice->name(a));
    }

    report.pass = report.well_defined.pass && report.bijective.pass && report.order_iso.pass &&
                  report.minimal_witness.pass && report.subbase.pass;
    if (!report.pass) report.detail = "sigma is not an isomorphism";
    return report;
}

}  // namespace proxkit
