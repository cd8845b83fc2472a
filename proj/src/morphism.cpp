#include "proxkit/morphism.hpp"

#include <algorithm>

#include "proxkit/errors.hpp"

namespace proxkit {

namespace {

// h^{-1}(S) over the source lattice.
SmallSet preimage_of(const HemiMorphism& h, const SmallSet& s) {
    SmallSet out = SmallSet::empty(h.source->size());
    for (uint32_t a = 0; a < h.source->size(); ++a)
        if (s.contains(h.map[a])) out.add(a);
    return out;
}

void validate_map(const HemiMorphism& h) {
    if (h.map.size() != h.source->size()) throw IndexError("map table size mismatch");
    for (uint32_t v : h.map)
        if (v >= h.target->size()) throw IndexError("map value out of range");
}

}  // namespace

CheckResult check_h(const HemiMorphism& h, HAxiom which, const Subordination* src,
                    const Subordination* tgt) {
    validate_map(h);
    const Lattice& l = *h.source;
    const Lattice& m = *h.target;

    if (which == HAxiom::H0) {
        if (h.map[l.top()] != m.top())
            return CheckResult::fail({static_cast<int>(l.top())}, "h(1) is not 1");
        if (h.map[l.bottom()] != m.bottom())
            return CheckResult::fail({static_cast<int>(l.bottom())}, "h(0) is not 0");
        for (uint32_t a = 0; a < l.size(); ++a)
            for (uint32_t b = 0; b < l.size(); ++b)
                if (h.map[l.meet(a, b)] != m.meet(h.map[a], h.map[b]))
                    return CheckResult::fail(
                        {static_cast<int>(a), static_cast<int>(b)},
                        "h(" + l.name(a) + " meet " + l.name(b) + ") differs from h(" +
                            l.name(a) + ") meet h(" + l.name(b) + ")");
        return CheckResult::ok();
    }

    if (src == nullptr || tgt == nullptr)
        throw HError("H1/H2 need the subordinations on both sides");
    if (src->lattice->size() != l.size() || tgt->lattice->size() != m.size())
        throw IndexError("subordination carriers do not match the map");

    if (which == HAxiom::H1) {
        for (uint32_t a1 = 0; a1 < l.size(); ++a1)
            for (uint32_t a2 = 0; a2 < l.size(); ++a2)
                for (uint32_t b1 = 0; b1 < l.size(); ++b1) {
                    if (!src->prec(a1, b1)) continue;
                    for (uint32_t b2 = 0; b2 < l.size(); ++b2) {
                        if (!src->prec(a2, b2)) continue;
                        uint32_t lhs = h.map[l.join(a1, a2)];
                        uint32_t rhs = m.join(h.map[b1], h.map[b2]);
                        if (!tgt->prec(lhs, rhs))
                            return CheckResult::fail(
                                {static_cast<int>(a1), static_cast<int>(a2),
                                 static_cast<int>(b1), static_cast<int>(b2)},
                                "h(" + l.name(a1) + " join " + l.name(a2) + ") = " +
                                    m.name(lhs) + " is not prec " + m.name(rhs));
                    }
                }
        return CheckResult::ok();
    }

    // H2: h(a) is the join of h(b) over b prec a.
    for (uint32_t a = 0; a < l.size(); ++a) {
        uint32_t acc = m.bottom();
        for (uint32_t b = 0; b < l.size(); ++b)
            if (src->prec(b, a)) acc = m.join(acc, h.map[b]);
        if (acc != h.map[a])
            return CheckResult::fail(
                {static_cast<int>(a), static_cast<int>(acc)},
                "join of h(b) over b prec " + l.name(a) + " is " + m.name(acc) + ", not " +
                    m.name(h.map[a]));
    }
    return CheckResult::ok();
}

bool is_strong_meet_hemimorphism(const HemiMorphism& h) {
    return check_h(h, HAxiom::H0).pass;
}

HemiConditionFlags check_hemi_conditions(const PriestleySpace& rows,
                                         const PriestleySpace& cols, const BiRel& rel) {
    HemiConditionFlags flags;
    uint32_t ny = rows.size(), nx = cols.size();

    flags.c2 = CheckResult::ok();
    flags.c2.detail = "automatic: finite patch topology is discrete";

    // Condition 1: y1 <= y2 rho x1 <= x2 implies y1 rho x2.
    for (uint32_t y1 = 0; y1 < ny && flags.c1.pass; ++y1)
        for (uint32_t y2 = 0; y2 < ny && flags.c1.pass; ++y2) {
            if (!rows.order.leq(y1, y2)) continue;
            for (uint32_t x1 = 0; x1 < nx && flags.c1.pass; ++x1) {
                if (!rel.at(y2, x1)) continue;
                for (uint32_t x2 = 0; x2 < nx; ++x2)
                    if (cols.order.leq(x1, x2) && !rel.at(y1, x2)) {
                        flags.c1 = CheckResult::fail(
                            {static_cast<int>(y1), static_cast<int>(y2), static_cast<int>(x1),
                             static_cast<int>(x2)},
                            rows.order.name(y1) + " <= " + rows.order.name(y2) + " rho " +
                                cols.order.name(x1) + " <= " + cols.order.name(x2) +
                                " but the pair (" + rows.order.name(y1) + "," +
                                cols.order.name(x2) + ") is missing");
                        break;
                    }
            }
        }

    // Condition 3: rho[-, O^c]^c is an upset of the row space for every upset O.
    for (uint64_t mask : cols.order.all_upsets()) {
        SmallSet o(nx, mask);
        SmallSet s = rel.pre_image(o.complement()).complement();
        if (!rows.order.is_upset(s.bits())) {
            std::vector<int> w;
            std::string names;
            for (uint32_t i : o.indices()) {
                w.push_back(static_cast<int>(i));
                names += (names.empty() ? "" : ",") + cols.order.name(i);
            }
            flags.c3 = CheckResult::fail(
                w, "rho[-,O^c]^c is not an upset of the row space for O = {" + names + "}");
            break;
        }
    }

    // Condition 4: every row point sees someone.
    for (uint32_t y = 0; y < ny; ++y)
        if (rel.row_set(y).is_empty()) {
            flags.c4 = CheckResult::fail({static_cast<int>(y)},
                                         "rho[" + rows.order.name(y) + ",-] is empty");
            break;
        }
    return flags;
}

HemiRelation relation_from_hemimorphism(const HemiMorphism& h) {
    CheckResult h0 = check_h(h, HAxiom::H0);
    if (!h0.pass) throw HError("relation_from_hemimorphism requires H0: " + h0.detail);

    HemiRelation rho;
    rho.row_space = priestley_dual_ptr(h.target);
    rho.col_space = priestley_dual_ptr(h.source);
    rho.rel = BiRel(rho.row_space->size(), rho.col_space->size());
    for (uint32_t y = 0; y < rho.row_space->size(); ++y) {
        SmallSet pre = preimage_of(h, rho.row_space->points[y]);
        for (uint32_t x = 0; x < rho.col_space->size(); ++x)
            if (pre.subset_of(rho.col_space->points[x])) rho.rel.set(y, x);
    }
    rho.flags = check_hemi_conditions(*rho.row_space, *rho.col_space, rho.rel);
    return rho;
}

HemiMorphism hemimorphism_from_relation(const HemiRelation& rho) {
    const PriestleySpace& rows = *rho.row_space;
    const PriestleySpace& cols = *rho.col_space;
    const Lattice& l = *cols.source;
    const Lattice& m = *rows.source;

    // eta is a bijection onto the upsets of the row space.
    std::vector<std::pair<uint64_t, uint32_t>> eta_index;
    for (uint32_t b = 0; b < m.size(); ++b)
        eta_index.emplace_back(eta(rows, b).bits(), b);
    std::sort(eta_index.begin(), eta_index.end());

    HemiMorphism h{cols.source, rows.source, {}};
    h.map.resize(l.size());
    for (uint32_t a = 0; a < l.size(); ++a) {
        SmallSet s = rho.rel.pre_image(eta(cols, a).complement()).complement();
        auto it = std::lower_bound(eta_index.begin(), eta_index.end(),
                                   std::make_pair(s.bits(), uint32_t{0}));
        if (it == eta_index.end() || it->first != s.bits())
            throw NotClopenUpsetError("rho[-,eta(" + l.name(a) +
                                      ")^c]^c is not a clopen upset; a hemirelation "
                                      "condition is violated");
        h.map[a] = it->second;
    }
    if (!is_strong_meet_hemimorphism(h))
        throw NotClopenUpsetError(
            "the recovered table is not a strong meet-hemimorphism; a hemirelation "
            "condition is violated");
    return h;
}

CheckResult check_ofc(const HemiRelation& rho, const GleasonSpace& col_gleason,
                      const GleasonSpace& row_gleason) {
    if (row_gleason.size() != rho.rel.rows() || col_gleason.size() != rho.rel.cols())
        throw IndexError("gleason carriers do not match the hemirelation");
    if (!row_gleason.r.preorder() || !col_gleason.r.preorder())
        throw PreorderError("check_ofc requires both relations to be pre-orders");

    uint32_t ny = rho.rel.rows();
    for (uint32_t y1 = 0; y1 < ny; ++y1) {
        SmallSet minimals = r_minimals_in(col_gleason, rho.row_image(y1));
        for (uint32_t y2 = 0; y2 < ny; ++y2) {
            if (!row_gleason.r.at(y1, y2)) continue;
            for (uint32_t x1 : minimals.indices())
                for (uint32_t x2 : rho.row_image(y2).indices())
                    if (!col_gleason.r.at(x1, x2))
                        return CheckResult::fail(
                            {static_cast<int>(y1), static_cast<int>(y2), static_cast<int>(x1),
                             static_cast<int>(x2)},
                            row_gleason.order.name(y1) + " R " + row_gleason.order.name(y2) +
                                " with minimal " + col_gleason.order.name(x1) +
                                " but not " + col_gleason.order.name(x1) + " R " +
                                col_gleason.order.name(x2));
        }
    }
    return CheckResult::ok();
}

CheckResult check_dvc(const HemiRelation& rho, const GleasonSpace& col_gleason) {
    if (col_gleason.size() != rho.rel.cols())
        throw IndexError("gleason carrier does not match the hemirelation");
    uint32_t nx = rho.rel.cols();
    for (uint64_t mask : col_gleason.order.all_upsets()) {
        SmallSet oc = SmallSet(nx, mask).complement();
        SmallSet lhs = rho.rel.pre_image(oc);
        SmallSet rhs = rho.rel.pre_image(r_preimage(col_gleason, oc));
        if (!(lhs == rhs)) {
            std::vector<int> w;
            for (uint32_t i : SmallSet(nx, mask).indices()) w.push_back(static_cast<int>(i));
            CheckResult r = CheckResult::fail(w, "");
            r.detail = "rho[-,O^c] and rho[-,R[-,O^c]] differ for an upset O";
            return r;
        }
    }
    return CheckResult::ok();
}

namespace {

void require_proximity_morphism(const HemiMorphism& h, const Subordination& src,
                                const Subordination& tgt, const char* who) {
    CheckResult h0 = check_h(h, HAxiom::H0);
    if (!h0.pass) throw HError(std::string(who) + ": H0 fails: " + h0.detail);
    CheckResult h1 = check_h(h, HAxiom::H1, &src, &tgt);
    if (!h1.pass) throw HError(std::string(who) + ": H1 fails: " + h1.detail);
    CheckResult h2 = check_h(h, HAxiom::H2, &src, &tgt);
    if (!h2.pass) throw HError(std::string(who) + ": H2 fails: " + h2.detail);
}

}  // namespace

HemiMorphism star(const HemiMorphism& h1, const HemiMorphism& h2, const Subordination& s_l,
                  const Subordination& s_m, const Subordination& s_n) {
    if (h1.target->size() != h2.source->size())
        throw IndexError("star: middle carriers do not match");
    require_proximity_morphism(h1, s_l, s_m, "star(h1)");
    require_proximity_morphism(h2, s_m, s_n, "star(h2)");

    const Lattice& l = *h1.source;
    const Lattice& n = *h2.target;
    HemiMorphism out{h1.source, h2.target, {}};
    out.map.resize(l.size());
    for (uint32_t a = 0; a < l.size(); ++a) {
        uint32_t acc = n.bottom();
        for (uint32_t b = 0; b < l.size(); ++b)
            if (s_l.prec(b, a)) acc = n.join(acc, h2.map[h1.map[b]]);
        out.map[a] = acc;
    }
    return out;
}

HemiRelation compose_hemirelations(const HemiRelation& rho1, const HemiRelation& rho2,
                                   const Subordination& s_l, const Subordination& s_m,
                                   const Subordination& s_n) {
    if (rho1.row_space->size() != rho2.col_space->size())
        throw IndexError("compose: middle carriers do not match");
    HemiMorphism h1 = hemimorphism_from_relation(rho1);
    HemiMorphism h2 = hemimorphism_from_relation(rho2);
    return relation_from_hemimorphism(star(h1, h2, s_l, s_m, s_n));
}

std::vector<uint32_t> ends_map(const HemiMorphism& h, const Subordination& s_src,
                               const Subordination& s_tgt) {
    if (!s_src.flags.is_proximity() || !s_tgt.flags.is_proximity())
        throw HError("ends_map requires proximity relations on both sides");
    require_proximity_morphism(h, s_src, s_tgt, "ends_map");

    std::vector<End> src_ends = ends(s_src);
    std::vector<End> tgt_ends = ends(s_tgt);
    std::vector<uint32_t> out;
    out.reserve(tgt_ends.size());
    for (const End& p : tgt_ends) {
        SmallSet image = up_arrow(s_src, preimage_of(h, p.set));
        bool found = false;
        for (uint32_t i = 0; i < src_ends.size(); ++i)
            if (src_ends[i].set == image) {
                out.push_back(i);
                found = true;
                break;
            }
        if (!found)
            throw NotAnEndError("up_arrow(h^{-1}(p)) is not an end for p = " +
                                s_tgt.lattice->set_label(p.set));
    }
    return out;
}

XiMap xi_map(const HemiRelation& rho, const GleasonSpace& row_gleason,
             const GleasonSpace& col_gleason) {
    if (!rho.flags.strong())
        throw ConditionError("xi_map requires hemirelation conditions 1-4");
    CheckResult ofc = check_ofc(rho, col_gleason, row_gleason);
    if (!ofc.pass) throw ConditionError("xi_map requires the ofc: " + ofc.detail);
    CheckResult dvc = check_dvc(rho, col_gleason);
    if (!dvc.pass) throw ConditionError("xi_map requires the dvc: " + dvc.detail);

    XiMap out;
    out.row_quotient = quotient(row_gleason);
    out.col_quotient = quotient(col_gleason);
    out.map.assign(out.row_quotient.size(), 0);

    for (uint32_t k = 0; k < out.row_quotient.size(); ++k) {
        bool assigned = false;
        for (uint32_t y : out.row_quotient.classes[k]) {
            SmallSet minimals = r_minimals_in(col_gleason, rho.row_image(y));
            if (minimals.is_empty())
                throw ConditionError("xi_map: rho[" + row_gleason.order.name(y) +
                                     ",-] has no R-minimal point");
            for (uint32_t x : minimals.indices()) {
                uint32_t c = out.col_quotient.class_of[x];
                if (!assigned) {
                    out.map[k] = c;
                    assigned = true;
                } else if (out.map[k] != c) {
                    throw ConditionError("xi_map is not well defined on class " +
                                         out.row_quotient.order.name(k));
                }
            }
        }
    }

    // The ofc makes the induced map monotone; violation means a library bug.
    for (uint32_t i = 0; i < out.row_quotient.size(); ++i)
        for (uint32_t j = 0; j < out.row_quotient.size(); ++j)
            if (out.row_quotient.order.leq(i, j) &&
                !out.col_quotient.order.leq(out.map[i], out.map[j]))
                throw ConditionError("xi_map is not monotone");
    return out;
}

std::vector<HemiMorphism> enumerate_strong_meet_hemimorphisms(LatticePtr source,
                                                              LatticePtr target) {
    uint32_t nl = source->size(), nm = target->size();
    double candidates = 1;
    for (uint32_t i = 0; i < nl; ++i) {
        candidates *= nm;
        if (candidates > 1e6) throw SizeError("candidate map space exceeds 10^6");
    }

    std::vector<HemiMorphism> out;
    std::vector<uint32_t> table(nl, 0);
    while (true) {
        HemiMorphism h{source, target, table};
        if (is_strong_meet_hemimorphism(h)) out.push_back(std::move(h));
        // Odometer in ascending table order.
        uint32_t pos = nl;
        while (pos > 0) {
            --pos;
            if (++table[pos] < nm) break;
            table[pos] = 0;
            if (pos == 0) return out;
        }
        if (nl == 0) return out;
    }
}

}  // namespace proxkit
