#pragma once

#include <cstdint>
#include <vector>

#include "proxkit/gleason.hpp"

namespace proxkit {

enum class HAxiom { H0, H1, H2 };

// Total element map between lattices, candidate strong meet-hemimorphism.
struct HemiMorphism {
    LatticePtr source;  // L
    LatticePtr target;  // M
    std::vector<uint32_t> map;  // indexed by source element

    uint32_t apply(uint32_t a) const { return map[a]; }
    bool operator==(const HemiMorphism& o) const { return map == o.map; }
};

// H0 needs only the lattices; H1/H2 read the subordinations on both sides.
CheckResult check_h(const HemiMorphism& h, HAxiom which,
                    const Subordination* src = nullptr, const Subordination* tgt = nullptr);
bool is_strong_meet_hemimorphism(const HemiMorphism& h);

struct HemiConditionFlags {
    CheckResult c1;  // y1 <= y2 rho x1 <= x2 implies y1 rho x2
    CheckResult c2;  // closedness, automatic finitely
    CheckResult c3;  // rho[-, O^c]^c is an upset for every upset O
    CheckResult c4;  // every y has some x in rho[y,-]
    bool strong() const { return c1.pass && c2.pass && c3.pass && c4.pass; }
};

// Point-level counterpart of h : L -> M. Rows are indexed by points of the
// target dual Prim(M), columns by points of the source dual Prim(L); this one
// stored orientation matches Eq-style duals (y rho x iff h^{-1}(y) <= x).
// The view with the two legs swapped is available as flipped().
struct HemiRelation {
    PriestleyPtr row_space;  // Prim(M), target side
    PriestleyPtr col_space;  // Prim(L), source side
    BiRel rel;               // rel.at(y, x) means y rho x
    HemiConditionFlags flags;

    // rho[y,-] as a column-space point set.
    SmallSet row_image(uint32_t y) const { return rel.row_set(y); }
    // rho[-,e] = {y | exists x in e : y rho x}.
    SmallSet pre_image(const SmallSet& e) const { return rel.pre_image(e); }

    // The space-to-space view with both legs swapped. Condition flags always
    // refer to the stored orientation, never to this one.
    HemiRelation flipped() const { return {col_space, row_space, rel.transposed(), flags}; }
};

HemiConditionFlags check_hemi_conditions(const PriestleySpace& rows,
                                         const PriestleySpace& cols, const BiRel& rel);

// Dual of an H0 map: y rho x iff h^{-1}(y) <= x. Throws HError if H0 fails.
HemiRelation relation_from_hemimorphism(const HemiMorphism& h);

// Inverse transform: the unique h with eta(h(a)) = rho[-, eta(a)^c]^c.
// Throws NotClopenUpsetError when some computed point set is not a clopen
// upset or the resulting table is not strong — either way a condition flag
// was violated.
HemiMorphism hemimorphism_from_relation(const HemiRelation& rho);

// Ordered forth condition: for y1 R y2 (rows), x1 R-minimal in rho[y1,-] and
// x2 in rho[y2,-], x1 R x2 must hold (columns). Equivalent to H1.
CheckResult check_ofc(const HemiRelation& rho, const GleasonSpace& col_gleason,
                      const GleasonSpace& row_gleason);

// de Vries condition, finite form: rho[-, O^c] = rho[-, R[-, O^c]] for every
// upset O of the column space. Equivalent to H2.
CheckResult check_dvc(const HemiRelation& rho, const GleasonSpace& col_gleason);

// Composite of h1 : L -> M and h2 : M -> N under the proximity composition
// law a |-> join of {h2(h1(b)) | b prec a}. Both maps must satisfy H0-H2 for
// the given subordinations (HError otherwise).
HemiMorphism star(const HemiMorphism& h1, const HemiMorphism& h2, const Subordination& s_l,
                  const Subordination& s_m, const Subordination& s_n);

// Hemirelation composition is defined through the morphisms: the relation
// associated to star of the associated morphisms (no direct relational
// formula). rho1 must be the dual of some h1 : L -> M, rho2 of h2 : M -> N;
// the subordinations of L, M, N drive the star law.
HemiRelation compose_hemirelations(const HemiRelation& rho1, const HemiRelation& rho2,
                                   const Subordination& s_l, const Subordination& s_m,
                                   const Subordination& s_n);

// Dual action on ends: p |-> up_arrow(h^{-1}(p)), mapping ends of the target
// to ends of the source. Returns indices into ends(s_src) per end of s_tgt.
std::vector<uint32_t> ends_map(const HemiMorphism& h, const Subordination& s_src,
                               const Subordination& s_tgt);

// Quotient-level map induced by a hemirelation: class of y (rows) goes to the
// class of an R-minimal point of rho[y,-] (columns). Requires conditions 1-4,
// ofc and dvc; well-definedness over representatives is asserted.
struct XiMap {
    QuotientPospace row_quotient;
    QuotientPospace col_quotient;
    std::vector<uint32_t> map;  // row class -> column class
};

XiMap xi_map(const HemiRelation& rho, const GleasonSpace& row_gleason,
             const GleasonSpace& col_gleason);

// All H0 maps between two lattices in ascending table order. Guards the
// |M|^|L| candidate explosion with SizeError above one million.
std::vector<HemiMorphism> enumerate_strong_meet_hemimorphisms(LatticePtr source,
                                                              LatticePtr target);

}  // namespace proxkit
