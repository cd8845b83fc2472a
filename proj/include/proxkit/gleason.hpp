#pragma once

#include <optional>
#include <vector>

#include "proxkit/priestley.hpp"
#include "proxkit/subordination.hpp"

namespace proxkit {

// Candidate ordered Gleason space: a finite poset of points with a binary
// relation R. Synthetic instances (arbitrary R) are first-class so that the
// axiom-failure paths stay testable; duals of subordinations carry their
// Priestley space as provenance.
struct GleasonSpace {
    Poset order;
    Rel r;
    std::optional<PriestleySpace> space;  // set when built from a subordination

    uint32_t size() const { return order.size(); }
};

// Verdicts for the defining conditions. Closedness of R (item 1) is
// automatic on a finite discrete space and always passes.
struct GleasonFlags {
    CheckResult closed;        // item 1
    CheckResult compat;        // item 2: x <= y R z <= t implies x R t
    CheckResult contains_leq;  // item 2': x <= y implies x R y
    CheckResult preorder;      // item 3
    CheckResult saturation;    // item 4: O = R[-, O^c]^c for every upset O

    bool all() const {
        return closed.pass && compat.pass && contains_leq.pass && preorder.pass &&
               saturation.pass;
    }
};

GleasonFlags check_gleason_axioms(const GleasonSpace& g);

// Dual of a subordination: points are the prime filters and
// x R y iff up_arrow(x) is contained in y. Requires S1-S4.
GleasonSpace relation_from_subordination(const Subordination& s);

// Dual of a space: the relation O prec U iff R[O,-] <= U on the upset lattice
// of the points.
Subordination subordination_from_relation(const GleasonSpace& g);

// R[e,-] = {x | exists y in e : y R x} and R[-,e] = {x | exists y in e : x R y}.
SmallSet r_image(const GleasonSpace& g, const SmallSet& e);
SmallSet r_preimage(const GleasonSpace& g, const SmallSet& e);

// Members y of f with no strictly R-smaller member inside f
// (y R-minimal: z in f and z R y imply y R z). Requires R to be a pre-order.
SmallSet r_minimals_in(const GleasonSpace& g, const SmallSet& f);

// Quotient of the points by the symmetric core of R, ordered by R.
struct QuotientPospace {
    std::vector<uint32_t> class_of;            // point -> class index
    std::vector<std::vector<uint32_t>> classes;  // class -> sorted points
    Poset order;

    uint32_t size() const { return order.size(); }
};

QuotientPospace quotient(const GleasonSpace& g);

// phi sends a round filter F to {x | F <= x}; phi_inverse recovers the filter
// from a nonempty R-increasing point set. Mutually inverse and order-reversing
// on proximity instances.
SmallSet phi(const GleasonSpace& g, const RoundFilter& f);
RoundFilter phi_inverse(const GleasonSpace& g, const SmallSet& c);

// Certifies the order isomorphism class(x) |-> up_arrow(x) from the quotient
// onto the ends, the witness identity F_p = R[x,-] at the R-minimal class,
// and the subbase identity
//   preimage under projection of sigma^{-1}(mu(a)) = union of eta(b) for b prec a.
struct SigmaReport {
    bool pass = true;
    std::vector<uint32_t> sigma;  // quotient class -> end index
    CheckResult well_defined;
    CheckResult bijective;
    CheckResult order_iso;
    CheckResult minimal_witness;  // F_p = R[x,-] with a unique minimal class
    CheckResult subbase;
    std::string detail;
};

SigmaReport sigma_check(const GleasonSpace& g, const Subordination& s);

}  // namespace proxkit
