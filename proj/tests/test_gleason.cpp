#include <doctest.h>

#include "proxkit/corpus.hpp"
#include "proxkit/errors.hpp"
#include "proxkit/gleason.hpp"

using namespace proxkit;

namespace {

Subordination b2_prec0() {
    LatticePtr b2 = boolean_lattice(2);
    Rel rel(4);
    for (uint32_t x = 0; x < 4; ++x)
        for (uint32_t y = 0; y < 4; ++y)
            if (x == 0 || y == 3) rel.set(x, y);
    return make_subordination(b2, rel);
}

Rel full_rel(uint32_t n) {
    Rel r(n);
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j) r.set(i, j);
    return r;
}

// All S1-S4 relations on a small lattice, as masks.
std::vector<uint64_t> subordination_masks(const Lattice& l) {
    std::vector<uint64_t> out;
    uint32_t n = l.size();
    for (uint64_t mask = 0; mask < (uint64_t{1} << (n * n)); ++mask) {
        Rel rel = Rel::from_mask(n, mask);
        if (check_axiom(l, rel, Axiom::S1).pass && check_axiom(l, rel, Axiom::S2).pass &&
            check_axiom(l, rel, Axiom::S3).pass && check_axiom(l, rel, Axiom::S4).pass)
            out.push_back(mask);
    }
    return out;
}

}  // namespace

TEST_CASE("relation_from_subordination: leq gives the point order") {
    for (const auto& [name, l] : corpus_lattices()) {
        CAPTURE(name);
        GleasonSpace g = relation_from_subordination(leq_subordination(l));
        CHECK(g.r == g.order.as_relation());
        CHECK(check_gleason_axioms(g).all());
    }
}

TEST_CASE("relation_from_subordination: prec0 on B2 gives the full point relation") {
    GleasonSpace g = relation_from_subordination(b2_prec0());
    REQUIRE(g.size() == 2);
    CHECK(g.r == full_rel(2));
}

TEST_CASE("relation_from_subordination: full relation on C2 gives the empty one") {
    GleasonSpace g =
        relation_from_subordination(make_subordination(chain_lattice(2), full_rel(2)));
    REQUIRE(g.size() == 1);
    CHECK(g.r == Rel(1));
}

TEST_CASE("subordination_from_relation shapes") {
    // R = order of a 2-chain: prec = inclusion on the three upsets.
    GleasonSpace chain{chain_poset(2), chain_poset(2).as_relation(), std::nullopt};
    Subordination s = subordination_from_relation(chain);
    CHECK(s.rel == s.lattice->poset().as_relation());

    // R full on 2 points: O prec U iff O is empty or U is everything.
    GleasonSpace full{antichain_poset(2), full_rel(2), std::nullopt};
    Subordination sf = subordination_from_relation(full);
    for (uint32_t o = 0; o < sf.lattice->size(); ++o)
        for (uint32_t u = 0; u < sf.lattice->size(); ++u)
            CHECK(sf.prec(o, u) ==
                  (o == sf.lattice->bottom() || u == sf.lattice->top()));

    // R empty: every pair is related.
    GleasonSpace none{antichain_poset(2), Rel(2), std::nullopt};
    Subordination sn = subordination_from_relation(none);
    for (uint32_t o = 0; o < sn.lattice->size(); ++o)
        for (uint32_t u = 0; u < sn.lattice->size(); ++u) CHECK(sn.prec(o, u));
}

TEST_CASE("check_gleason_axioms failure paths") {
    GleasonSpace empty_on_chain{chain_poset(2), Rel(2), std::nullopt};
    GleasonFlags f = check_gleason_axioms(empty_on_chain);
    CHECK(f.closed.pass);
    CHECK(!f.contains_leq.pass);
    CHECK(f.contains_leq.witness == std::vector<int>{0, 0});
    CHECK(!f.preorder.pass);
    CHECK(f.preorder.witness == std::vector<int>{0});

    GleasonSpace full_on_anti{antichain_poset(2), full_rel(2), std::nullopt};
    GleasonFlags f2 = check_gleason_axioms(full_on_anti);
    CHECK(f2.compat.pass);
    CHECK(f2.preorder.pass);
    CHECK(!f2.saturation.pass);
    CHECK(f2.saturation.witness == std::vector<int>{0});  // O = {p0}
}

TEST_CASE("r_image and r_preimage") {
    Poset c3 = chain_poset(3);
    GleasonSpace order{c3, c3.as_relation(), std::nullopt};
    // Upsets are fixed by the forward image along the order.
    for (uint64_t mask : c3.all_upsets())
        CHECK(r_image(order, SmallSet(3, mask)) == SmallSet(3, mask));
    // E = {top}: the preimage along the order is everything below it.
    CHECK(r_preimage(order, SmallSet(3, 0b100)) == SmallSet(3, 0b111));

    GleasonSpace full{antichain_poset(2), full_rel(2), std::nullopt};
    CHECK(r_image(full, SmallSet(2, 0b01)) == SmallSet::full(2));
    CHECK(r_image(full, SmallSet::empty(2)).is_empty());
}

TEST_CASE("remark duality: R[-,E] <= F iff R[F^c,-] <= E^c, any relation") {
    // Pure relational logic; swept over every relation on 2 points and all
    // subset pairs, plus the order relation on a 3-chain.
    for (uint64_t mask = 0; mask < 16; ++mask) {
        Rel r = Rel::from_mask(2, mask);
        GleasonSpace g{antichain_poset(2), r, std::nullopt};
        for (uint64_t e = 0; e < 4; ++e)
            for (uint64_t f = 0; f < 4; ++f) {
                SmallSet E(2, e), F(2, f);
                CHECK(r_preimage(g, E).subset_of(F) ==
                      r_image(g, F.complement()).subset_of(E.complement()));
            }
    }
    Poset c3 = chain_poset(3);
    GleasonSpace g{c3, c3.as_relation(), std::nullopt};
    for (uint64_t e = 0; e < 8; ++e)
        for (uint64_t f = 0; f < 8; ++f) {
            SmallSet E(3, e), F(3, f);
            CHECK(r_preimage(g, E).subset_of(F) ==
                  r_image(g, F.complement()).subset_of(E.complement()));
        }
}

TEST_CASE("r_minimals_in") {
    Poset b2p = boolean_poset(2);
    GleasonSpace order{b2p, b2p.as_relation(), std::nullopt};
    CHECK(r_minimals_in(order, SmallSet::full(4)) == SmallSet(4, 0b0001));  // bottom
    CHECK(r_minimals_in(order, SmallSet(4, 0b0110)) == SmallSet(4, 0b0110));  // antichain

    GleasonSpace full{antichain_poset(3), full_rel(3), std::nullopt};
    CHECK(r_minimals_in(full, SmallSet(3, 0b101)) == SmallSet(3, 0b101));

    GleasonSpace bad{antichain_poset(2), Rel(2), std::nullopt};
    CHECK_THROWS_AS(r_minimals_in(bad, SmallSet::full(2)), PreorderError);

    // Existence: every member sees some minimal below it.
    for (uint64_t mask = 1; mask < 16; ++mask) {
        SmallSet f(4, mask);
        SmallSet mins = r_minimals_in(order, f);
        CHECK(!mins.is_empty());
        for (uint32_t x : f.indices()) {
            bool reached = false;
            for (uint32_t y : mins.indices()) reached = reached || order.r.at(y, x);
            CHECK(reached);
        }
    }
}

TEST_CASE("quotient shapes") {
    Poset c3 = chain_poset(3);
    GleasonSpace order{c3, c3.as_relation(), std::nullopt};
    QuotientPospace discrete = quotient(order);
    CHECK(discrete.size() == 3);
    for (uint32_t i = 0; i < 3; ++i)
        for (uint32_t j = 0; j < 3; ++j) CHECK(discrete.order.leq(i, j) == c3.leq(i, j));

    GleasonSpace full{antichain_poset(3), full_rel(3), std::nullopt};
    QuotientPospace one = quotient(full);
    CHECK(one.size() == 1);
    CHECK(one.classes[0] == std::vector<uint32_t>{0, 1, 2});

    QuotientPospace dual0 = quotient(relation_from_subordination(b2_prec0()));
    CHECK(dual0.size() == 1);

    GleasonSpace bad{antichain_poset(2), Rel(2), std::nullopt};
    CHECK_THROWS_AS(quotient(bad), PreorderError);
}

TEST_CASE("the projection onto classes is monotone for duals") {
    for (const auto& [name, l] : corpus_lattices()) {
        CAPTURE(name);
        GleasonSpace g = relation_from_subordination(leq_subordination(l));
        QuotientPospace q = quotient(g);
        for (uint32_t x = 0; x < g.size(); ++x)
            for (uint32_t y = 0; y < g.size(); ++y)
                if (g.order.leq(x, y)) CHECK(q.order.leq(q.class_of[x], q.class_of[y]));
    }
    // Also on a dual whose R is strictly bigger than the order.
    GleasonSpace g0 = relation_from_subordination(b2_prec0());
    QuotientPospace q0 = quotient(g0);
    for (uint32_t x = 0; x < g0.size(); ++x)
        for (uint32_t y = 0; y < g0.size(); ++y)
            if (g0.order.leq(x, y)) CHECK(q0.order.leq(q0.class_of[x], q0.class_of[y]));
}

TEST_CASE("phi examples") {
    Subordination c3 = leq_subordination(chain_lattice(3));
    GleasonSpace g = relation_from_subordination(c3);
    CHECK(phi(g, RoundFilter{SmallSet(3, 0b110)}) == SmallSet(2, 0b10));  // {up(m)}
    CHECK(phi(g, RoundFilter{SmallSet(3, 0b100)}) == SmallSet::full(2));  // {1} -> all
    CHECK_THROWS_AS(phi(g, RoundFilter{SmallSet::full(3)}), AxiomError);  // improper

    CHECK_THROWS_AS(phi_inverse(g, SmallSet::empty(2)), NotRIncreasingError);
    // {up(1)} alone is not R-increasing: up(1) R up(m) but up(m) is omitted.
    CHECK_THROWS_AS(phi_inverse(g, SmallSet(2, 0b01)), NotRIncreasingError);
}

TEST_CASE("phi and phi_inverse are mutually inverse on proximity instances") {
    for (const auto& [name, l] : corpus_lattices()) {
        CAPTURE(name);
        Subordination s = leq_subordination(l);
        GleasonSpace g = relation_from_subordination(s);
        for (const RoundFilter& f : round_filters(s)) {
            SmallSet c = phi(g, f);
            CHECK(r_image(g, c).subset_of(c));  // R-increasing
            CHECK(phi_inverse(g, c).set == f.set);
        }
        // Every nonempty R-increasing set comes from a round filter.
        for (uint64_t mask = 1; mask < (uint64_t{1} << g.size()); ++mask) {
            SmallSet c(g.size(), mask);
            if (!r_image(g, c).subset_of(c)) continue;
            RoundFilter f = phi_inverse(g, c);
            CHECK(up_arrow(s, f.set) == f.set);
            CHECK(phi(g, f) == c);
        }
        // Order reversal.
        std::vector<RoundFilter> rf = round_filters(s);
        for (const RoundFilter& f1 : rf)
            for (const RoundFilter& f2 : rf)
                CHECK(f1.set.subset_of(f2.set) == phi(g, f2).subset_of(phi(g, f1)));
    }
}

TEST_CASE("sigma_check on the proximity corpus") {
    for (const auto& [name, l] : corpus_lattices()) {
        CAPTURE(name);
        Subordination s = leq_subordination(l);
        GleasonSpace g = relation_from_subordination(s);
        SigmaReport r = sigma_check(g, s);
        CHECK(r.pass);
    }
    // Degenerate one-element lattice: the empty isomorphism.
    Subordination c1 = leq_subordination(chain_lattice(1));
    SigmaReport r1 = sigma_check(relation_from_subordination(c1), c1);
    CHECK(r1.pass);
    CHECK(r1.sigma.empty());

    CHECK_THROWS_AS(sigma_check(relation_from_subordination(b2_prec0()), b2_prec0()),
                    AxiomError);
}

TEST_CASE("correspondence: dualizing twice returns the relation, via eta transport") {
    for (const auto& [name, l] :
         {NamedLattice{"C3", chain_lattice(3)}, NamedLattice{"B2", boolean_lattice(2)}}) {
        CAPTURE(name);
        PriestleySpace space = priestley_dual(l);
        UpsetLattice ul = upset_lattice(space.order);
        for (uint64_t mask : subordination_masks(*l)) {
            Subordination s = make_subordination(l, Rel::from_mask(l->size(), mask));
            GleasonSpace g = relation_from_subordination(s);
            Subordination back = subordination_from_relation(g);
            for (uint32_t a = 0; a < l->size(); ++a)
                for (uint32_t b = 0; b < l->size(); ++b) {
                    uint32_t ea = ul.index_of(eta(space, a).bits());
                    uint32_t eb = ul.index_of(eta(space, b).bits());
                    CHECK(s.prec(a, b) == back.prec(ea, eb));
                }
        }
    }
}

TEST_CASE("the four formulations of the point relation agree under S6 and S8") {
    for (const auto& [name, l] :
         {NamedLattice{"C3", chain_lattice(3)}, NamedLattice{"B2", boolean_lattice(2)}}) {
        CAPTURE(name);
        std::vector<SmallSet> primes = prime_filters(*l);
        for (uint64_t mask : subordination_masks(*l)) {
            Subordination s = make_subordination(l, Rel::from_mask(l->size(), mask));
            if (!s.flags.s6.pass || !s.flags.s8.pass) continue;
            for (const SmallSet& x : primes)
                for (const SmallSet& y : primes) {
                    bool f1 = up_arrow(s, x).subset_of(y);
                    bool f2 = up_arrow(s, x).subset_of(up_arrow(s, y));
                    bool f3 = down_arrow(s, y.complement()).subset_of(x.complement());
                    bool f4 = down_arrow(s, y.complement())
                                  .subset_of(down_arrow(s, x.complement()));
                    CHECK(f1 == f2);
                    CHECK(f1 == f3);
                    CHECK(f1 == f4);
                }
        }
    }
}

TEST_CASE("without S6/S8 the arrow formulations can diverge") {
    // The S1-S4 closure of a prec b on B2: up_arrow(up(a)) = up(b) lands
    // outside up(a), while the arrow-image comparison still holds reflexively.
    LatticePtr b2 = boolean_lattice(2);
    Rel seed(4);
    seed.set(1, 2);  // a prec b
    Subordination s = subordination_closure(b2, seed);
    CHECK(s.flags.is_subordination());
    CHECK(!s.flags.s6.pass);
    SmallSet up_a(4, 0b1010);
    bool f1 = up_arrow(s, up_a).subset_of(up_a);
    bool f2 = up_arrow(s, up_a).subset_of(up_arrow(s, up_a));
    CHECK(f2);
    CHECK(!f1);
}
