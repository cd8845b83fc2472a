#include <doctest.h>

#include "oracles.hpp"
#include "proxkit/corpus.hpp"
#include "proxkit/errors.hpp"
#include "proxkit/exhaustive.hpp"
#include "proxkit/priestley.hpp"
#include "proxkit/subordination.hpp"

using namespace proxkit;

namespace {

// The least subordination on B2: x prec y iff x = 0 or y = 1.
Subordination b2_prec0() {
    LatticePtr b2 = boolean_lattice(2);
    Rel rel(4);
    for (uint32_t x = 0; x < 4; ++x)
        for (uint32_t y = 0; y < 4; ++y)
            if (x == 0 || y == 3) rel.set(x, y);
    return make_subordination(b2, rel);
}

}  // namespace

TEST_CASE("the axiom enum skips S7") {
    CHECK(!axiom_from_name("S7").has_value());
    CHECK(axiom_from_name("S8").has_value());
    CHECK(kAllAxioms.size() == 7);
}

TEST_CASE("leq satisfies S1-S8 on every corpus lattice") {
    for (const auto& [name, l] : corpus_lattices()) {
        CAPTURE(name);
        Subordination s = leq_subordination(l);
        CHECK(s.flags.is_subordination());
        CHECK(s.flags.is_proximity());
    }
}

TEST_CASE("check_axiom witnesses") {
    // S5 on prec0: the least failing element is a, whose lower prec-set joins to 0.
    Subordination s0 = b2_prec0();
    CHECK(s0.flags.is_subordination());
    CHECK(s0.flags.s6.pass);
    CHECK(s0.flags.s8.pass);
    CHECK(!s0.flags.s5.pass);
    CHECK(s0.flags.s5.witness == std::vector<int>{1, 0});

    // Full relation on C2: S6 fails at (1, 0).
    LatticePtr c2 = chain_lattice(2);
    Rel full(2);
    for (uint32_t i = 0; i < 2; ++i)
        for (uint32_t j = 0; j < 2; ++j) full.set(i, j);
    Subordination sf = make_subordination(c2, full);
    CHECK(sf.flags.is_subordination());
    CHECK(!sf.flags.s6.pass);
    CHECK(sf.flags.s6.witness == std::vector<int>{1, 0});

    // Missing S1.
    Rel none(2);
    CHECK(check_axiom(*c2, none, Axiom::S1).witness == std::vector<int>{0, 0});
}

TEST_CASE("up_arrow and down_arrow") {
    Subordination s0 = b2_prec0();
    CHECK(up_arrow(s0, uint32_t{1}) == SmallSet(4, 0b1000));  // {1}
    CHECK(up_arrow(s0, SmallSet::empty(4)).is_empty());

    for (const auto& [name, l] : corpus_lattices()) {
        CAPTURE(name);
        Subordination s = leq_subordination(l);
        for (const SmallSet& f : oracle::proper_filters(*l)) CHECK(up_arrow(s, f) == f);
    }
}

TEST_CASE("round_filters examples and oracle") {
    Subordination c3 = leq_subordination(chain_lattice(3));
    auto r3 = round_filters(c3);
    REQUIRE(r3.size() == 2);
    CHECK(r3[0].set == SmallSet(3, 0b100));
    CHECK(r3[1].set == SmallSet(3, 0b110));

    // With prec = leq every proper filter is round.
    Subordination b2 = leq_subordination(boolean_lattice(2));
    CHECK(round_filters(b2).size() == 3);

    auto r0 = round_filters(b2_prec0());
    REQUIRE(r0.size() == 1);
    CHECK(r0[0].set == SmallSet(4, 0b1000));  // {1}

    for (const auto& [name, l] : corpus_lattices()) {
        CAPTURE(name);
        if (l->size() > 10) continue;
        Subordination s = leq_subordination(l);
        std::vector<SmallSet> brute = oracle::round_filters_brute(s);
        std::vector<RoundFilter> lib = round_filters(s);
        REQUIRE(lib.size() == brute.size());
        for (size_t i = 0; i < lib.size(); ++i) CHECK(lib[i].set == brute[i]);
        CHECK(brute == oracle::proper_filters(*l));
    }

    Rel bad(4);  // misses S1
    CHECK_THROWS_AS(round_filters(make_subordination(boolean_lattice(2), bad)), AxiomError);
}

TEST_CASE("ends examples and the finite collapse") {
    auto e3 = ends(leq_subordination(chain_lattice(3)));
    REQUIRE(e3.size() == 2);

    auto eb2 = ends(leq_subordination(boolean_lattice(2)));
    REQUIRE(eb2.size() == 2);
    CHECK(eb2[0].set == SmallSet(4, 0b1010));  // up(a): {1} is not an end
    CHECK(eb2[1].set == SmallSet(4, 0b1100));

    CHECK(ends(leq_subordination(chain_lattice(1))).empty());

    // ends(leq) = prime filters, and up_arrow of a prime is an end.
    for (const auto& [name, l] : corpus_lattices()) {
        CAPTURE(name);
        Subordination s = leq_subordination(l);
        std::vector<End> es = ends(s);
        std::vector<SmallSet> primes = prime_filters(*l);
        REQUIRE(es.size() == primes.size());
        for (size_t i = 0; i < es.size(); ++i) CHECK(es[i].set == primes[i]);
        for (const SmallSet& x : primes) {
            SmallSet img = up_arrow(s, x);
            bool found = false;
            for (const End& p : es) found = found || p.set == img;
            CHECK(found);
        }
    }
}

TEST_CASE("mu selects the ends containing an element") {
    Subordination c3 = leq_subordination(chain_lattice(3));
    auto at_m = mu(c3, 1);
    REQUIRE(at_m.size() == 1);
    CHECK(at_m[0].set == SmallSet(3, 0b110));
    CHECK(mu(c3, 2).size() == ends(c3).size());  // top lies in every end
    CHECK(mu(c3, 0).empty());                    // bottom in none
}

TEST_CASE("subordination_closure fixpoints") {
    LatticePtr b2 = boolean_lattice(2);
    Subordination closed = subordination_closure(b2, Rel(4));
    CHECK(closed.rel == b2_prec0().rel);
    CHECK(closed.flags.is_subordination());

    // Seeding with leq returns leq.
    Subordination closed_leq = subordination_closure(b2, b2->poset().as_relation());
    CHECK(closed_leq.rel == b2->poset().as_relation());

    // A pair above the diagonal spreads to the full relation on C2.
    LatticePtr c2 = chain_lattice(2);
    Rel seed(2);
    seed.set(1, 0);
    Subordination full = subordination_closure(c2, seed);
    for (uint32_t i = 0; i < 2; ++i)
        for (uint32_t j = 0; j < 2; ++j) CHECK(full.prec(i, j));
}

TEST_CASE("closure output always satisfies S1-S4: seeded sweep") {
    for (const auto& [name, l] : corpus_lattices()) {
        if (l->size() > 8) continue;
        CAPTURE(name);
        for (uint64_t seed = 0; seed < 16; ++seed) {
            Rel rel(l->size());
            // Spread a couple of deterministic pseudo-random pairs.
            rel.set((seed * 7) % l->size(), (seed * 3 + 1) % l->size());
            rel.set((seed * 5 + 2) % l->size(), (seed * 11) % l->size());
            Subordination s = subordination_closure(l, rel);
            CHECK(s.flags.is_subordination());
            for (uint32_t i = 0; i < l->size(); ++i)
                for (uint32_t j = 0; j < l->size(); ++j)
                    if (rel.at(i, j)) CHECK(s.prec(i, j));
        }
    }
}

TEST_CASE("collapse_check: the only S1-S5 relation is leq") {
    for (uint32_t n : {1u, 2u, 3u}) {
        CollapseReport r = collapse_check(chain_lattice(n));
        CHECK(r.exhaustive);
        CHECK(r.scanned == (uint64_t{1} << (n * n)));
        CHECK(r.survivors == 1);
        CHECK(r.only_leq);
    }
    CollapseReport b2 = collapse_check(boolean_lattice(2));
    CHECK(b2.scanned == 65536);
    CHECK(b2.survivors == 1);
    CHECK(b2.only_leq);

    // Sampling path on a larger lattice.
    CollapseReport c5 = collapse_check(chain_lattice(5), 2000, 42);
    CHECK(!c5.exhaustive);
    CHECK(c5.scanned == 2000);
    CHECK(c5.only_leq);
}

TEST_CASE("S5 implies S6 for every relation on the small lattices") {
    for (uint32_t n : {2u, 3u}) {
        LatticePtr l = chain_lattice(n);
        for (uint64_t mask = 0; mask < (uint64_t{1} << (n * n)); ++mask) {
            Rel rel = Rel::from_mask(n, mask);
            if (check_axiom(*l, rel, Axiom::S5).pass) CHECK(check_axiom(*l, rel, Axiom::S6).pass);
        }
    }
    LatticePtr b2 = boolean_lattice(2);
    for (uint64_t mask = 0; mask < (uint64_t{1} << 16); ++mask) {
        Rel rel = Rel::from_mask(4, mask);
        if (check_axiom(*b2, rel, Axiom::S5).pass) CHECK(check_axiom(*b2, rel, Axiom::S6).pass);
    }
}

TEST_CASE("round filters versus prime filters: F <= x iff F <= up_arrow(x)") {
    for (const auto& [name, l] : corpus_lattices()) {
        CAPTURE(name);
        Subordination s = leq_subordination(l);
        for (const RoundFilter& f : round_filters(s))
            for (const SmallSet& x : prime_filters(*l))
                CHECK(f.set.subset_of(x) == f.set.subset_of(up_arrow(s, x)));
    }
    // Also on an S6+S8 subordination that is not a proximity.
    Subordination s0 = b2_prec0();
    for (const RoundFilter& f : round_filters(s0))
        for (const SmallSet& x : prime_filters(*s0.lattice))
            CHECK(f.set.subset_of(x) == f.set.subset_of(up_arrow(s0, x)));
}
