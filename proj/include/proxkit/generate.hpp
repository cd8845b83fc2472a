#pragma once

#include <cstdint>

#include "proxkit/subordination.hpp"

namespace proxkit {

constexpr uint32_t kGenerateMaxPoints = 8;

// Random poset on n points: a seeded random DAG on 0..n-1 (edges only from
// lower to higher index) followed by reflexive-transitive closure.
// Deterministic for a fixed seed. n <= 8, SizeError above.
Poset random_poset(uint32_t n, uint64_t seed);

// Random S1-S4 relation: the subordination closure of seeded random pairs.
Subordination random_subordination(LatticePtr l, uint64_t seed);

}  // namespace proxkit
