#include "proxkit/generate.hpp"

#include <random>

#include "proxkit/errors.hpp"

namespace proxkit {

Poset random_poset(uint32_t n, uint64_t seed) {
    if (n > kGenerateMaxPoints)
        throw SizeError("random posets are capped at " + std::to_string(kGenerateMaxPoints) +
                        " points");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution edge(0.4);
    std::vector<std::pair<uint32_t, uint32_t>> pairs;
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = i + 1; j < n; ++j)
            if (edge(rng)) pairs.emplace_back(i, j);
    // Edges only go up in index, so the closure is always antisymmetric.
    return close_order(pairs, n);
}

Subordination random_subordination(LatticePtr l, uint64_t seed) {
    uint32_t n = l->size();
    if (n > 16) throw SizeError("random subordinations are capped at 16 elements");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<uint32_t> pick(0, n - 1);
    Rel seed_rel(n);
    for (uint32_t k = 0; k < n; ++k) seed_rel.set(pick(rng), pick(rng));
    return subordination_closure(std::move(l), seed_rel);
}

}  // namespace proxkit
