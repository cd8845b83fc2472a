#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

namespace proxkit {

// Subset of a carrier with at most 64 elements, stored as a bitmap.
// Used for element sets over lattices and point sets over dual spaces.
class SmallSet {
public:
    SmallSet() = default;
    SmallSet(uint32_t universe, uint64_t bits) : universe_(universe), bits_(bits) {
        assert(universe <= 64);
        assert(universe == 64 || (bits >> universe) == 0);
    }

    static SmallSet empty(uint32_t universe) { return {universe, 0}; }
    static SmallSet full(uint32_t universe) {
        return {universe, universe == 64 ? ~uint64_t{0} : (uint64_t{1} << universe) - 1};
    }
    static SmallSet single(uint32_t universe, uint32_t i) {
        assert(i < universe);
        return {universe, uint64_t{1} << i};
    }

    uint32_t universe() const { return universe_; }
    uint64_t bits() const { return bits_; }
    uint32_t count() const { return static_cast<uint32_t>(std::popcount(bits_)); }
    bool is_empty() const { return bits_ == 0; }

    bool contains(uint32_t i) const {
        assert(i < universe_);
        return (bits_ >> i) & 1;
    }
    void add(uint32_t i) {
        assert(i < universe_);
        bits_ |= uint64_t{1} << i;
    }
    void remove(uint32_t i) {
        assert(i < universe_);
        bits_ &= ~(uint64_t{1} << i);
    }

    SmallSet operator&(const SmallSet& o) const { return {universe_, bits_ & o.bits_}; }
    SmallSet operator|(const SmallSet& o) const { return {universe_, bits_ | o.bits_}; }
    SmallSet complement() const { return {universe_, ~bits_ & full(universe_).bits_}; }

    bool subset_of(const SmallSet& o) const { return (bits_ & ~o.bits_) == 0; }
    bool operator==(const SmallSet& o) const = default;

    std::vector<uint32_t> indices() const {
        std::vector<uint32_t> out;
        for (uint64_t b = bits_; b != 0; b &= b - 1)
            out.push_back(static_cast<uint32_t>(std::countr_zero(b)));
        return out;
    }

private:
    uint32_t universe_ = 0;
    uint64_t bits_ = 0;
};

// Binary relation on a carrier of at most 64 elements; row i holds {j | i ~ j}.
class Rel {
public:
    Rel() = default;
    explicit Rel(uint32_t n) : n_(n), rows_(n, 0) { assert(n <= 64); }

    uint32_t size() const { return n_; }
    bool at(uint32_t i, uint32_t j) const {
        assert(i < n_ && j < n_);
        return (rows_[i] >> j) & 1;
    }
    void set(uint32_t i, uint32_t j, bool v = true) {
        assert(i < n_ && j < n_);
        if (v)
            rows_[i] |= uint64_t{1} << j;
        else
            rows_[i] &= ~(uint64_t{1} << j);
    }
    uint64_t row(uint32_t i) const {
        assert(i < n_);
        return rows_[i];
    }
    SmallSet row_set(uint32_t i) const { return {n_, row(i)}; }
    uint64_t column(uint32_t j) const {
        uint64_t c = 0;
        for (uint32_t i = 0; i < n_; ++i)
            if (at(i, j)) c |= uint64_t{1} << i;
        return c;
    }

    // {x | exists y in e : x ~ y}
    SmallSet pre_image(const SmallSet& e) const {
        uint64_t out = 0;
        for (uint32_t i = 0; i < n_; ++i)
            if (rows_[i] & e.bits()) out |= uint64_t{1} << i;
        return {n_, out};
    }
    // {x | exists y in e : y ~ x}
    SmallSet image(const SmallSet& e) const {
        uint64_t out = 0;
        for (uint64_t b = e.bits(); b != 0; b &= b - 1)
            out |= rows_[std::countr_zero(b)];
        return {n_, out};
    }

    Rel transposed() const {
        Rel t(n_);
        for (uint32_t i = 0; i < n_; ++i)
            for (uint32_t j = 0; j < n_; ++j)
                if (at(i, j)) t.set(j, i);
        return t;
    }

    bool reflexive() const {
        for (uint32_t i = 0; i < n_; ++i)
            if (!at(i, i)) return false;
        return true;
    }
    bool transitive() const {
        for (uint32_t i = 0; i < n_; ++i)
            for (uint64_t b = rows_[i]; b != 0; b &= b - 1)
                if (rows_[std::countr_zero(b)] & ~rows_[i]) return false;
        return true;
    }
    bool preorder() const { return reflexive() && transitive(); }

    std::vector<std::pair<uint32_t, uint32_t>> pairs() const {
        std::vector<std::pair<uint32_t, uint32_t>> out;
        for (uint32_t i = 0; i < n_; ++i)
            for (uint32_t j = 0; j < n_; ++j)
                if (at(i, j)) out.emplace_back(i, j);
        return out;
    }

    bool operator==(const Rel& o) const = default;

    // Row-major bitmask encoding, usable only for n*n <= 64.
    uint64_t to_mask() const {
        assert(n_ * n_ <= 64);
        uint64_t m = 0;
        for (uint32_t i = 0; i < n_; ++i) m |= rows_[i] << (i * n_);
        return m;
    }
    static Rel from_mask(uint32_t n, uint64_t mask) {
        assert(n * n <= 64);
        Rel r(n);
        uint64_t rowmask = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
        for (uint32_t i = 0; i < n; ++i) r.rows_[i] = (mask >> (i * n)) & rowmask;
        return r;
    }

private:
    uint32_t n_ = 0;
    std::vector<uint64_t> rows_;
};

// Relation between two carriers (rows x cols), each of at most 64 elements.
class BiRel {
public:
    BiRel() = default;
    BiRel(uint32_t rows, uint32_t cols) : rows_n_(rows), cols_n_(cols), rows_(rows, 0) {
        assert(rows <= 64 && cols <= 64);
    }

    uint32_t rows() const { return rows_n_; }
    uint32_t cols() const { return cols_n_; }
    bool at(uint32_t i, uint32_t j) const {
        assert(i < rows_n_ && j < cols_n_);
        return (rows_[i] >> j) & 1;
    }
    void set(uint32_t i, uint32_t j, bool v = true) {
        assert(i < rows_n_ && j < cols_n_);
        if (v)
            rows_[i] |= uint64_t{1} << j;
        else
            rows_[i] &= ~(uint64_t{1} << j);
    }
    SmallSet row_set(uint32_t i) const {
        assert(i < rows_n_);
        return {cols_n_, rows_[i]};
    }
    // {row | row_set(row) meets e}, for e over the column carrier.
    SmallSet pre_image(const SmallSet& e) const {
        uint64_t out = 0;
        for (uint32_t i = 0; i < rows_n_; ++i)
            if (rows_[i] & e.bits()) out |= uint64_t{1} << i;
        return {rows_n_, out};
    }
    // {col | some row in e relates to it}, for e over the row carrier.
    SmallSet image(const SmallSet& e) const {
        uint64_t out = 0;
        for (uint64_t b = e.bits(); b != 0; b &= b - 1)
            out |= rows_[std::countr_zero(b)];
        return {cols_n_, out};
    }

    BiRel transposed() const {
        BiRel t(cols_n_, rows_n_);
        for (uint32_t i = 0; i < rows_n_; ++i)
            for (uint32_t j = 0; j < cols_n_; ++j)
                if (at(i, j)) t.set(j, i);
        return t;
    }

    std::vector<std::pair<uint32_t, uint32_t>> pairs() const {
        std::vector<std::pair<uint32_t, uint32_t>> out;
        for (uint32_t i = 0; i < rows_n_; ++i)
            for (uint32_t j = 0; j < cols_n_; ++j)
                if (at(i, j)) out.emplace_back(i, j);
        return out;
    }

    bool operator==(const BiRel& o) const = default;

private:
    uint32_t rows_n_ = 0, cols_n_ = 0;
    std::vector<uint64_t> rows_;
};

}  // namespace proxkit
