#pragma once

// Block-constant matrix algebra over exact integers: a block matrix whose
// block-rows are all identical has trace(M^k) equal to the k-th power of the
// block sum. This module carries that identity for arbitrary integer blocks
// and the seeded random families the property suites run on.

#include <cstdint>
#include <vector>

#include "expgraph/bigint.hpp"

namespace expgraph {

// Dense square matrix with exact integer entries.
class IntMatrix {
  public:
    IntMatrix() = default;
    explicit IntMatrix(uint64_t side) : side_(side), cells_(side * side) {}

    static IntMatrix identity(uint64_t side);

    uint64_t side() const { return side_; }

    BigInt& at(uint64_t r, uint64_t c) { return cells_[r * side_ + c]; }
    const BigInt& at(uint64_t r, uint64_t c) const { return cells_[r * side_ + c]; }

    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator+(const IntMatrix& rhs) const;

    // Exponentiation by squaring; k = 0 yields the identity.
    IntMatrix pow(uint64_t k) const;
    // Iterated multiplication, k >= 1; kept as an independent route for tests.
    IntMatrix pow_naive(uint64_t k) const;

    BigInt trace() const;

    bool operator==(const IntMatrix& rhs) const = default;

  private:
    uint64_t side_ = 0;
    std::vector<BigInt> cells_;
};

// r square integer blocks sharing side d.
struct BlockFamily {
    uint64_t block_count = 0;  // r
    uint64_t side = 0;         // d
    std::vector<IntMatrix> blocks;
};

// The r*d-sided matrix whose every block-row is (A_1 A_2 ... A_r).
IntMatrix assemble_block_constant(const BlockFamily& family);

// Entrywise sum of the diagonal d x d blocks; matrix side must divide by d.
IntMatrix block_trace(const IntMatrix& matrix, uint64_t block_side);

// A_1 + A_2 + ... + A_r.
IntMatrix block_sum(const BlockFamily& family);

// Exact check: block_trace(M^k, d) == (A_1 + ... + A_r)^k.
bool verify_lemma1(const BlockFamily& family, uint64_t k);

// Deterministic family from seed; entries uniform in [-bound, bound].
BlockFamily random_block_family(uint64_t seed, uint64_t block_count, uint64_t side,
                                int64_t bound);

// True iff some pair of blocks fails to commute.
bool has_noncommuting_pair(const BlockFamily& family);

}  // namespace expgraph
