#include "expgraph/blockalg.hpp"

#include <stdexcept>

namespace expgraph {

namespace {

// Deterministic, platform-independent stream for seeded families.
uint64_t splitmix64(uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

IntMatrix IntMatrix::identity(uint64_t side) {
    IntMatrix m(side);
    for (uint64_t i = 0; i < side; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (side_ != rhs.side_) throw std::invalid_argument("IntMatrix: side mismatch in product");
    IntMatrix out(side_);
    for (uint64_t i = 0; i < side_; ++i) {
        for (uint64_t k = 0; k < side_; ++k) {
            const BigInt& lhs_ik = at(i, k);
            if (lhs_ik.is_zero()) continue;
            for (uint64_t j = 0; j < side_; ++j) {
                out.at(i, j) += lhs_ik * rhs.at(k, j);
            }
        }
    }
    return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
    if (side_ != rhs.side_) throw std::invalid_argument("IntMatrix: side mismatch in sum");
    IntMatrix out(side_);
    for (uint64_t i = 0; i < cells_.size(); ++i) out.cells_[i] = cells_[i] + rhs.cells_[i];
    return out;
}

IntMatrix IntMatrix::pow(uint64_t k) const {
    IntMatrix result = identity(side_);
    IntMatrix base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        if (k >>= 1) base = base * base;
    }
    return result;
}

IntMatrix IntMatrix::pow_naive(uint64_t k) const {
    if (k < 1) throw std::invalid_argument("IntMatrix::pow_naive: k must be >= 1");
    IntMatrix result = *this;
    for (uint64_t i = 1; i < k; ++i) result = result * (*this);
    return result;
}

BigInt IntMatrix::trace() const {
    BigInt t = 0;
    for (uint64_t i = 0; i < side_; ++i) t += at(i, i);
    return t;
}

IntMatrix assemble_block_constant(const BlockFamily& family) {
    if (family.block_count < 1 || family.blocks.size() != family.block_count) {
        throw std::invalid_argument("assemble_block_constant: invalid family");
    }
    const uint64_t d = family.side;
    IntMatrix out(family.block_count * d);
    for (uint64_t block_row = 0; block_row < family.block_count; ++block_row) {
        for (uint64_t block_col = 0; block_col < family.block_count; ++block_col) {
            const IntMatrix& block = family.blocks[block_col];
            for (uint64_t i = 0; i < d; ++i) {
                for (uint64_t j = 0; j < d; ++j) {
                    out.at(block_row * d + i, block_col * d + j) = block.at(i, j);
                }
            }
        }
    }
    return out;
}

IntMatrix block_trace(const IntMatrix& matrix, uint64_t block_side) {
    if (block_side < 1 || matrix.side() % block_side != 0) {
        throw std::invalid_argument("block_trace: matrix side must divide by the block side");
    }
    const uint64_t blocks = matrix.side() / block_side;
    IntMatrix out(block_side);
    for (uint64_t b = 0; b < blocks; ++b) {
        for (uint64_t i = 0; i < block_side; ++i) {
            for (uint64_t j = 0; j < block_side; ++j) {
                out.at(i, j) += matrix.at(b * block_side + i, b * block_side + j);
            }
        }
    }
    return out;
}

IntMatrix block_sum(const BlockFamily& family) {
    IntMatrix sum(family.side);
    for (const IntMatrix& block : family.blocks) sum = sum + block;
    return sum;
}

bool verify_lemma1(const BlockFamily& family, uint64_t k) {
    if (k < 1) throw std::invalid_argument("verify_lemma1: k must be >= 1");
    const IntMatrix assembled = assemble_block_constant(family);
    return block_trace(assembled.pow(k), family.side) == block_sum(family).pow(k);
}

BlockFamily random_block_family(uint64_t seed, uint64_t block_count, uint64_t side,
                                int64_t bound) {
    if (block_count < 1 || side < 1 || bound < 0) {
        throw std::invalid_argument("random_block_family: need r >= 1, d >= 1, bound >= 0");
    }
    BlockFamily family{block_count, side, {}};
    family.blocks.reserve(block_count);
    uint64_t state = seed;
    const uint64_t span = 2 * static_cast<uint64_t>(bound) + 1;
    for (uint64_t b = 0; b < block_count; ++b) {
        IntMatrix block(side);
        for (uint64_t i = 0; i < side; ++i) {
            for (uint64_t j = 0; j < side; ++j) {
                block.at(i, j) = static_cast<int64_t>(splitmix64(state) % span) - bound;
            }
        }
        family.blocks.push_back(std::move(block));
    }
    return family;
}

bool has_noncommuting_pair(const BlockFamily& family) {
    for (uint64_t i = 0; i < family.block_count; ++i) {
        for (uint64_t j = i + 1; j < family.block_count; ++j) {
            if (!(family.blocks[i] * family.blocks[j] == family.blocks[j] * family.blocks[i])) {
                return true;
            }
        }
    }
    return false;
}

}  // namespace expgraph
