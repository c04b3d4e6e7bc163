#ifndef OMFC_SCRAMBLE_HPP
#define OMFC_SCRAMBLE_HPP

#include <array>
#include <cstdint>

#include "omfc/common.hpp"

namespace omfc {

// SplitMix64: the pinned keyed generator for all key expansion.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

struct ScrambleParams {
    int block_size_x = 3;        // in [3, 8]
    std::uint64_t seed = 0;
    int pad_bits = 0;            // in [0, 2]
};

// Largest x in 8..3 that divides bit_length exactly (pad 0); otherwise
// x = 3 with pad (3 - bit_length mod 3) mod 3.
std::pair<int, int> choose_block_size(std::size_t bit_length);

inline constexpr std::array<std::uint32_t, 9> kFactorial = {1, 1, 2, 6, 24, 120, 720, 5040, 40320};

// index-th permutation of (1..x) in lexicographic order.
std::vector<int> nth_permutation(int x, std::uint32_t index);

// Pad with zeros, split into x-bit blocks and permute each block by a
// PRNG-drawn pattern: out[k] = in[p[k]] within the block.
BitString scramble(const BitString& bits, const ScrambleParams& params);

// Exact inverse; throws DecryptError if a declared pad bit is nonzero.
BitString unscramble(const BitString& bits, const ScrambleParams& params);

} // namespace omfc

#endif
