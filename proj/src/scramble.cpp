#include "omfc/scramble.hpp"

#include <numeric>

namespace omfc {

std::pair<int, int> choose_block_size(std::size_t bit_length) {
    if (bit_length == 0) throw Error("empty bit string");
    for (int x = 8; x >= 3; --x) {
        if (bit_length % std::size_t(x) == 0) return {x, 0};
    }
    return {3, int((3 - bit_length % 3) % 3)};
}

std::vector<int> nth_permutation(int x, std::uint32_t index) {
    if (x < 3 || x > 8) throw Error("block size out of range");
    if (index >= kFactorial[std::size_t(x)]) throw Error("permutation index out of range");
    std::vector<int> pool(static_cast<std::size_t>(x));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> perm;
    perm.reserve(std::size_t(x));
    for (int i = x - 1; i >= 0; --i) {
        std::uint32_t f = kFactorial[std::size_t(i)];
        std::uint32_t digit = index / f;
        index %= f;
        perm.push_back(pool[digit]);
        pool.erase(pool.begin() + std::ptrdiff_t(digit));
    }
    return perm;
}

namespace {

void check_params(std::size_t length, const ScrambleParams& p) {
    if (p.block_size_x < 3 || p.block_size_x > 8) throw Error("block size out of range");
    if (p.pad_bits < 0 || p.pad_bits > 2) throw Error("pad bits out of range");
    if (length % std::size_t(p.block_size_x) != 0)
        throw Error("bit length not divisible by block size");
}

} // namespace

BitString scramble(const BitString& bits, const ScrambleParams& params) {
    BitString padded = bits;
    padded.insert(padded.end(), std::size_t(params.pad_bits), 0);
    check_params(padded.size(), params);
    const std::size_t x = std::size_t(params.block_size_x);
    const std::uint32_t fact = kFactorial[x];
    SplitMix64 prng(params.seed);
    BitString out(padded.size());
    for (std::size_t block = 0; block < padded.size() / x; ++block) {
        auto perm = nth_permutation(params.block_size_x, std::uint32_t(prng.next() % fact));
        for (std::size_t k = 0; k < x; ++k)
            out[block * x + k] = padded[block * x + std::size_t(perm[k] - 1)];
    }
    return out;
}

BitString unscramble(const BitString& bits, const ScrambleParams& params) {
    check_params(bits.size(), params);
    if (bits.size() < std::size_t(params.pad_bits)) throw Error("bit string shorter than pad");
    const std::size_t x = std::size_t(params.block_size_x);
    const std::uint32_t fact = kFactorial[x];
    SplitMix64 prng(params.seed);
    BitString padded(bits.size());
    for (std::size_t block = 0; block < bits.size() / x; ++block) {
        auto perm = nth_permutation(params.block_size_x, std::uint32_t(prng.next() % fact));
        for (std::size_t k = 0; k < x; ++k)
            padded[block * x + std::size_t(perm[k] - 1)] = bits[block * x + k];
    }
    for (std::size_t i = padded.size() - std::size_t(params.pad_bits); i < padded.size(); ++i) {
        if (padded[i]) throw DecryptError("declared pad bit is nonzero; wrong key?");
    }
    padded.resize(padded.size() - std::size_t(params.pad_bits));
    return padded;
}

} // namespace omfc
