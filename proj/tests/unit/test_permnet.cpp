#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "omfc/permnet.hpp"

using namespace omfc;

namespace {

BitString random_bits(std::size_t n, std::mt19937_64& rng) {
    BitString s(n);
    for (auto& b : s) b = rng() & 1u;
    return s;
}

} // namespace

TEST_CASE("omega stage tables for w=4 and w=5") {
    // distinct symbol values so the permutation itself is visible
    CHECK(omega_stage({10, 11, 12, 13}) == BitString{13, 10, 12, 11});         // (d,a,c,b)
    CHECK(omega_stage({10, 11, 12, 13, 14}) == BitString{12, 10, 13, 11, 14}); // (c,a,d,b,e)
    CHECK(omega_stage(BitString(7, 1)) == BitString(7, 1));
    CHECK_THROWS_AS(omega_stage({1}), Error);
}

TEST_CASE("flip stage tables for w=4 and w=5") {
    CHECK(flip_stage({10, 11, 12, 13}) == BitString{11, 13, 12, 10});         // (b,d,c,a)
    CHECK(flip_stage({10, 11, 12, 13, 14}) == BitString{11, 13, 10, 12, 14}); // (b,d,a,c,e)
    CHECK_THROWS_AS(flip_stage({1}), Error);
}

TEST_CASE("flip undoes omega for every width") {
    std::mt19937_64 rng(10);
    for (std::size_t w = 2; w <= 1024; ++w) {
        auto s = random_bits(w, rng);
        CHECK(flip_stage(omega_stage(s)) == s);
        CHECK(omega_stage(flip_stage(s)) == s);
    }
}

TEST_CASE("stages are bijections") {
    for (std::size_t w = 2; w <= 64; ++w) {
        BitString idx(w);
        std::iota(idx.begin(), idx.end(), 0);
        auto image = omega_stage(idx);
        auto sorted = image;
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == idx);
        image = flip_stage(idx);
        std::sort(image.begin(), image.end());
        CHECK(image == idx);
    }
}

TEST_CASE("omflip chain semantics") {
    std::mt19937_64 rng(11);
    auto s = random_bits(32, rng);
    CHECK(omflip_apply(s, {0, 1}) == s); // flip(omega(s))

    BitString abcd = {10, 11, 12, 13};
    // omega twice, by composing the single-stage table with itself
    CHECK(omflip_apply(abcd, {0, 0}) == omega_stage(omega_stage(abcd)));
    CHECK(omflip_apply(abcd, {0, 0}) == BitString{11, 13, 12, 10});

    CHECK_THROWS_AS(omflip_apply(s, {}), Error);
    CHECK_THROWS_AS(omflip_invert(s, {}), Error);
}

TEST_CASE("omflip_invert reverses omflip_apply") {
    std::mt19937_64 rng(12);
    auto s = random_bits(16, rng);
    CHECK(omflip_invert(omega_stage(s), {0}) == s); // single omega undone by single flip

    auto big = random_bits(16384, rng);
    auto ctrl = random_bits(300, rng);
    CHECK(omflip_invert(omflip_apply(big, ctrl), ctrl) == big);

    // (1,1) inverted by complemented bits in reverse order, i.e. (0,0)
    BitString abcd = {10, 11, 12, 13};
    CHECK(omflip_invert(omflip_apply(abcd, {1, 1}), {1, 1}) == abcd);
    CHECK(omflip_invert(abcd, {1, 1}) == omega_stage(omega_stage(abcd)));

    for (int trial = 0; trial < 20; ++trial) {
        auto data = random_bits(2 + rng() % 512, rng);
        auto c = random_bits(1 + rng() % 512, rng);
        auto enc = omflip_apply(data, c);
        CHECK(std::count(enc.begin(), enc.end(), 1) ==
              std::count(data.begin(), data.end(), 1));
        CHECK(omflip_invert(enc, c) == data);
    }
}

TEST_CASE("grp_permute gathers by mask") {
    CHECK(grp_permute({1, 0, 1, 1, 0}, {0, 1, 0, 1, 0}) == BitString{1, 1, 0, 0, 1});
    BitString s = {1, 0, 1, 1, 0, 0, 1};
    CHECK(grp_permute(s, BitString(7, 0)) == s);
    CHECK(grp_permute(s, BitString(7, 1)) == s);
    CHECK_THROWS_AS(grp_permute(s, BitString(6, 0)), Error);

    // stable two-way partition of distinct symbols
    BitString syms = {1, 2, 3, 4, 5, 6};
    CHECK(grp_permute(syms, {1, 0, 0, 1, 0, 1}) == BitString{2, 3, 5, 1, 4, 6});
}
