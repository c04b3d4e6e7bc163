#include <doctest.h>

#include <algorithm>
#include <random>

#include "omfc/keyschedule.hpp"

using namespace omfc;

namespace {

GrayImage random_image(std::uint32_t side, std::mt19937_64& rng) {
    GrayImage img{side, side, {}};
    img.pixels.resize(std::size_t(side) * side);
    for (auto& p : img.pixels) p = std::uint8_t(rng());
    return img;
}

} // namespace

TEST_CASE("keygen is deterministic and per-plane distinct") {
    std::mt19937_64 rng(13);
    auto img = random_image(16, rng);
    auto k1 = keygen(img, 42);
    auto k2 = keygen(img, 42);
    CHECK(k1 == k2);

    for (int a = 0; a < 8; ++a)
        for (int b = a + 1; b < 8; ++b)
            CHECK(k1.plane_keys[a].control_bits != k1.plane_keys[b].control_bits);

    for (const auto& pk : k1.plane_keys) CHECK(pk.control_bits.size() == 512);

    auto sorted = k1.plane_order;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::array<int, 8>{0, 1, 2, 3, 4, 5, 6, 7});
}

TEST_CASE("keygen on an all-zero image yields single-run planes") {
    GrayImage img{8, 8, std::vector<std::uint8_t>(64, 0)};
    auto key = keygen(img, 7);
    for (const auto& pk : key.plane_keys) {
        CHECK(pk.mode == PlaneMode::Rle);
        CHECK(pk.run_count == 1);
        CHECK(pk.first_bit == 0);
    }
}

TEST_CASE("encrypt/decrypt roundtrip") {
    std::mt19937_64 rng(14);
    for (std::uint32_t side : {4u, 8u, 16u}) {
        for (int trial = 0; trial < 3; ++trial) {
            auto img = random_image(side, rng);
            auto key = keygen(img, rng());
            auto container = encrypt(img, key);
            CHECK(decrypt(container, key) == img);
        }
    }
}

TEST_CASE("ciphertext lengths equal the scrambled padded lengths") {
    std::mt19937_64 rng(15);
    auto img = random_image(8, rng);
    auto key = keygen(img, 3);
    auto container = encrypt(img, key);
    auto planes = decompose(img);
    for (std::size_t slot = 0; slot < 8; ++slot) {
        const auto& pk = key.plane_keys[std::size_t(key.plane_order[slot])];
        auto st = encrypt_plane(planes[std::size_t(pk.level)], pk);
        CHECK(container.planes[slot].size() == st.scrambled.size());
        CHECK(st.scrambled.size() == st.packed.size() + std::size_t(pk.pad_bits));
    }
}

TEST_CASE("different master seeds give different ciphertexts") {
    std::mt19937_64 rng(16);
    auto img = random_image(16, rng);
    auto c1 = encrypt(img, keygen(img, 1));
    auto c2 = encrypt(img, keygen(img, 2));
    CHECK(c1.planes != c2.planes);
}

TEST_CASE("wrong keys fail loudly or wrongly") {
    std::mt19937_64 rng(17);
    auto img = random_image(16, rng);
    auto key = keygen(img, 99);
    auto container = encrypt(img, key);

    SUBCASE("mis-permuted plane order") {
        auto bad = key;
        std::swap(bad.plane_order[0], bad.plane_order[1]);
        bool wrong = false;
        try {
            wrong = decrypt(container, bad) != img;
        } catch (const DecryptError&) {
            wrong = true;
        }
        CHECK(wrong);
    }
    SUBCASE("three flipped control bits") {
        auto bad = key;
        bad.plane_keys[7].control_bits[3] ^= 1u;
        bad.plane_keys[7].control_bits[100] ^= 1u;
        bad.plane_keys[7].control_bits[400] ^= 1u;
        bool wrong = false;
        try {
            wrong = decrypt(container, bad) != img;
        } catch (const DecryptError&) {
            wrong = true;
        }
        CHECK(wrong);
    }
}

TEST_CASE("key serialization roundtrips") {
    std::mt19937_64 rng(18);
    for (int trial = 0; trial < 5; ++trial) {
        auto key = keygen(random_image(8, rng), rng());
        CHECK(parse_key(serialize_key(key)) == key);
    }

    auto key = keygen(random_image(8, rng), 5);
    auto bytes = serialize_key(key);
    bytes.resize(bytes.size() - 3);
    CHECK_THROWS_AS(parse_key(bytes), FormatError);

    auto dup = key;
    dup.plane_order[0] = dup.plane_order[1];
    CHECK_THROWS_AS(serialize_key(dup), FormatError);
    CHECK_THROWS_AS(validate_key(dup), FormatError);
}
