#include <doctest.h>

#include <algorithm>
#include <random>

#include "omfc/bitplane.hpp"

using namespace omfc;

TEST_CASE("decompose is the binary expansion per pixel") {
    GrayImage img{4, 4, std::vector<std::uint8_t>(16, 170)}; // 10101010
    auto planes = decompose(img);
    for (int l = 0; l < 8; ++l) {
        CHECK(planes[l].level == l);
        CHECK(planes[l].bits[5] == (l % 2 == 1 ? 1 : 0));
    }

    GrayImage ones{4, 4, std::vector<std::uint8_t>(16, 255)};
    for (const auto& p : decompose(ones))
        CHECK(std::count(p.bits.begin(), p.bits.end(), 1) == 16);

    GrayImage one{4, 4, std::vector<std::uint8_t>(16, 1)};
    auto p1 = decompose(one);
    CHECK(p1[0].bits[0] == 1);
    for (int l = 1; l < 8; ++l) CHECK(p1[l].bits[0] == 0);
}

TEST_CASE("compose weights planes by significance") {
    GrayImage zero{4, 4, std::vector<std::uint8_t>(16, 0)};
    auto planes = decompose(zero);
    planes[7].bits[3] = 1;
    auto img = compose(planes);
    CHECK(img.pixels[3] == 128);
    img.pixels[3] = 0;
    CHECK(img.pixels == zero.pixels);
}

TEST_CASE("compose rejects bad plane sets") {
    GrayImage img{4, 4, std::vector<std::uint8_t>(16, 7)};
    auto planes = decompose(img);
    SUBCASE("duplicate level") {
        planes[3].level = 4;
        CHECK_THROWS_AS(compose(planes), Error);
    }
    SUBCASE("dimension mismatch") {
        planes[2].width = 8;
        CHECK_THROWS_AS(compose(planes), Error);
    }
}

TEST_CASE("compose inverts decompose") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        GrayImage img{8, 8, {}};
        img.pixels.resize(64);
        for (auto& p : img.pixels) p = std::uint8_t(rng());
        CHECK(compose(decompose(img)) == img);
        // the weighted-sum identity at a random pixel
        auto planes = decompose(img);
        std::size_t i = rng() % 64;
        int sum = 0;
        for (int l = 0; l < 8; ++l) sum += planes[l].bits[i] << l;
        CHECK(sum == img.pixels[i]);
    }
}
