#include <doctest.h>

#include <random>

#include "omfc/image_io.hpp"

using namespace omfc;

namespace {

std::vector<std::uint8_t> pgm_bytes(const std::string& header,
                                    std::initializer_list<std::uint8_t> payload) {
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.insert(out.end(), payload);
    return out;
}

GrayImage random_image(std::uint32_t side, std::mt19937_64& rng) {
    GrayImage img{side, side, {}};
    img.pixels.resize(std::size_t(side) * side);
    for (auto& p : img.pixels) p = std::uint8_t(rng());
    return img;
}

} // namespace

TEST_CASE("read_pgm maps fields directly") {
    auto img = read_pgm(pgm_bytes("P5\n2 2\n255\n", {0, 255, 128, 64}));
    CHECK(img.width == 2);
    CHECK(img.height == 2);
    CHECK(img.pixels == std::vector<std::uint8_t>{0, 255, 128, 64});
}

TEST_CASE("read_pgm accepts comments and extra whitespace") {
    auto img = read_pgm(pgm_bytes("P5\n# a comment\n 4 4 \n255\n",
                                  {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15}));
    CHECK(img.width == 4);
}

TEST_CASE("read_pgm rejects bad inputs") {
    CHECK_THROWS_AS(read_pgm(pgm_bytes("P5\n3 3\n255\n", {0, 0, 0, 0, 0, 0, 0, 0, 0})),
                    FormatError); // non-power-of-two
    CHECK_THROWS_AS(read_pgm(pgm_bytes("P5\n2 2\n65535\n", {0, 0, 0, 0, 0, 0, 0, 0})),
                    FormatError); // unsupported depth
    CHECK_THROWS_AS(read_pgm(pgm_bytes("P5\n2 4\n255\n", {0, 0, 0, 0, 0, 0, 0, 0})),
                    FormatError); // non-square
    CHECK_THROWS_AS(read_pgm(pgm_bytes("P6\n2 2\n255\n", {0, 0, 0, 0})), FormatError);
    CHECK_THROWS_AS(read_pgm(pgm_bytes("P5\n2 2\n255\n", {0, 0})), FormatError); // truncated
}

TEST_CASE("write_pgm roundtrips") {
    GrayImage img{2, 2, {0, 255, 128, 64}};
    CHECK(read_pgm(write_pgm(img)) == img);

    GrayImage zeros{4, 4, std::vector<std::uint8_t>(16, 0)};
    auto bytes = write_pgm(zeros);
    std::vector<std::uint8_t> payload(bytes.end() - 16, bytes.end());
    CHECK(payload == std::vector<std::uint8_t>(16, 0));

    std::mt19937_64 rng(1);
    auto big = random_image(128, rng);
    CHECK(read_pgm(write_pgm(big)) == big);
}

TEST_CASE("container roundtrips bit-exactly") {
    CipherContainer c{4, 4, {}};
    SUBCASE("empty records") {
        auto parsed = parse_container(write_container(c));
        CHECK(parsed == c);
    }
    SUBCASE("varying lengths") {
        std::mt19937_64 rng(2);
        std::size_t len = 10;
        for (auto& plane : c.planes) {
            plane.resize(len++);
            for (auto& b : plane) b = rng() & 1u;
        }
        CHECK(parse_container(write_container(c)) == c);
    }
}

TEST_CASE("container packing is MSB-first with zero pad") {
    CipherContainer c{4, 4, {}};
    c.planes[0] = {1, 0, 1, 0, 0, 1, 1, 1, 0, 1, 1, 0}; // 12 bits -> 0xA7 0x60
    auto bytes = write_container(c);
    // magic(5) + dims(8) + record 0 length(4)
    CHECK(bytes[17] == 0xA7);
    CHECK(bytes[18] == 0x60);
}

TEST_CASE("parse_container rejects damage") {
    CipherContainer c{4, 4, {}};
    c.planes[3] = {1, 1, 0, 1};
    auto bytes = write_container(c);

    auto bad_magic = bytes;
    bad_magic[0] = 'X';
    CHECK_THROWS_AS(parse_container(bad_magic), FormatError);

    auto truncated = bytes;
    truncated.pop_back(); // drops a whole record
    CHECK_THROWS_AS(parse_container(truncated), FormatError);

    auto dirty_pad = bytes;
    // record 3 payload byte: magic(5)+dims(8)+3 empty records(12)+length(4)
    dirty_pad[29] |= 0x01;
    CHECK_THROWS_AS(parse_container(dirty_pad), FormatError);
}
