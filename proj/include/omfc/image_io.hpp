#ifndef OMFC_IMAGE_IO_HPP
#define OMFC_IMAGE_IO_HPP

#include <array>
#include <cstdint>

#include "omfc/common.hpp"

namespace omfc {

// 8-bit grayscale raster, square with power-of-two side in [4, 512].
struct GrayImage {
    std::uint32_t width = 0;
    std::uint32_t height = 0;
    std::vector<std::uint8_t> pixels; // row-major, top-left origin

    bool operator==(const GrayImage&) const = default;
};

void validate_image(const GrayImage& img);

// Binary PGM ("P5"), maxval 255 only.
GrayImage read_pgm(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> write_pgm(const GrayImage& img);

// Ciphertext container. Plane records are stored in transmission order;
// which level each record holds is key material and is not stored here.
struct CipherContainer {
    std::uint32_t width = 0;
    std::uint32_t height = 0;
    std::array<BitString, 8> planes;

    bool operator==(const CipherContainer&) const = default;
};

std::vector<std::uint8_t> write_container(const CipherContainer& c);
CipherContainer parse_container(const std::vector<std::uint8_t>& bytes);

} // namespace omfc

#endif
