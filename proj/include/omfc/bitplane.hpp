#ifndef OMFC_BITPLANE_HPP
#define OMFC_BITPLANE_HPP

#include <array>

#include "omfc/image_io.hpp"

namespace omfc {

// One binary plane of an 8-bit image. Level 0 is the least significant bit.
struct BitPlane {
    int level = 0;
    std::uint32_t width = 0;
    std::uint32_t height = 0;
    BitString bits; // row-major

    Bit at(std::uint32_t row, std::uint32_t col) const { return bits[std::size_t(row) * width + col]; }

    bool operator==(const BitPlane&) const = default;
};

// Split an image into planes b0..b7; plane l holds bit l of every pixel.
std::array<BitPlane, 8> decompose(const GrayImage& img);

// Weighted sum of the planes: pixel = sum over l of plane_l * 2^l.
// Throws Error on dimension mismatch or duplicate/missing level.
GrayImage compose(const std::array<BitPlane, 8>& planes);

} // namespace omfc

#endif
