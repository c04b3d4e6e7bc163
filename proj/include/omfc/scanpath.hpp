#ifndef OMFC_SCANPATH_HPP
#define OMFC_SCANPATH_HPP

#include <utility>

#include "omfc/bitplane.hpp"

namespace omfc {

// Bijective traversal order of a width x height grid.
//
// Pattern ids (compatibility contract with the key format):
//   0 raster row-major          4 diagonal zigzag (JPEG-style)
//   1 row snake (boustrophedon) 5 inward clockwise spiral from top-left
//   2 column-major              6 inward counterclockwise spiral from top-right
//   3 column snake              7 Hilbert curve (power-of-two squares)
struct ScanPath {
    int pattern_id = 0;
    std::uint32_t width = 0;
    std::uint32_t height = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> order; // (row, col)
};

inline constexpr int kScanPatternCount = 8;

ScanPath generate_path(int pattern_id, std::uint32_t width, std::uint32_t height);

// Read the plane along the path into a flat bit string.
BitString linearize(const BitPlane& plane, const ScanPath& path);

// Exact inverse of linearize; the result carries the given level tag.
BitPlane delinearize(const BitString& bits, const ScanPath& path, int level = 0);

// Evaluate all 8 candidate paths and return the one whose run encoding is
// smallest (rle2d::encoded_bit_count); ties break to the smallest id.
std::pair<ScanPath, std::size_t> select_optimal_path(const BitPlane& plane);

} // namespace omfc

#endif
