#include "omfc/scanpath.hpp"

#include <algorithm>

#include "omfc/rle2d.hpp"

namespace omfc {

namespace {

using Cell = std::pair<std::uint32_t, std::uint32_t>;

void raster(std::vector<Cell>& order, std::uint32_t w, std::uint32_t h, bool snake) {
    for (std::uint32_t r = 0; r < h; ++r) {
        if (snake && (r & 1u)) {
            for (std::uint32_t c = w; c-- > 0;) order.emplace_back(r, c);
        } else {
            for (std::uint32_t c = 0; c < w; ++c) order.emplace_back(r, c);
        }
    }
}

void column(std::vector<Cell>& order, std::uint32_t w, std::uint32_t h, bool snake) {
    for (std::uint32_t c = 0; c < w; ++c) {
        if (snake && (c & 1u)) {
            for (std::uint32_t r = h; r-- > 0;) order.emplace_back(r, c);
        } else {
            for (std::uint32_t r = 0; r < h; ++r) order.emplace_back(r, c);
        }
    }
}

// JPEG-style zigzag over anti-diagonals, starting (0,0) -> (0,1).
void zigzag(std::vector<Cell>& order, std::uint32_t w, std::uint32_t h) {
    for (std::uint32_t s = 0; s <= w + h - 2; ++s) {
        std::uint32_t r_lo = (s >= w) ? s - w + 1 : 0;
        std::uint32_t r_hi = std::min(s, h - 1);
        if (s & 1u) {
            for (std::uint32_t r = r_lo; r <= r_hi; ++r) order.emplace_back(r, s - r);
        } else {
            for (std::uint32_t r = r_hi + 1; r-- > r_lo;) order.emplace_back(r, s - r);
        }
    }
}

// Inward clockwise spiral starting at (0,0).
void spiral_cw(std::vector<Cell>& order, std::uint32_t w, std::uint32_t h) {
    std::uint32_t top = 0, bottom = h - 1, left = 0, right = w - 1;
    while (top <= bottom && left <= right) {
        for (std::uint32_t c = left; c <= right; ++c) order.emplace_back(top, c);
        for (std::uint32_t r = top + 1; r <= bottom; ++r) order.emplace_back(r, right);
        if (top < bottom) {
            for (std::uint32_t c = right; c-- > left;) order.emplace_back(bottom, c);
        }
        if (left < right && top < bottom) {
            for (std::uint32_t r = bottom; r-- > top + 1;) order.emplace_back(r, left);
        }
        ++top;
        ++left;
        if (bottom == 0 || right == 0) break;
        --bottom;
        --right;
    }
}

// Index d to (row, col) on an n x n Hilbert curve, n a power of two.
Cell hilbert_cell(std::uint32_t n, std::uint64_t d) {
    std::uint32_t x = 0, y = 0;
    for (std::uint32_t s = 1; s < n; s *= 2) {
        std::uint32_t rx = 1u & std::uint32_t(d / 2);
        std::uint32_t ry = 1u & std::uint32_t(d ^ rx);
        if (ry == 0) {
            if (rx == 1) {
                x = s - 1 - x;
                y = s - 1 - y;
            }
            std::swap(x, y);
        }
        x += s * rx;
        y += s * ry;
        d /= 4;
    }
    return {y, x};
}

} // namespace

ScanPath generate_path(int pattern_id, std::uint32_t width, std::uint32_t height) {
    if (width == 0 || height == 0) throw Error("empty plane");
    ScanPath path;
    path.pattern_id = pattern_id;
    path.width = width;
    path.height = height;
    path.order.reserve(std::size_t(width) * height);
    switch (pattern_id) {
    case 0: raster(path.order, width, height, false); break;
    case 1: raster(path.order, width, height, true); break;
    case 2: column(path.order, width, height, false); break;
    case 3: column(path.order, width, height, true); break;
    case 4: zigzag(path.order, width, height); break;
    case 5: spiral_cw(path.order, width, height); break;
    case 6: {
        // counterclockwise from top-right: mirror of the clockwise spiral
        spiral_cw(path.order, width, height);
        for (Cell& cell : path.order) cell.second = width - 1 - cell.second;
        break;
    }
    case 7: {
        if (width != height || (width & (width - 1)) != 0)
            throw Error("Hilbert path needs a power-of-two square");
        for (std::uint64_t d = 0; d < std::uint64_t(width) * height; ++d)
            path.order.push_back(hilbert_cell(width, d));
        break;
    }
    default:
        throw Error("unknown scan pattern id " + std::to_string(pattern_id));
    }
    return path;
}

BitString linearize(const BitPlane& plane, const ScanPath& path) {
    if (plane.width != path.width || plane.height != path.height)
        throw Error("plane/path dimension mismatch");
    BitString out;
    out.reserve(path.order.size());
    for (const auto& [r, c] : path.order) out.push_back(plane.at(r, c));
    return out;
}

BitPlane delinearize(const BitString& bits, const ScanPath& path, int level) {
    if (bits.size() != path.order.size())
        throw Error("bit string length does not match path");
    BitPlane plane;
    plane.level = level;
    plane.width = path.width;
    plane.height = path.height;
    plane.bits.resize(bits.size());
    for (std::size_t k = 0; k < bits.size(); ++k) {
        const auto& [r, c] = path.order[k];
        plane.bits[std::size_t(r) * path.width + c] = bits[k];
    }
    return plane;
}

std::pair<ScanPath, std::size_t> select_optimal_path(const BitPlane& plane) {
    ScanPath best;
    std::size_t best_cost = 0;
    for (int id = 0; id < kScanPatternCount; ++id) {
        ScanPath candidate = generate_path(id, plane.width, plane.height);
        std::size_t cost = encoded_bit_count(plane, candidate);
        if (id == 0 || cost < best_cost) {
            best = std::move(candidate);
            best_cost = cost;
        }
    }
    return {std::move(best), best_cost};
}

} // namespace omfc
