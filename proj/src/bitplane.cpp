#include "omfc/bitplane.hpp"

namespace omfc {

std::array<BitPlane, 8> decompose(const GrayImage& img) {
    std::array<BitPlane, 8> planes;
    for (int l = 0; l < 8; ++l) {
        planes[l].level = l;
        planes[l].width = img.width;
        planes[l].height = img.height;
        planes[l].bits.resize(img.pixels.size());
    }
    for (std::size_t i = 0; i < img.pixels.size(); ++i) {
        std::uint8_t v = img.pixels[i];
        for (int l = 0; l < 8; ++l) planes[l].bits[i] = (v >> l) & 1u;
    }
    return planes;
}

GrayImage compose(const std::array<BitPlane, 8>& planes) {
    std::array<const BitPlane*, 8> by_level{};
    for (const BitPlane& p : planes) {
        if (p.level < 0 || p.level > 7) throw Error("plane level out of range");
        if (by_level[p.level]) throw Error("duplicate plane level");
        by_level[p.level] = &p;
    }
    const BitPlane& first = *by_level[0];
    GrayImage img;
    img.width = first.width;
    img.height = first.height;
    img.pixels.assign(std::size_t(img.width) * img.height, 0);
    for (int l = 0; l < 8; ++l) {
        const BitPlane& p = *by_level[l];
        if (p.width != img.width || p.height != img.height || p.bits.size() != img.pixels.size())
            throw Error("plane dimension mismatch");
        for (std::size_t i = 0; i < img.pixels.size(); ++i)
            img.pixels[i] |= std::uint8_t(p.bits[i] << l);
    }
    return img;
}

} // namespace omfc
