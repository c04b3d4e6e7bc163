#include "omfc/common.hpp"

namespace omfc {

std::vector<std::uint8_t> pack_bits(const BitString& bits) {
    std::vector<std::uint8_t> out((bits.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) out[i / 8] |= std::uint8_t(0x80u >> (i % 8));
    }
    return out;
}

BitString unpack_bits(const std::vector<std::uint8_t>& bytes, std::size_t bit_length) {
    if (bytes.size() != (bit_length + 7) / 8)
        throw FormatError("bit payload length mismatch");
    BitString out(bit_length);
    for (std::size_t i = 0; i < bit_length; ++i)
        out[i] = (bytes[i / 8] >> (7 - i % 8)) & 1u;
    // trailing pad bits must be zero
    for (std::size_t i = bit_length; i < bytes.size() * 8; ++i) {
        if ((bytes[i / 8] >> (7 - i % 8)) & 1u)
            throw FormatError("nonzero pad bit in packed payload");
    }
    return out;
}

} // namespace omfc
