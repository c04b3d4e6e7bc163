#ifndef OMFC_COMMON_HPP
#define OMFC_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace omfc {

// A bit string is a sequence of 0/1 values, one per element.
using Bit = std::uint8_t;
using BitString = std::vector<Bit>;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent serialized data (images, containers, keys).
class FormatError : public Error {
public:
    using Error::Error;
};

// Structural failure while decrypting; signals a wrong or corrupted key.
class DecryptError : public Error {
public:
    using Error::Error;
};

// Pack bits MSB-first into bytes; trailing pad bits are zero.
std::vector<std::uint8_t> pack_bits(const BitString& bits);

// Inverse of pack_bits. Throws FormatError if the byte count does not match
// ceil(bit_length/8) or any pad bit is nonzero.
BitString unpack_bits(const std::vector<std::uint8_t>& bytes, std::size_t bit_length);

} // namespace omfc

#endif
