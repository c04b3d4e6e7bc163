#ifndef OMFC_RLE2D_HPP
#define OMFC_RLE2D_HPP

#include "omfc/scanpath.hpp"

namespace omfc {

// Run encoding of a linearized plane: the first bit plus the lengths of the
// maximal constant runs, and the minimal field width that stores every run.
struct RunsEncoding {
    Bit first_bit = 0;
    std::vector<std::uint32_t> runs;
    std::uint32_t max_run = 0;
    int field_width_b = 0;

    bool operator==(const RunsEncoding&) const = default;
};

RunsEncoding encode_runs(const BitString& bits);
BitString decode_runs(const RunsEncoding& enc);

// Each run as an unsigned field_width_b-bit big-endian field, concatenated.
BitString pack_runs(const RunsEncoding& enc);

// Inverse of pack_runs. Throws DecryptError on a decoded zero run (wrong key)
// and Error on a length mismatch.
std::vector<std::uint32_t> unpack_runs(const BitString& bits, int field_width_b,
                                       std::size_t run_count);

// Packed size of the plane along the path, plus one bit for the recorded
// first bit. This is the cost select_optimal_path minimizes.
std::size_t encoded_bit_count(const BitPlane& plane, const ScanPath& path);

} // namespace omfc

#endif
