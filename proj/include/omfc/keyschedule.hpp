#ifndef OMFC_KEYSCHEDULE_HPP
#define OMFC_KEYSCHEDULE_HPP

#include "omfc/bitplane.hpp"
#include "omfc/permnet.hpp"
#include "omfc/rle2d.hpp"
#include "omfc/scramble.hpp"

namespace omfc {

enum class PlaneMode : std::uint8_t {
    Rle = 0, // packed run fields proceed to scrambling
    Raw = 1  // run encoding would expand; the linearized bits proceed instead
};

// All secret parameters for one plane.
struct PlaneKey {
    int level = 0;
    int scan_pattern_id = 0;
    PlaneMode mode = PlaneMode::Rle;
    Bit first_bit = 0;           // zero when mode == Raw
    std::uint32_t run_count = 0; // zero when mode == Raw
    int field_width_b = 0;       // zero when mode == Raw
    int block_size_x = 3;
    int pad_bits = 0;
    std::uint64_t scramble_seed = 0;
    ControlBits control_bits;

    bool operator==(const PlaneKey&) const = default;
};

struct ImageKey {
    std::uint64_t master_seed = 0;
    std::array<int, 8> plane_order{}; // transmission order of plane levels
    std::array<PlaneKey, 8> plane_keys{}; // indexed by level

    bool operator==(const ImageKey&) const = default;
};

void validate_key(const ImageKey& key);

// Deterministic key derivation from (image, master_seed): optimal scan path,
// run parameters, per-plane scramble seed and control bits, transmission
// order. Control vectors are 512 bits per plane.
ImageKey keygen(const GrayImage& img, std::uint64_t master_seed);

// Intermediate streams of one plane's encryption, newest last.
struct PlaneStages {
    BitString linearized;
    BitString packed;    // run fields, or the linearized bits in Raw mode
    BitString scrambled;
    BitString omflipped;
};

// All four stages for one plane; encrypt and the analysis taps share this.
PlaneStages encrypt_plane(const BitPlane& plane, const PlaneKey& pk);

CipherContainer encrypt(const GrayImage& img, const ImageKey& key);

// Stage-by-stage inverse. Throws DecryptError when a structural check fails
// (nonzero pad bits, zero run, run sum != plane area): the key is wrong or
// the container corrupted.
GrayImage decrypt(const CipherContainer& container, const ImageKey& key);

std::vector<std::uint8_t> serialize_key(const ImageKey& key);
ImageKey parse_key(const std::vector<std::uint8_t>& bytes);

} // namespace omfc

#endif
