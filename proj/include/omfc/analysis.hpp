#ifndef OMFC_ANALYSIS_HPP
#define OMFC_ANALYSIS_HPP

#include <optional>
#include <string>

#include "omfc/keyschedule.hpp"

namespace omfc {

// H(p) = -p log2 p - (1-p) log2(1-p) with 0 log 0 = 0, for p = ones fraction.
double binary_entropy(const BitString& bits);

// Pearson correlation of two equal-length bit strings as 0/1 numerics.
// nullopt when either string has zero variance (undefined, not 0).
std::optional<double> correlation(const BitString& a, const BitString& b);

// Flip flip_count randomly chosen control bits in one randomly chosen
// plane's key, decrypt, and return the fraction of mismatched pixels.
// Structural decrypt failures count as mismatch 1.0.
double key_sensitivity_probe(const GrayImage& img, const ImageKey& key, int flip_count,
                             std::uint64_t probe_seed = 1);

struct PlaneMetrics {
    int level = 0;
    double cipher_entropy = 0.0;
    std::optional<double> corr_omflip; // scrambled vs OMFLIP stream
    std::optional<double> corr_grp;    // scrambled vs GRP-permuted stream
};

struct Report {
    std::array<PlaneMetrics, 8> planes{};
    double sensitivity_flip0 = 0.0; // mismatch with unchanged key
    double sensitivity_flip3 = 0.0; // mean mismatch over probes with 3 flips
    int sensitivity_trials = 0;
};

Report analyze(const GrayImage& img, const ImageKey& key, int sensitivity_trials = 10);

// GRP control mask used for the comparison cipher, derived from the plane's
// scramble seed so the comparison is keyed like the OMFLIP stage.
BitString grp_mask_for_plane(const PlaneKey& pk, std::size_t length);

std::string report_text(const Report& r);
// One `metric,plane,stage,value` line per value.
std::string report_machine(const Report& r);

} // namespace omfc

#endif
