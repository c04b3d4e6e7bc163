#include "omfc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace omfc {

double binary_entropy(const BitString& bits) {
    if (bits.empty()) throw Error("entropy of empty bit string");
    std::size_t ones = 0;
    for (Bit b : bits) ones += b;
    double p = double(ones) / double(bits.size());
    double h = 0.0;
    if (p > 0.0) h -= p * std::log2(p);
    if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
    return h;
}

std::optional<double> correlation(const BitString& a, const BitString& b) {
    if (a.size() != b.size()) throw Error("correlation length mismatch");
    if (a.empty()) throw Error("correlation of empty bit strings");
    const double n = double(a.size());
    double sa = 0, sb = 0, sab = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sa += a[i];
        sb += b[i];
        sab += double(a[i]) * b[i];
    }
    double va = sa * (n - sa); // n^2 * variance for 0/1 data
    double vb = sb * (n - sb);
    if (va == 0.0 || vb == 0.0) return std::nullopt;
    return (n * sab - sa * sb) / std::sqrt(va * vb);
}

double key_sensitivity_probe(const GrayImage& img, const ImageKey& key, int flip_count,
                             std::uint64_t probe_seed) {
    CipherContainer container = encrypt(img, key);
    ImageKey tampered = key;
    if (flip_count > 0) {
        SplitMix64 prng(probe_seed);
        PlaneKey& pk = tampered.plane_keys[std::size_t(prng.next() % 8)];
        std::vector<std::size_t> positions;
        while (int(positions.size()) < flip_count) {
            std::size_t pos = std::size_t(prng.next() % pk.control_bits.size());
            if (std::find(positions.begin(), positions.end(), pos) == positions.end())
                positions.push_back(pos);
        }
        for (std::size_t pos : positions) pk.control_bits[pos] ^= 1u;
    }
    GrayImage restored;
    try {
        restored = decrypt(container, tampered);
    } catch (const DecryptError&) {
        return 1.0;
    }
    std::size_t mismatched = 0;
    for (std::size_t i = 0; i < img.pixels.size(); ++i)
        mismatched += img.pixels[i] != restored.pixels[i];
    return double(mismatched) / double(img.pixels.size());
}

BitString grp_mask_for_plane(const PlaneKey& pk, std::size_t length) {
    SplitMix64 prng(pk.scramble_seed ^ 0x4752505F4D41534BULL);
    BitString mask(length);
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < length; ++i) {
        if (i % 64 == 0) word = prng.next();
        mask[i] = (word >> (63 - i % 64)) & 1u;
    }
    return mask;
}

Report analyze(const GrayImage& img, const ImageKey& key, int sensitivity_trials) {
    validate_image(img);
    validate_key(key);
    Report rep;
    auto planes = decompose(img);
    for (int l = 0; l < 8; ++l) {
        const PlaneKey& pk = key.plane_keys[std::size_t(l)];
        PlaneStages st = encrypt_plane(planes[std::size_t(l)], pk);
        PlaneMetrics& m = rep.planes[std::size_t(l)];
        m.level = l;
        m.cipher_entropy = binary_entropy(st.omflipped);
        m.corr_omflip = correlation(st.scrambled, st.omflipped);
        BitString grp = grp_permute(st.scrambled, grp_mask_for_plane(pk, st.scrambled.size()));
        m.corr_grp = correlation(st.scrambled, grp);
    }
    rep.sensitivity_trials = sensitivity_trials;
    rep.sensitivity_flip0 = key_sensitivity_probe(img, key, 0);
    double total = 0.0;
    for (int t = 0; t < sensitivity_trials; ++t)
        total += key_sensitivity_probe(img, key, 3, std::uint64_t(t) + 1);
    rep.sensitivity_flip3 = sensitivity_trials > 0 ? total / sensitivity_trials : 0.0;
    return rep;
}

namespace {

std::string fmt_corr(const std::optional<double>& v) {
    if (!v) return "undefined";
    std::ostringstream os;
    os << *v;
    return os.str();
}

} // namespace

std::string report_text(const Report& r) {
    std::ostringstream os;
    os << "plane  entropy   corr(omflip)  corr(grp)\n";
    for (const PlaneMetrics& m : r.planes) {
        os << "b" << m.level << "     " << m.cipher_entropy << "  " << fmt_corr(m.corr_omflip)
           << "  " << fmt_corr(m.corr_grp) << "\n";
    }
    os << "key sensitivity: mismatch " << r.sensitivity_flip0 << " with 0 flipped bits, mean "
       << r.sensitivity_flip3 << " with 3 flipped bits over " << r.sensitivity_trials
       << " trials\n";
    return os.str();
}

std::string report_machine(const Report& r) {
    std::ostringstream os;
    for (const PlaneMetrics& m : r.planes)
        os << "entropy," << m.level << ",cipher," << m.cipher_entropy << "\n";
    for (const PlaneMetrics& m : r.planes)
        os << "correlation," << m.level << ",omflip," << fmt_corr(m.corr_omflip) << "\n";
    for (const PlaneMetrics& m : r.planes)
        os << "correlation," << m.level << ",grp," << fmt_corr(m.corr_grp) << "\n";
    os << "keysensitivity,all,flip0," << r.sensitivity_flip0 << "\n";
    os << "keysensitivity,all,flip3," << r.sensitivity_flip3 << "\n";
    return os.str();
}

} // namespace omfc
