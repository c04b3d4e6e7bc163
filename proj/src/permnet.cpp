#include "omfc/permnet.hpp"

namespace omfc {

// 1-based index math from the stage definitions, rebased to 0-based storage.

BitString omega_stage(const BitString& in) {
    const std::size_t w = in.size();
    if (w < 2) throw Error("stage width must be >= 2");
    const std::size_t lim = (w + 1) / 2;
    BitString out(w);
    for (std::size_t i = 1; i <= lim; ++i) {
        if (2 * i <= w) out[2 * i - 1] = in[i - 1];
        if (2 * i + 1 <= w && i + lim <= w) out[2 * i] = in[i + lim - 1];
    }
    out[0] = (w % 2 == 0) ? in[w - 1] : in[lim - 1];
    return out;
}

BitString flip_stage(const BitString& in) {
    const std::size_t w = in.size();
    if (w < 2) throw Error("stage width must be >= 2");
    const std::size_t lim = (w + 1) / 2;
    BitString out(w);
    for (std::size_t i = 1; i <= lim; ++i) {
        if (2 * i <= w) out[i - 1] = in[2 * i - 1];
        if (2 * i + 1 <= w && i + lim <= w) out[i + lim - 1] = in[2 * i];
    }
    if (w % 2 == 0)
        out[w - 1] = in[0];
    else
        out[lim - 1] = in[0];
    return out;
}

BitString omflip_apply(const BitString& bits, const ControlBits& ctrl) {
    if (ctrl.empty()) throw Error("empty control vector");
    BitString out = bits;
    for (Bit c : ctrl) out = c ? flip_stage(out) : omega_stage(out);
    return out;
}

BitString omflip_invert(const BitString& bits, const ControlBits& ctrl) {
    if (ctrl.empty()) throw Error("empty control vector");
    BitString out = bits;
    for (auto it = ctrl.rbegin(); it != ctrl.rend(); ++it)
        out = *it ? omega_stage(out) : flip_stage(out);
    return out;
}

BitString grp_permute(const BitString& bits, const BitString& ctrl_mask) {
    if (bits.size() != ctrl_mask.size()) throw Error("mask length mismatch");
    BitString out;
    out.reserve(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (!ctrl_mask[i]) out.push_back(bits[i]);
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (ctrl_mask[i]) out.push_back(bits[i]);
    return out;
}

} // namespace omfc
