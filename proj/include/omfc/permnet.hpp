#ifndef OMFC_PERMNET_HPP
#define OMFC_PERMNET_HPP

#include "omfc/common.hpp"

namespace omfc {

// Stage-selection vector: bit 0 selects an omega stage, bit 1 a flip stage.
using ControlBits = BitString;

// One omega stage on w >= 2 bits. In 1-based terms: out(2i) = in(i) and
// out(2i+1) = in(i+lim) for i = 1..lim (lim = ceil(w/2)), skipping
// out-of-range targets, then out(1) = in(w) for even w, out(1) = in(lim)
// for odd w.
BitString omega_stage(const BitString& in);

// Exact inverse stage: out(i) = in(2i), out(i+lim) = in(2i+1), with
// out(w) = in(1) for even w, out(lim) = in(1) for odd w.
BitString flip_stage(const BitString& in);

// Chain of stages applied left to right, one per control bit.
BitString omflip_apply(const BitString& bits, const ControlBits& ctrl);

// Complemented control bits in reverse order; inverse of omflip_apply.
BitString omflip_invert(const BitString& bits, const ControlBits& ctrl);

// Stable two-way partition: mask-0 bits in order, then mask-1 bits in order.
BitString grp_permute(const BitString& bits, const BitString& ctrl_mask);

} // namespace omfc

#endif
