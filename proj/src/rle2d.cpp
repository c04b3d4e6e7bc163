#include "omfc/rle2d.hpp"

#include <algorithm>
#include <bit>

namespace omfc {

namespace {

int min_field_width(std::uint32_t max_run) {
    return std::bit_width(max_run);
}

} // namespace

RunsEncoding encode_runs(const BitString& bits) {
    if (bits.empty()) throw Error("cannot run-encode an empty bit string");
    RunsEncoding enc;
    enc.first_bit = bits[0];
    std::uint32_t run = 1;
    for (std::size_t i = 1; i < bits.size(); ++i) {
        if (bits[i] == bits[i - 1]) {
            ++run;
        } else {
            enc.runs.push_back(run);
            run = 1;
        }
    }
    enc.runs.push_back(run);
    enc.max_run = *std::max_element(enc.runs.begin(), enc.runs.end());
    enc.field_width_b = min_field_width(enc.max_run);
    return enc;
}

BitString decode_runs(const RunsEncoding& enc) {
    BitString out;
    Bit value = enc.first_bit;
    for (std::uint32_t run : enc.runs) {
        if (run == 0) throw DecryptError("zero-length run");
        out.insert(out.end(), run, value);
        value ^= 1u;
    }
    return out;
}

BitString pack_runs(const RunsEncoding& enc) {
    BitString out;
    out.reserve(enc.runs.size() * std::size_t(enc.field_width_b));
    for (std::uint32_t run : enc.runs) {
        if (enc.field_width_b < 32 && (run >> enc.field_width_b) != 0)
            throw Error("run exceeds field capacity");
        for (int bit = enc.field_width_b; bit-- > 0;)
            out.push_back((run >> bit) & 1u);
    }
    return out;
}

std::vector<std::uint32_t> unpack_runs(const BitString& bits, int field_width_b,
                                       std::size_t run_count) {
    if (bits.size() != run_count * std::size_t(field_width_b))
        throw Error("packed run string length mismatch");
    std::vector<std::uint32_t> runs(run_count);
    std::size_t pos = 0;
    for (std::uint32_t& run : runs) {
        std::uint32_t v = 0;
        for (int bit = 0; bit < field_width_b; ++bit) v = (v << 1) | bits[pos++];
        if (v == 0) throw DecryptError("decoded zero run; wrong key?");
        run = v;
    }
    return runs;
}

std::size_t encoded_bit_count(const BitPlane& plane, const ScanPath& path) {
    if (plane.width != path.width || plane.height != path.height)
        throw Error("plane/path dimension mismatch");
    // run counting along the path, without materializing the encoding
    std::size_t run_count = 1;
    std::uint32_t max_run = 1, run = 1;
    Bit prev = plane.at(path.order[0].first, path.order[0].second);
    for (std::size_t k = 1; k < path.order.size(); ++k) {
        Bit b = plane.at(path.order[k].first, path.order[k].second);
        if (b == prev) {
            ++run;
        } else {
            max_run = std::max(max_run, run);
            run = 1;
            ++run_count;
            prev = b;
        }
    }
    max_run = std::max(max_run, run);
    return run_count * std::size_t(min_field_width(max_run)) + 1;
}

} // namespace omfc
