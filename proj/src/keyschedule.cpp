#include "omfc/keyschedule.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>

namespace omfc {

namespace {

constexpr int kControlBitsLength = 512; // >= the required minimum of 300

// Source-index table of one omega stage on w elements: out[j] = in[src[j]].
std::vector<std::uint32_t> omega_sources(std::size_t w) {
    const std::size_t lim = (w + 1) / 2;
    std::vector<std::uint32_t> src(w);
    for (std::size_t i = 1; i <= lim; ++i) {
        if (2 * i <= w) src[2 * i - 1] = std::uint32_t(i - 1);
        if (2 * i + 1 <= w && i + lim <= w) src[2 * i] = std::uint32_t(i + lim - 1);
    }
    src[0] = std::uint32_t(w % 2 == 0 ? w - 1 : lim - 1);
    return src;
}

std::vector<std::uint32_t> flip_sources(std::size_t w) {
    const std::size_t lim = (w + 1) / 2;
    std::vector<std::uint32_t> src(w);
    for (std::size_t i = 1; i <= lim; ++i) {
        if (2 * i <= w) src[i - 1] = std::uint32_t(2 * i - 1);
        if (2 * i + 1 <= w && i + lim <= w) src[i + lim - 1] = std::uint32_t(2 * i);
    }
    if (w % 2 == 0)
        src[w - 1] = 0;
    else
        src[lim - 1] = 0;
    return src;
}

// Flip undoes omega, so a control vector's net effect on a stream of width w
// collapses to a power of the single omega permutation. A vector whose power
// is (near-)identity would leave the stream visibly unpermuted, so keygen
// rejects such draws.
std::size_t net_fixed_points(const ControlBits& ctrl, std::size_t w) {
    long d = 0;
    for (Bit c : ctrl) d += c ? -1 : 1;
    if (d == 0) return w;
    auto src = d > 0 ? omega_sources(w) : flip_sources(w);
    std::vector<std::uint32_t> perm(w), tmp(w);
    std::iota(perm.begin(), perm.end(), 0);
    for (long step = 0; step < std::labs(d); ++step) {
        for (std::size_t j = 0; j < w; ++j) tmp[j] = perm[src[j]];
        perm.swap(tmp);
    }
    std::size_t fixed = 0;
    for (std::size_t j = 0; j < w; ++j)
        if (perm[j] == j) ++fixed;
    return fixed;
}

ControlBits draw_control_bits(SplitMix64& prng, std::size_t stream_width) {
    const std::size_t max_fixed = std::max<std::size_t>(2, stream_width / 10);
    ControlBits ctrl(kControlBitsLength);
    for (int attempt = 0; attempt < 256; ++attempt) {
        for (int word = 0; word < kControlBitsLength / 64; ++word) {
            std::uint64_t v = prng.next();
            for (int bit = 0; bit < 64; ++bit)
                ctrl[std::size_t(word) * 64 + std::size_t(bit)] = (v >> (63 - bit)) & 1u;
        }
        if (net_fixed_points(ctrl, stream_width) <= max_fixed) break;
    }
    return ctrl;
}

struct PlaneLayout {
    PlaneMode mode;
    RunsEncoding enc;       // valid in Rle mode
    std::size_t payload_len; // bits entering the scrambler before padding
};

PlaneLayout plane_layout(const BitPlane& plane, const ScanPath& path) {
    BitString lin = linearize(plane, path);
    RunsEncoding enc = encode_runs(lin);
    std::size_t packed_len = enc.runs.size() * std::size_t(enc.field_width_b);
    if (packed_len >= lin.size()) return {PlaneMode::Raw, {}, lin.size()};
    return {PlaneMode::Rle, std::move(enc), packed_len};
}

void put_u16be(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(std::uint8_t(v >> 8));
    out.push_back(std::uint8_t(v));
}

void put_u32be(std::vector<std::uint8_t>& out, std::uint32_t v) {
    put_u16be(out, std::uint16_t(v >> 16));
    put_u16be(out, std::uint16_t(v));
}

void put_u64be(std::vector<std::uint8_t>& out, std::uint64_t v) {
    put_u32be(out, std::uint32_t(v >> 32));
    put_u32be(out, std::uint32_t(v));
}

struct KeyReader {
    const std::vector<std::uint8_t>& data;
    std::size_t pos = 0;

    std::uint8_t u8() {
        if (pos >= data.size()) throw FormatError("truncated key file");
        return data[pos++];
    }
    std::uint16_t u16be() { return std::uint16_t((std::uint16_t(u8()) << 8) | u8()); }
    std::uint32_t u32be() { return (std::uint32_t(u16be()) << 16) | u16be(); }
    std::uint64_t u64be() { return (std::uint64_t(u32be()) << 32) | u32be(); }
};

} // namespace

void validate_key(const ImageKey& key) {
    std::array<bool, 8> seen{};
    for (int level : key.plane_order) {
        if (level < 0 || level > 7 || seen[std::size_t(level)])
            throw FormatError("plane_order is not a permutation of 0..7");
        seen[std::size_t(level)] = true;
    }
    for (int l = 0; l < 8; ++l) {
        const PlaneKey& pk = key.plane_keys[std::size_t(l)];
        if (pk.level != l) throw FormatError("plane key level out of order");
        if (pk.scan_pattern_id < 0 || pk.scan_pattern_id >= kScanPatternCount)
            throw FormatError("scan pattern id out of range");
        if (pk.mode != PlaneMode::Rle && pk.mode != PlaneMode::Raw)
            throw FormatError("unknown plane mode");
        if (pk.block_size_x < 3 || pk.block_size_x > 8)
            throw FormatError("block size out of range");
        if (pk.pad_bits < 0 || pk.pad_bits > 2) throw FormatError("pad bits out of range");
        if (pk.first_bit > 1) throw FormatError("first bit out of range");
        if (pk.control_bits.empty()) throw FormatError("empty control bit vector");
        if (pk.mode == PlaneMode::Raw &&
            (pk.first_bit != 0 || pk.run_count != 0 || pk.field_width_b != 0))
            throw FormatError("raw plane key carries run parameters");
        if (pk.mode == PlaneMode::Rle && (pk.run_count == 0 || pk.field_width_b < 1))
            throw FormatError("rle plane key missing run parameters");
    }
}

ImageKey keygen(const GrayImage& img, std::uint64_t master_seed) {
    validate_image(img);
    ImageKey key;
    key.master_seed = master_seed;

    SplitMix64 master(master_seed);
    std::array<std::uint64_t, 8> plane_seeds{};
    for (auto& s : plane_seeds) s = master.next();

    std::iota(key.plane_order.begin(), key.plane_order.end(), 0);
    for (std::size_t i = 7; i > 0; --i) {
        std::size_t j = std::size_t(master.next() % (i + 1));
        std::swap(key.plane_order[i], key.plane_order[j]);
    }

    auto planes = decompose(img);
    for (int l = 0; l < 8; ++l) {
        PlaneKey& pk = key.plane_keys[std::size_t(l)];
        pk.level = l;

        auto [path, cost] = select_optimal_path(planes[std::size_t(l)]);
        pk.scan_pattern_id = path.pattern_id;

        PlaneLayout layout = plane_layout(planes[std::size_t(l)], path);
        pk.mode = layout.mode;
        if (layout.mode == PlaneMode::Rle) {
            pk.first_bit = layout.enc.first_bit;
            pk.run_count = std::uint32_t(layout.enc.runs.size());
            pk.field_width_b = layout.enc.field_width_b;
        }

        auto [x, pad] = choose_block_size(layout.payload_len);
        pk.block_size_x = x;
        pk.pad_bits = pad;

        SplitMix64 prng(plane_seeds[std::size_t(l)]);
        pk.scramble_seed = prng.next();
        pk.control_bits = draw_control_bits(prng, layout.payload_len + std::size_t(pad));
    }
    return key;
}

PlaneStages encrypt_plane(const BitPlane& plane, const PlaneKey& pk) {
    ScanPath path = generate_path(pk.scan_pattern_id, plane.width, plane.height);
    PlaneStages st;
    st.linearized = linearize(plane, path);
    if (pk.mode == PlaneMode::Rle) {
        RunsEncoding enc = encode_runs(st.linearized);
        if (enc.first_bit != pk.first_bit || enc.runs.size() != pk.run_count ||
            enc.field_width_b != pk.field_width_b)
            throw Error("key run parameters do not match this image");
        st.packed = pack_runs(enc);
    } else {
        st.packed = st.linearized;
    }
    st.scrambled = scramble(st.packed, {pk.block_size_x, pk.scramble_seed, pk.pad_bits});
    st.omflipped = omflip_apply(st.scrambled, pk.control_bits);
    return st;
}

CipherContainer encrypt(const GrayImage& img, const ImageKey& key) {
    validate_image(img);
    validate_key(key);
    auto planes = decompose(img);
    std::array<BitString, 8> streams;
    for (int l = 0; l < 8; ++l)
        streams[std::size_t(l)] =
            encrypt_plane(planes[std::size_t(l)], key.plane_keys[std::size_t(l)]).omflipped;
    CipherContainer c;
    c.width = img.width;
    c.height = img.height;
    for (std::size_t slot = 0; slot < 8; ++slot)
        c.planes[slot] = std::move(streams[std::size_t(key.plane_order[slot])]);
    return c;
}

GrayImage decrypt(const CipherContainer& container, const ImageKey& key) {
    validate_key(key);
    const std::size_t area = std::size_t(container.width) * container.height;
    std::array<BitPlane, 8> planes;
    for (std::size_t slot = 0; slot < 8; ++slot) {
        int level = key.plane_order[slot];
        const PlaneKey& pk = key.plane_keys[std::size_t(level)];
        ScanPath path = generate_path(pk.scan_pattern_id, container.width, container.height);

        BitString scrambled = omflip_invert(container.planes[slot], pk.control_bits);
        BitString payload =
            unscramble(scrambled, {pk.block_size_x, pk.scramble_seed, pk.pad_bits});

        BitString lin;
        if (pk.mode == PlaneMode::Rle) {
            if (payload.size() != std::size_t(pk.run_count) * std::size_t(pk.field_width_b))
                throw DecryptError("payload length does not match run parameters");
            RunsEncoding enc;
            enc.first_bit = pk.first_bit;
            enc.runs = unpack_runs(payload, pk.field_width_b, pk.run_count);
            lin = decode_runs(enc);
            if (lin.size() != area)
                throw DecryptError("run sum does not match plane area; wrong key?");
        } else {
            if (payload.size() != area)
                throw DecryptError("raw payload does not match plane area");
            lin = std::move(payload);
        }
        planes[std::size_t(level)] = delinearize(lin, path, level);
    }
    return compose(planes);
}

static constexpr char kKeyMagic[5] = {'O', 'M', 'F', 'K', '1'};
static constexpr std::uint8_t kKeyVersion = 0x01;

std::vector<std::uint8_t> serialize_key(const ImageKey& key) {
    validate_key(key);
    std::vector<std::uint8_t> out(kKeyMagic, kKeyMagic + 5);
    out.push_back(kKeyVersion);
    put_u64be(out, key.master_seed);
    for (int level : key.plane_order) out.push_back(std::uint8_t(level));
    for (const PlaneKey& pk : key.plane_keys) {
        out.push_back(std::uint8_t(pk.level));
        out.push_back(std::uint8_t(pk.scan_pattern_id));
        out.push_back(std::uint8_t(pk.mode));
        out.push_back(pk.first_bit);
        put_u32be(out, pk.run_count);
        out.push_back(std::uint8_t(pk.field_width_b));
        out.push_back(std::uint8_t(pk.block_size_x));
        out.push_back(std::uint8_t(pk.pad_bits));
        put_u64be(out, pk.scramble_seed);
        put_u16be(out, std::uint16_t(pk.control_bits.size()));
        auto packed = pack_bits(pk.control_bits);
        out.insert(out.end(), packed.begin(), packed.end());
    }
    return out;
}

ImageKey parse_key(const std::vector<std::uint8_t>& bytes) {
    KeyReader r{bytes};
    char magic[5];
    for (char& c : magic) c = char(r.u8());
    if (std::memcmp(magic, kKeyMagic, 5) != 0) throw FormatError("bad key magic");
    if (r.u8() != kKeyVersion) throw FormatError("unsupported key version");
    ImageKey key;
    key.master_seed = r.u64be();
    for (int& level : key.plane_order) level = r.u8();
    for (PlaneKey& pk : key.plane_keys) {
        pk.level = r.u8();
        pk.scan_pattern_id = r.u8();
        pk.mode = PlaneMode(r.u8());
        pk.first_bit = r.u8();
        pk.run_count = r.u32be();
        pk.field_width_b = r.u8();
        pk.block_size_x = r.u8();
        pk.pad_bits = r.u8();
        pk.scramble_seed = r.u64be();
        std::uint16_t ctrl_len = r.u16be();
        std::vector<std::uint8_t> packed;
        packed.reserve((ctrl_len + 7u) / 8u);
        for (std::size_t i = 0; i < (ctrl_len + 7u) / 8u; ++i) packed.push_back(r.u8());
        pk.control_bits = unpack_bits(packed, ctrl_len);
    }
    if (r.pos != bytes.size()) throw FormatError("trailing bytes after key");
    validate_key(key);
    return key;
}

} // namespace omfc
