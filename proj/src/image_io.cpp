#include "omfc/image_io.hpp"

#include <cctype>
#include <cstring>

namespace omfc {

namespace {

bool power_of_two(std::uint32_t v) { return v != 0 && (v & (v - 1)) == 0; }

struct ByteReader {
    const std::vector<std::uint8_t>& data;
    std::size_t pos = 0;

    std::uint8_t u8() {
        if (pos >= data.size()) throw FormatError("truncated file");
        return data[pos++];
    }
    std::uint32_t u32be() {
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v = (v << 8) | u8();
        return v;
    }
    std::vector<std::uint8_t> take(std::size_t n) {
        if (data.size() - pos < n) throw FormatError("truncated file");
        std::vector<std::uint8_t> out(data.begin() + long(pos), data.begin() + long(pos + n));
        pos += n;
        return out;
    }
};

void put_u32be(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(std::uint8_t(v >> 24));
    out.push_back(std::uint8_t(v >> 16));
    out.push_back(std::uint8_t(v >> 8));
    out.push_back(std::uint8_t(v));
}

// PGM header token: skips whitespace and '#' comment lines.
std::string pgm_token(ByteReader& r) {
    for (;;) {
        while (r.pos < r.data.size() && std::isspace(r.data[r.pos])) ++r.pos;
        if (r.pos < r.data.size() && r.data[r.pos] == '#') {
            while (r.pos < r.data.size() && r.data[r.pos] != '\n') ++r.pos;
            continue;
        }
        break;
    }
    std::string tok;
    while (r.pos < r.data.size() && !std::isspace(r.data[r.pos]))
        tok.push_back(char(r.data[r.pos++]));
    if (tok.empty()) throw FormatError("truncated PGM header");
    return tok;
}

std::uint32_t pgm_number(ByteReader& r) {
    std::string tok = pgm_token(r);
    std::uint64_t v = 0;
    for (char c : tok) {
        if (!std::isdigit(static_cast<unsigned char>(c))) throw FormatError("bad PGM header number");
        v = v * 10 + std::uint64_t(c - '0');
        if (v > 0xFFFFFFFFull) throw FormatError("PGM header number out of range");
    }
    return std::uint32_t(v);
}

} // namespace

void validate_image(const GrayImage& img) {
    if (img.width != img.height)
        throw FormatError("image must be square");
    if (!power_of_two(img.width) || img.width < 2 || img.width > 512)
        throw FormatError("image side must be a power of two in [2, 512]");
    if (img.pixels.size() != std::size_t(img.width) * img.height)
        throw FormatError("pixel count does not match dimensions");
}

GrayImage read_pgm(const std::vector<std::uint8_t>& bytes) {
    ByteReader r{bytes};
    if (pgm_token(r) != "P5") throw FormatError("not a binary PGM (P5) file");
    GrayImage img;
    img.width = pgm_number(r);
    img.height = pgm_number(r);
    std::uint32_t maxval = pgm_number(r);
    if (maxval != 255) throw FormatError("unsupported PGM depth, maxval must be 255");
    r.u8(); // single whitespace byte after maxval
    img.pixels = r.take(std::size_t(img.width) * img.height);
    validate_image(img);
    return img;
}

std::vector<std::uint8_t> write_pgm(const GrayImage& img) {
    validate_image(img);
    std::string header = "P5\n" + std::to_string(img.width) + " " +
                         std::to_string(img.height) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.insert(out.end(), img.pixels.begin(), img.pixels.end());
    return out;
}

static constexpr char kContainerMagic[5] = {'O', 'M', 'F', 'C', '1'};

std::vector<std::uint8_t> write_container(const CipherContainer& c) {
    std::vector<std::uint8_t> out(kContainerMagic, kContainerMagic + 5);
    put_u32be(out, c.width);
    put_u32be(out, c.height);
    for (const BitString& plane : c.planes) {
        put_u32be(out, std::uint32_t(plane.size()));
        auto packed = pack_bits(plane);
        out.insert(out.end(), packed.begin(), packed.end());
    }
    return out;
}

CipherContainer parse_container(const std::vector<std::uint8_t>& bytes) {
    ByteReader r{bytes};
    auto magic = r.take(5);
    if (std::memcmp(magic.data(), kContainerMagic, 5) != 0)
        throw FormatError("bad container magic");
    CipherContainer c;
    c.width = r.u32be();
    c.height = r.u32be();
    for (BitString& plane : c.planes) {
        std::uint32_t bit_length = r.u32be();
        plane = unpack_bits(r.take((bit_length + 7) / 8), bit_length);
    }
    if (r.pos != bytes.size()) throw FormatError("trailing bytes after container");
    return c;
}

} // namespace omfc
