#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "omfc/analysis.hpp"
#include "omfc/image_io.hpp"
#include "omfc/keyschedule.hpp"

namespace py = pybind11;

namespace {

std::vector<std::uint8_t> to_vec(const py::bytes& b) {
    std::string s = b;
    return {s.begin(), s.end()};
}

py::bytes to_bytes(const std::vector<std::uint8_t>& v) {
    return py::bytes(reinterpret_cast<const char*>(v.data()), v.size());
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "bit-plane image cipher core";

    m.def("read_pgm_size", [](const py::bytes& pgm) {
        omfc::GrayImage img = omfc::read_pgm(to_vec(pgm));
        return std::make_pair(img.width, img.height);
    }, py::arg("pgm"));

    m.def("keygen_bytes", [](const py::bytes& pgm, std::uint64_t seed) {
        return to_bytes(omfc::serialize_key(omfc::keygen(omfc::read_pgm(to_vec(pgm)), seed)));
    }, py::arg("pgm"), py::arg("seed"));

    m.def("encrypt_bytes", [](const py::bytes& pgm, const py::bytes& key) {
        return to_bytes(omfc::write_container(
            omfc::encrypt(omfc::read_pgm(to_vec(pgm)), omfc::parse_key(to_vec(key)))));
    }, py::arg("pgm"), py::arg("key"));

    m.def("decrypt_bytes", [](const py::bytes& container, const py::bytes& key) {
        return to_bytes(omfc::write_pgm(
            omfc::decrypt(omfc::parse_container(to_vec(container)), omfc::parse_key(to_vec(key)))));
    }, py::arg("container"), py::arg("key"));

    m.def("analyze_report", [](const py::bytes& pgm, const py::bytes& key, int trials) {
        return omfc::report_machine(omfc::analyze(
            omfc::read_pgm(to_vec(pgm)), omfc::parse_key(to_vec(key)), trials));
    }, py::arg("pgm"), py::arg("key"), py::arg("trials") = 5);

    m.def("key_sensitivity", [](const py::bytes& pgm, const py::bytes& key, int flips,
                                std::uint64_t probe_seed) {
        return omfc::key_sensitivity_probe(omfc::read_pgm(to_vec(pgm)),
                                           omfc::parse_key(to_vec(key)), flips, probe_seed);
    }, py::arg("pgm"), py::arg("key"), py::arg("flips"), py::arg("probe_seed") = 1);

    m.def("omega_stage", &omfc::omega_stage, py::arg("bits"));
    m.def("flip_stage", &omfc::flip_stage, py::arg("bits"));
    m.def("omflip_apply", &omfc::omflip_apply, py::arg("bits"), py::arg("ctrl"));
    m.def("omflip_invert", &omfc::omflip_invert, py::arg("bits"), py::arg("ctrl"));
    m.def("grp_permute", &omfc::grp_permute, py::arg("bits"), py::arg("mask"));

    m.def("choose_block_size", [](std::size_t n) { return omfc::choose_block_size(n); },
          py::arg("bit_length"));
    m.def("nth_permutation", &omfc::nth_permutation, py::arg("x"), py::arg("index"));
    m.def("scramble_bits", [](const omfc::BitString& bits, int x, std::uint64_t seed, int pad) {
        return omfc::scramble(bits, {x, seed, pad});
    }, py::arg("bits"), py::arg("block_size_x"), py::arg("seed"), py::arg("pad_bits"));
    m.def("unscramble_bits", [](const omfc::BitString& bits, int x, std::uint64_t seed, int pad) {
        return omfc::unscramble(bits, {x, seed, pad});
    }, py::arg("bits"), py::arg("block_size_x"), py::arg("seed"), py::arg("pad_bits"));

    m.def("splitmix64_stream", [](std::uint64_t seed, int count) {
        omfc::SplitMix64 prng(seed);
        std::vector<std::uint64_t> out;
        out.reserve(std::size_t(count));
        for (int i = 0; i < count; ++i) out.push_back(prng.next());
        return out;
    }, py::arg("seed"), py::arg("count"));

    m.def("binary_entropy", &omfc::binary_entropy, py::arg("bits"));
    m.def("correlation", [](const omfc::BitString& a, const omfc::BitString& b) {
        return omfc::correlation(a, b);
    }, py::arg("a"), py::arg("b"));
}
