#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>

#include "omfc/analysis.hpp"
#include "omfc/image_io.hpp"
#include "omfc/keyschedule.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitValidation = 4;

struct IoFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoFailure("cannot open " + path);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoFailure("cannot open " + path + " for writing");
    f.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
    if (!f) throw IoFailure("short write to " + path);
}

struct UsageFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t parse_seed(const std::string& text) {
    try {
        std::size_t consumed = 0;
        std::uint64_t seed = std::stoull(text, &consumed, 0); // decimal or 0x-hex
        if (consumed != text.size()) throw std::invalid_argument(text);
        return seed;
    } catch (const std::exception&) {
        throw UsageFailure("invalid --seed value: " + text);
    }
}

int run_selftest() {
    using namespace omfc;
    int failures = 0;
    auto check = [&](bool ok, const char* what) {
        std::cout << (ok ? "ok   " : "FAIL ") << what << "\n";
        if (!ok) ++failures;
    };

    BitString abcd = {0, 1, 2, 3}; // symbols, not bits; stage maps indices
    check(omega_stage(abcd) == BitString({3, 0, 2, 1}), "omega stage table w=4");
    check(flip_stage(abcd) == BitString({1, 3, 2, 0}), "flip stage table w=4");
    BitString abcde = {0, 1, 2, 3, 4};
    check(omega_stage(abcde) == BitString({2, 0, 3, 1, 4}), "omega stage table w=5");
    check(flip_stage(abcde) == BitString({1, 3, 0, 2, 4}), "flip stage table w=5");

    std::mt19937_64 rng(7);
    bool inverse_ok = true;
    for (std::size_t w = 2; w <= 1024; ++w) {
        BitString s(w);
        for (auto& b : s) b = rng() & 1u;
        if (flip_stage(omega_stage(s)) != s) inverse_ok = false;
    }
    check(inverse_ok, "flip undoes omega for w in 2..1024");

    bool roundtrip_ok = true;
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 16 + rng() % 512;
        BitString s(n);
        for (auto& b : s) b = rng() & 1u;
        RunsEncoding enc = encode_runs(s);
        if (decode_runs(enc) != s) roundtrip_ok = false;
        if (unpack_runs(pack_runs(enc), enc.field_width_b, enc.runs.size()) != enc.runs)
            roundtrip_ok = false;
        auto [x, pad] = choose_block_size(n);
        ScrambleParams params{x, rng(), pad};
        if (unscramble(scramble(s, params), params) != s) roundtrip_ok = false;
        ControlBits ctrl(300);
        for (auto& b : ctrl) b = rng() & 1u;
        if (omflip_invert(omflip_apply(s, ctrl), ctrl) != s) roundtrip_ok = false;
    }
    check(roundtrip_ok, "stage roundtrips (2DRE, pack, scramble, OMFLIP)");

    std::cout << (failures == 0 ? "selftest passed\n" : "selftest FAILED\n");
    return failures == 0 ? 0 : kExitValidation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"OMFLIP bit-plane image cipher"};
    app.require_subcommand(1);

    std::string in_path, out_path, key_path, report_path, seed_text = "0";

    auto* keygen_cmd = app.add_subcommand("keygen", "derive a key file from an image and seed");
    keygen_cmd->add_option("--in", in_path, "input PGM image")->required();
    keygen_cmd->add_option("--key", key_path, "output key file")->required();
    keygen_cmd->add_option("--seed", seed_text, "master seed (decimal or 0x-hex)")->required();

    auto* encrypt_cmd = app.add_subcommand("encrypt", "encrypt an image with a key file");
    encrypt_cmd->add_option("--in", in_path, "input PGM image")->required();
    encrypt_cmd->add_option("--key", key_path, "key file")->required();
    encrypt_cmd->add_option("--out", out_path, "output cipher container")->required();

    auto* decrypt_cmd = app.add_subcommand("decrypt", "decrypt a cipher container");
    decrypt_cmd->add_option("--in", in_path, "input cipher container")->required();
    decrypt_cmd->add_option("--key", key_path, "key file")->required();
    decrypt_cmd->add_option("--out", out_path, "output PGM image")->required();

    auto* analyze_cmd = app.add_subcommand("analyze", "entropy/correlation/key-sensitivity report");
    analyze_cmd->add_option("--in", in_path, "input PGM image")->required();
    analyze_cmd->add_option("--key", key_path, "key file")->required();
    analyze_cmd->add_option("--report", report_path, "machine-readable report output (default stdout)");

    auto* selftest_cmd = app.add_subcommand("selftest", "run the built-in invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (*keygen_cmd) {
            auto img = omfc::read_pgm(read_file(in_path));
            auto key = omfc::keygen(img, parse_seed(seed_text));
            write_file(key_path, omfc::serialize_key(key));
        } else if (*encrypt_cmd) {
            auto img = omfc::read_pgm(read_file(in_path));
            auto key = omfc::parse_key(read_file(key_path));
            write_file(out_path, omfc::write_container(omfc::encrypt(img, key)));
        } else if (*decrypt_cmd) {
            auto container = omfc::parse_container(read_file(in_path));
            auto key = omfc::parse_key(read_file(key_path));
            write_file(out_path, omfc::write_pgm(omfc::decrypt(container, key)));
        } else if (*analyze_cmd) {
            auto img = omfc::read_pgm(read_file(in_path));
            auto key = omfc::parse_key(read_file(key_path));
            auto rep = omfc::analyze(img, key);
            std::cout << omfc::report_text(rep);
            std::string machine = omfc::report_machine(rep);
            if (report_path.empty()) {
                std::cout << machine;
            } else {
                write_file(report_path, {machine.begin(), machine.end()});
            }
        } else if (*selftest_cmd) {
            return run_selftest();
        }
    } catch (const UsageFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IoFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return 0;
}
