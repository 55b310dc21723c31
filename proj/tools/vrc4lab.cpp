// vrc4lab: encrypt/decrypt files, run known-answer vectors, analysis and benchmarks.
//
// Exit codes:
//   0  success
//   1  known-answer vector mismatch
//   2  I/O failure (missing input, unwritable output)
//   3  invalid key or parameter (including command-line usage errors)
//   4  alphabetic Vigenere input contains something other than A-Z
//   5  malformed frame, or frame algorithm differs from --algo

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "vrc4lab/analysis.hpp"
#include "vrc4lab/container.hpp"
#include "vrc4lab/kernels.hpp"
#include "vrc4lab/suite.hpp"
#include "vrc4lab/vectors.hpp"
#include "vrc4lab/vrc4.hpp"

namespace fs = std::filesystem;
using namespace vrc4lab;

namespace {

enum Exit : int {
    kOk = 0,
    kVectorMismatch = 1,
    kIoError = 2,
    kBadParameter = 3,
    kBadAlphaText = 4,
    kBadFrame = 5,
};

// Carries an exit code up to main.
struct Failure {
    int code;
    std::string message;
};

struct KeyOptions {
    std::string text;
    std::string hex;
    std::string file;
};

struct Options {
    KeyOptions key;
    std::string algo;
    std::string in;
    std::string out;
    std::optional<int> split;
    std::uint64_t seed = 1;
    std::uint64_t trials = 1u << 21;
    std::size_t position = 200;
    unsigned threads = 0;
    std::size_t size = 1u << 20;
    unsigned reps = 9;
    unsigned bits = 16;
    std::string test = "second-byte";
};

Bytes read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Failure{kIoError, "cannot open input file: " + path};
    return Bytes(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

// Writes to a sibling temp file and renames, so a failed run leaves nothing behind.
void write_file_atomic(const std::string& path, ByteView data) {
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw Failure{kIoError, "cannot write output file: " + path};
        f.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
        if (!f) {
            f.close();
            std::error_code ec;
            fs::remove(tmp, ec);
            throw Failure{kIoError, "write failed: " + path};
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw Failure{kIoError, "cannot rename output into place: " + path};
    }
}

void write_text_atomic(const std::string& path, const std::string& text) { write_file_atomic(path, as_bytes(text)); }

KeyMaterial load_key(const KeyOptions& k) {
    const int sources = !k.text.empty() + !k.hex.empty() + !k.file.empty();
    if (sources != 1) throw Failure{kBadParameter, "exactly one of --key, --key-hex, --key-file is required"};
    try {
        if (!k.text.empty()) return KeyMaterial::from_text(k.text);
        if (!k.hex.empty()) return KeyMaterial::from_hex(k.hex);
        return KeyMaterial::from_bytes(read_file(k.file));
    } catch (const InvalidKey& e) {
        throw Failure{kBadParameter, std::string("invalid key: ") + e.what()};
    }
}

Algorithm parse_algo(const std::string& name) {
    const auto algo = algorithm_from_name(name);
    if (!algo) throw Failure{kBadParameter, "unknown algorithm: " + name};
    return *algo;
}

void require_io_paths(const Options& o) {
    if (o.in.empty() || o.out.empty()) throw Failure{kBadParameter, "--in and --out are required"};
}

// Library errors raised while running a cipher, mapped to exit codes.
template <class Fn>
auto guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const InvalidAlphaText& e) {
        throw Failure{kBadAlphaText, e.what()};
    } catch (const FrameError& e) {
        throw Failure{kBadFrame, e.what()};
    } catch (const MalformedCiphertext& e) {
        throw Failure{kBadFrame, e.what()};
    } catch (const InvalidKey& e) {
        throw Failure{kBadParameter, std::string("invalid key: ") + e.what()};
    } catch (const InvalidArgument& e) {
        throw Failure{kBadParameter, e.what()};
    }
}

std::vector<KnownAnswer> vectors_for_build() {
    auto vectors = builtin_vectors();
#ifdef VRC4LAB_CORRUPT_VECTORS
    for (auto& v : vectors)
        if (v.name == "rc4 Key/Plaintext") v.expected[0] ^= 0x01;
#endif
    return vectors;
}

int cmd_encrypt(const Options& o) {
    require_io_paths(o);
    const Algorithm algo = parse_algo(o.algo.empty() ? "vrc4" : o.algo);
    if (o.split && algo != Algorithm::Vrc4) throw Failure{kBadParameter, "--j is only valid with --algo vrc4"};
    const KeyMaterial key = load_key(o.key);
    const Bytes plain = read_file(o.in);

    SplitIndex split(0);
    if (o.split) {
        split = guarded([&] { return SplitIndex::from_int(*o.split); });
    } else if (algo == Algorithm::Vrc4) {
        std::random_device rd;
        split = SplitIndex(static_cast<std::uint8_t>(rd() & 0xff));
    }
    const Bytes payload = guarded([&] { return encrypt_payload(algo, key, plain, split); });
    write_file_atomic(o.out, write_frame(algo, payload));
    return kOk;
}

int cmd_decrypt(const Options& o) {
    require_io_paths(o);
    const KeyMaterial key = load_key(o.key);
    const Bytes data = read_file(o.in);
    const Frame frame = guarded([&] { return read_frame(data); });
    if (!o.algo.empty() && parse_algo(o.algo) != frame.algo)
        throw Failure{kBadFrame, "algorithm mismatch: frame holds " + std::string(algorithm_name(frame.algo)) +
                                     ", --algo says " + o.algo};
    const Bytes plain = guarded([&] { return decrypt_payload(frame.algo, key, frame.payload); });
    write_file_atomic(o.out, plain);
    return kOk;
}

bool print_vectors(std::ostream& os) {
    bool all_ok = true;
    const auto vectors = vectors_for_build();
    const auto results = run_vectors(vectors);
    for (std::size_t n = 0; n < results.size(); ++n) {
        const auto& r = results[n];
        all_ok = all_ok && r.ok;
        os << (r.ok ? "OK    " : "FAIL  ") << r.name << "  expected=" << display(vectors[n], r.expected);
        if (!r.error.empty())
            os << "  error=" << r.error;
        else
            os << "  got=" << display(vectors[n], r.actual);
        os << '\n';
    }
    return all_ok;
}

int cmd_vectors(const Options&) {
    const bool ok = print_vectors(std::cout);
    if (!ok) {
        std::cerr << "known-answer vectors FAILED\n";
        return kVectorMismatch;
    }
    std::cout << "all vectors OK\n";
    return kOk;
}

analysis::HistogramParams histogram_params(const Options& o, std::size_t position) {
    if (o.trials < 1) throw Failure{kBadParameter, "--trials must be >= 1"};
    analysis::HistogramParams p;
    p.position = position;
    p.trials = o.trials;
    p.seed = o.seed;
    p.threads = o.threads;
    return p;
}

int analyze_histograms(const Options& o, std::size_t position) {
    const auto p = histogram_params(o, position);
    const auto rc4 = analysis::keystream_histogram(p);
    const auto vrc4 = analysis::vrc4_body_histogram(p);
    std::cout << analysis::to_table(rc4) << analysis::to_table(vrc4);
    if (o.test == "uniformity") {
        const double critical = analysis::chi_square_quantile(0.99, analysis::kUniformDof);
        std::cout << "uniformity at 1%: critical chi_square = " << critical << "  rc4 "
                  << (rc4.chi_square < critical ? "passes" : "fails") << ", vrc4 body "
                  << (vrc4.chi_square < critical ? "passes" : "fails") << '\n';
    } else {
        std::cout << "second-byte zero frequency x256: rc4 = " << rc4.frequency(0) * 256.0
                  << ", vrc4 body = " << vrc4.frequency(0) * 256.0 << " (uniform = 1)\n";
    }
    if (!o.out.empty()) write_text_atomic(o.out, analysis::to_record(rc4) + analysis::to_record(vrc4));
    return kOk;
}

constexpr std::string_view kBruteFixturePlain = "known plaintext fixture for key search";

int analyze_brute(const Options& o) {
    if (o.bits == 0 || o.bits > analysis::kMaxBruteForceBits || o.bits % 8 != 0)
        throw Failure{kBadParameter, "--bits must be 8, 16 or 24"};
    const std::size_t key_bytes = o.bits / 8;

    analysis::TrialStream rng(o.seed, 0);
    Bytes planted(key_bytes);
    if (!o.key.hex.empty()) {
        const KeyMaterial k = load_key(o.key);
        if (k.size() != key_bytes)
            throw Failure{kBadParameter, "--key-hex must be " + std::to_string(key_bytes) + " bytes for --bits " +
                                             std::to_string(o.bits)};
        planted.assign(k.bytes().begin(), k.bytes().end());
    } else {
        rng.fill(planted);
    }
    const KeyMaterial key = KeyMaterial::from_bytes(planted);
    const SplitIndex split(rng.next_byte());
    const ByteView plain = as_bytes(kBruteFixturePlain);

    std::cout << "planted key = " << to_hex(planted) << "  J = " << int(split.value()) << '\n';
    std::string records;
    double elapsed[2] = {0.0, 0.0};
    int slot = 0;
    for (Algorithm algo : {Algorithm::Rc4, Algorithm::Vrc4}) {
        const Bytes cipher = encrypt_payload(algo, key, plain, split);
        const auto report = analysis::brute_force_known_plaintext(algo, cipher, plain, o.bits);
        std::cout << analysis::to_table(report);
        records += analysis::to_record(report);
        elapsed[slot++] = report.elapsed_seconds;
    }
    if (elapsed[0] > 0.0) std::cout << "elapsed ratio vrc4/rc4 = " << elapsed[1] / elapsed[0] << '\n';
    if (!o.out.empty()) write_text_atomic(o.out, records);
    return kOk;
}

int cmd_analyze(const Options& o) {
    if (o.test == "second-byte") return analyze_histograms(o, 1);
    if (o.test == "uniformity") return analyze_histograms(o, o.position);
    if (o.test == "brute") return analyze_brute(o);
    throw Failure{kBadParameter, "unknown --test: " + o.test};
}

int cmd_bench(const Options& o) {
    if (o.reps < analysis::kMinBenchReps) throw Failure{kBadParameter, "--reps must be >= 5"};
    std::ostringstream vector_log;
    if (!print_vectors(vector_log)) {
        std::cerr << vector_log.str() << "known-answer vectors FAILED; refusing to benchmark\n";
        return kVectorMismatch;
    }
    std::cout << "kernels: " << kernels::isa_name(kernels::active().isa) << '\n';
    const auto rc4 = analysis::measure_throughput(Algorithm::Rc4, o.size, o.reps, o.seed);
    const auto vrc4 = analysis::measure_throughput(Algorithm::Vrc4, o.size, o.reps, o.seed);
    std::cout << analysis::to_table(rc4) << analysis::to_table(vrc4);
    const double ratio = rc4.median_seconds > 0.0 ? vrc4.median_seconds / rc4.median_seconds : 0.0;
    std::cout << "median ratio vrc4/rc4 = " << ratio << '\n';
    if (!o.out.empty())
        write_text_atomic(o.out, analysis::to_record(rc4) + analysis::to_record(vrc4) +
                                     "record=bench_ratio vrc4_over_rc4=" + std::to_string(ratio) + '\n');
    return kOk;
}

void add_key_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--key", o.key.text, "Passphrase; its bytes are the key");
    cmd->add_option("--key-hex", o.key.hex, "Key as hex");
    cmd->add_option("--key-file", o.key.file, "File whose raw bytes are the key");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"vrc4lab: RC4, Vigenere and VRC4 cipher laboratory"};
    app.require_subcommand(1);
    Options o;

    auto* enc = app.add_subcommand("encrypt", "Encrypt a file into a frame");
    add_key_flags(enc, o);
    enc->add_option("--algo", o.algo, "rc4 | vrc4 | vigenere (default vrc4)");
    enc->add_option("--in", o.in, "Input file");
    enc->add_option("--out", o.out, "Output frame file");
    enc->add_option("--j", o.split, "Fixed split index J (vrc4 only)")->check(CLI::Range(0, 255));

    auto* dec = app.add_subcommand("decrypt", "Decrypt a frame");
    add_key_flags(dec, o);
    dec->add_option("--algo", o.algo, "Expected algorithm (optional; read from frame)");
    dec->add_option("--in", o.in, "Input frame file");
    dec->add_option("--out", o.out, "Output file");

    auto* vec = app.add_subcommand("vectors", "Recompute the built-in known-answer vectors");

    auto* ana = app.add_subcommand("analyze", "Keystream statistics and toy key search");
    ana->add_option("--test", o.test, "second-byte | uniformity | brute")
        ->check(CLI::IsMember({"second-byte", "uniformity", "brute"}));
    ana->add_option("--trials", o.trials, "Random keys per histogram");
    ana->add_option("--seed", o.seed, "Experiment seed");
    ana->add_option("--position", o.position, "Byte position for --test uniformity (default 200)");
    ana->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
    ana->add_option("--bits", o.bits, "Key search space for --test brute: 8, 16 or 24");
    ana->add_option("--key-hex", o.key.hex, "Planted key for --test brute");
    ana->add_option("--out", o.out, "Write key=value records here");

    auto* bench = app.add_subcommand("bench", "RC4 vs VRC4 encrypt+decrypt throughput");
    bench->add_option("--size", o.size, "Payload bytes (default 1 MiB)");
    bench->add_option("--reps", o.reps, "Repetitions (>= 5)");
    bench->add_option("--seed", o.seed, "Payload seed");
    bench->add_option("--out", o.out, "Write key=value records here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kBadParameter;
    }

    try {
        if (*enc) return cmd_encrypt(o);
        if (*dec) return cmd_decrypt(o);
        if (*vec) return cmd_vectors(o);
        if (*ana) return cmd_analyze(o);
        if (*bench) return cmd_bench(o);
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << '\n';
        return f.code;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadParameter;
    }
    return kBadParameter;
}
