#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "vrc4lab/common.hpp"
#include "vrc4lab/container.hpp"
#include "vrc4lab/keying.hpp"

namespace vrc4lab::analysis {

/// Counter-based byte source (SplitMix64). Trial n of an experiment with seed s
/// always sees the same bytes, whatever thread runs it.
class TrialStream {
public:
    TrialStream(std::uint64_t seed, std::uint64_t trial) noexcept;

    std::uint64_t next_u64() noexcept;
    std::uint8_t next_byte() noexcept;
    void fill(MutableByteView out) noexcept;

private:
    std::uint64_t state_;
    std::uint64_t buffer_ = 0;
    int buffered_ = 0;
};

// ---------------------------------------------------------------- statistics

inline constexpr double kUniformDof = 255.0;

/// Pearson statistic of `counts` against the uniform distribution over its bins.
double chi_square_uniform(std::span<const std::uint64_t> counts);
/// P(X >= stat) for X ~ chi-square(dof).
double chi_square_upper_tail(double stat, double dof);
double chi_square_quantile(double p, double dof);

// ---------------------------------------------------------------- histograms

struct HistogramParams {
    std::size_t position = 1;    // 0-based keystream / body index
    std::uint64_t trials = 1;
    std::size_t key_len = 16;    // bytes per random trial key
    std::uint64_t seed = 0;
    unsigned threads = 1;        // 0 = hardware concurrency
    std::optional<KeyMaterial> fixed_key;  // same key for every trial when set
};

struct HistogramReport {
    Algorithm source;
    std::size_t position;
    std::uint64_t trials;
    std::size_t key_len;
    std::uint64_t seed;
    std::array<std::uint64_t, 256> counts;
    double chi_square;
    double p_value;

    double frequency(std::uint8_t value) const noexcept {
        return trials == 0 ? 0.0 : static_cast<double>(counts[value]) / static_cast<double>(trials);
    }
};

/// RC4 keystream byte at `position`, one fresh random key per trial.
HistogramReport keystream_histogram(const HistogramParams& params);
/// VRC4 body byte at `position` for an all-zero plaintext, fresh key and J per trial.
HistogramReport vrc4_body_histogram(const HistogramParams& params);

// ---------------------------------------------------------------- brute force

inline constexpr unsigned kMaxBruteForceBits = 24;

struct BruteForceReport {
    Algorithm cipher;
    unsigned keyspace_bits;
    std::optional<Bytes> recovered;
    std::uint64_t trials_tested;
    double elapsed_seconds;

    std::string keyspace_note() const;
};

/// Tries every keyspace_bits/8-byte key in lexicographic order and returns
/// the first whose decryption of `ciphertext` equals `known_plain`.
/// keyspace_bits must be 8, 16 or 24. For VRC4 the ciphertext is the
/// serialized form (one byte longer than the plaintext).
BruteForceReport brute_force_known_plaintext(Algorithm cipher, ByteView ciphertext, ByteView known_plain,
                                             unsigned keyspace_bits);

// ---------------------------------------------------------------- throughput

inline constexpr unsigned kMinBenchReps = 5;

struct BenchReport {
    Algorithm cipher;
    std::size_t payload_bytes;
    unsigned reps;
    double median_seconds;
    double throughput_mib_s;
};

/// Encrypt-then-decrypt a seeded random payload `reps` times through
/// encrypt_payload/decrypt_payload and reports the median cycle time.
BenchReport measure_throughput(Algorithm cipher, std::size_t payload_bytes, unsigned reps, std::uint64_t seed);

double median(std::vector<double> samples);

// ---------------------------------------------------------------- reports

std::string to_table(const HistogramReport& r);
std::string to_table(const BruteForceReport& r);
std::string to_table(const BenchReport& r);

// One `key=value ...` record per line.
std::string to_record(const HistogramReport& r);
std::string to_record(const BruteForceReport& r);
std::string to_record(const BenchReport& r);

}  // namespace vrc4lab::analysis
