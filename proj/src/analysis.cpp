#include "vrc4lab/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <thread>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "vrc4lab/rc4.hpp"
#include "vrc4lab/suite.hpp"
#include "vrc4lab/vrc4.hpp"

namespace vrc4lab::analysis {

namespace {

using Clock = std::chrono::steady_clock;
using Counts = std::array<std::uint64_t, 256>;

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

void validate(const HistogramParams& p) {
    if (p.trials < 1) throw InvalidArgument("trials must be >= 1");
    if (!p.fixed_key && (p.key_len < kMinKeyBytes || p.key_len > kMaxKeyBytes))
        throw InvalidArgument("key_len must be 1..256, got " + std::to_string(p.key_len));
}

KeyMaterial trial_key(const HistogramParams& p, TrialStream& rng) {
    if (p.fixed_key) return *p.fixed_key;
    std::array<std::uint8_t, kMaxKeyBytes> buf;
    rng.fill(MutableByteView(buf.data(), p.key_len));
    return KeyMaterial::from_bytes(ByteView(buf.data(), p.key_len));
}

// Runs `sample(trial, rng, scratch)` for every trial and tallies the returned
// byte. Trials are split into contiguous ranges, one per worker; counts are
// summed afterwards so the result does not depend on the worker count.
template <class Sample>
Counts tally(const HistogramParams& p, Sample sample) {
    unsigned workers = p.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : p.threads;
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, p.trials));

    std::vector<Counts> partial(workers, Counts{});
    auto run = [&](unsigned w) {
        const std::uint64_t begin = p.trials * w / workers;
        const std::uint64_t end = p.trials * (w + 1) / workers;
        Bytes scratch(p.position + 1);
        for (std::uint64_t t = begin; t < end; ++t) {
            TrialStream rng(p.seed, t);
            ++partial[w][sample(rng, scratch)];
        }
    };

    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    }

    Counts total{};
    for (const auto& c : partial)
        for (std::size_t v = 0; v < 256; ++v) total[v] += c[v];
    return total;
}

HistogramReport finish(Algorithm source, const HistogramParams& p, const Counts& counts) {
    HistogramReport r{source, p.position, p.trials, p.fixed_key ? p.fixed_key->size() : p.key_len, p.seed, counts,
                      0.0, 1.0};
    r.chi_square = chi_square_uniform(counts);
    r.p_value = chi_square_upper_tail(r.chi_square, kUniformDof);
    return r;
}

std::string fmt_double(double v, int precision = 6) {
    std::ostringstream os;
    os << std::setprecision(precision) << v;
    return os.str();
}

std::string key_display(const std::optional<Bytes>& key) { return key ? to_hex(*key) : std::string("none"); }

}  // namespace

TrialStream::TrialStream(std::uint64_t seed, std::uint64_t trial) noexcept
    : state_(mix64(seed ^ mix64(trial + kGolden))) {}

std::uint64_t TrialStream::next_u64() noexcept {
    state_ += kGolden;
    return mix64(state_);
}

std::uint8_t TrialStream::next_byte() noexcept {
    if (buffered_ == 0) {
        buffer_ = next_u64();
        buffered_ = 8;
    }
    const auto b = static_cast<std::uint8_t>(buffer_);
    buffer_ >>= 8;
    --buffered_;
    return b;
}

void TrialStream::fill(MutableByteView out) noexcept {
    for (auto& b : out) b = next_byte();
}

double chi_square_uniform(std::span<const std::uint64_t> counts) {
    if (counts.empty()) throw InvalidArgument("chi-square needs at least one bin");
    std::uint64_t total = 0;
    for (auto c : counts) total += c;
    if (total == 0) return 0.0;
    const double expected = static_cast<double>(total) / static_cast<double>(counts.size());
    double stat = 0.0;
    for (auto c : counts) {
        const double d = static_cast<double>(c) - expected;
        stat += d * d / expected;
    }
    return stat;
}

double chi_square_upper_tail(double stat, double dof) {
    const boost::math::chi_squared_distribution<double> dist(dof);
    return boost::math::cdf(boost::math::complement(dist, stat));
}

double chi_square_quantile(double p, double dof) {
    const boost::math::chi_squared_distribution<double> dist(dof);
    return boost::math::quantile(dist, p);
}

HistogramReport keystream_histogram(const HistogramParams& params) {
    validate(params);
    const std::size_t pos = params.position;
    const Counts counts = tally(params, [&](TrialStream& rng, Bytes& scratch) {
        Rc4State st = key_schedule(trial_key(params, rng));
        st.keystream(MutableByteView(scratch.data(), pos + 1));
        return scratch[pos];
    });
    return finish(Algorithm::Rc4, params, counts);
}

HistogramReport vrc4_body_histogram(const HistogramParams& params) {
    validate(params);
    const std::size_t pos = params.position;
    const Counts counts = tally(params, [&](TrialStream& rng, Bytes& scratch) {
        const KeyMaterial key = trial_key(params, rng);
        const SplitIndex split(rng.next_byte());
        std::fill(scratch.begin(), scratch.end(), std::uint8_t{0});
        vrc4_encrypt_body(scratch, key, split, scratch);
        return scratch[pos];
    });
    return finish(Algorithm::Vrc4, params, counts);
}

std::string BruteForceReport::keyspace_note() const {
    const std::string space = "2^" + std::to_string(keyspace_bits) + " keys";
    if (cipher == Algorithm::Vrc4)
        return "J travels in the clear as the final ciphertext byte, so it adds no unknowns: the VRC4 search space is " +
               space + ", identical to RC4 at the same key length";
    return "RC4 search space is " + space;
}

BruteForceReport brute_force_known_plaintext(Algorithm cipher, ByteView ciphertext, ByteView known_plain,
                                             unsigned keyspace_bits) {
    if (keyspace_bits == 0 || keyspace_bits > kMaxBruteForceBits || keyspace_bits % 8 != 0)
        throw InvalidArgument("keyspace_bits must be 8, 16 or 24, got " + std::to_string(keyspace_bits));

    std::size_t body_len = 0;
    switch (cipher) {
        case Algorithm::Rc4:
            if (ciphertext.size() != known_plain.size())
                throw InvalidArgument("rc4 ciphertext length must equal plaintext length");
            body_len = ciphertext.size();
            break;
        case Algorithm::Vrc4:
            if (ciphertext.size() != known_plain.size() + 1)
                throw InvalidArgument("vrc4 ciphertext length must be plaintext length + 1");
            body_len = known_plain.size();
            break;
        case Algorithm::VigenereAlpha:
            throw InvalidArgument("brute force supports rc4 and vrc4 only");
    }

    const std::size_t key_bytes = keyspace_bits / 8;
    const std::uint64_t space = std::uint64_t{1} << keyspace_bits;
    const ByteView body = ciphertext.first(body_len);
    const SplitIndex split(cipher == Algorithm::Vrc4 ? ciphertext.back() : 0);

    BruteForceReport report{cipher, keyspace_bits, std::nullopt, 0, 0.0};
    Bytes candidate(key_bytes);
    Bytes plain(body_len);
    const auto start = Clock::now();
    for (std::uint64_t k = 0; k < space; ++k) {
        for (std::size_t b = 0; b < key_bytes; ++b)
            candidate[b] = static_cast<std::uint8_t>(k >> (8 * (key_bytes - 1 - b)));
        const KeyMaterial key = KeyMaterial::from_bytes(candidate);
        if (cipher == Algorithm::Rc4)
            rc4_crypt(key, body, plain);
        else
            vrc4_decrypt_body(body, key, split, plain);
        ++report.trials_tested;
        if (std::equal(plain.begin(), plain.end(), known_plain.begin())) {
            report.recovered = candidate;
            break;
        }
    }
    report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return report;
}

double median(std::vector<double> samples) {
    if (samples.empty()) throw InvalidArgument("median of empty sample");
    const std::size_t mid = samples.size() / 2;
    std::nth_element(samples.begin(), samples.begin() + mid, samples.end());
    const double upper = samples[mid];
    if (samples.size() % 2 == 1) return upper;
    const double lower = *std::max_element(samples.begin(), samples.begin() + mid);
    return (lower + upper) / 2.0;
}

BenchReport measure_throughput(Algorithm cipher, std::size_t payload_bytes, unsigned reps, std::uint64_t seed) {
    if (reps < kMinBenchReps) throw InvalidArgument("reps must be >= 5, got " + std::to_string(reps));

    TrialStream rng(seed, 0);
    Bytes payload(payload_bytes);
    rng.fill(payload);
    std::array<std::uint8_t, 16> key_bytes;
    rng.fill(key_bytes);
    if (cipher == Algorithm::VigenereAlpha) {
        for (auto& b : payload) b = static_cast<std::uint8_t>('A' + b % 26);
        for (auto& b : key_bytes) b = static_cast<std::uint8_t>('A' + b % 26);
    }
    const KeyMaterial key = KeyMaterial::from_bytes(key_bytes);
    const SplitIndex split(rng.next_byte());

    std::vector<double> samples;
    samples.reserve(reps);
    for (unsigned r = 0; r < reps; ++r) {
        const auto start = Clock::now();
        const Bytes sealed = encrypt_payload(cipher, key, payload, split);
        const Bytes opened = decrypt_payload(cipher, key, sealed);
        samples.push_back(std::chrono::duration<double>(Clock::now() - start).count());
        if (opened != payload) throw Error("benchmark round trip failed for " + std::string(algorithm_name(cipher)));
    }

    BenchReport report{cipher, payload_bytes, reps, median(std::move(samples)), 0.0};
    if (payload_bytes > 0 && report.median_seconds > 0.0)
        report.throughput_mib_s = static_cast<double>(payload_bytes) / (1024.0 * 1024.0) / report.median_seconds;
    return report;
}

std::string to_table(const HistogramReport& r) {
    std::ostringstream os;
    os << "histogram  source=" << algorithm_name(r.source) << "  position=" << r.position << "  trials=" << r.trials
       << "  key_len=" << r.key_len << "  seed=" << r.seed << '\n';
    os << "  chi_square(255 dof) = " << fmt_double(r.chi_square) << "   p = " << fmt_double(r.p_value) << '\n';
    os << "  freq(0) = " << fmt_double(r.frequency(0)) << "  (x256 = " << fmt_double(r.frequency(0) * 256.0)
       << ", uniform = 1)\n";
    std::array<std::size_t, 256> order;
    for (std::size_t v = 0; v < 256; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return r.counts[a] > r.counts[b]; });
    os << "  value  count        x256\n";
    for (std::size_t n = 0; n < 5; ++n) {
        const auto v = order[n];
        os << "  " << std::setw(5) << v << "  " << std::setw(10) << r.counts[v] << "  "
           << fmt_double(r.frequency(static_cast<std::uint8_t>(v)) * 256.0) << '\n';
    }
    return os.str();
}

std::string to_table(const BruteForceReport& r) {
    std::ostringstream os;
    os << "brute-force  cipher=" << algorithm_name(r.cipher) << "  keyspace=2^" << r.keyspace_bits << '\n';
    os << "  recovered = " << key_display(r.recovered) << '\n';
    os << "  trials_tested = " << r.trials_tested << "   elapsed = " << fmt_double(r.elapsed_seconds) << " s\n";
    os << "  note: " << r.keyspace_note() << '\n';
    return os.str();
}

std::string to_table(const BenchReport& r) {
    std::ostringstream os;
    os << "bench  cipher=" << algorithm_name(r.cipher) << "  payload=" << r.payload_bytes << " B  reps=" << r.reps
       << '\n';
    os << "  median encrypt+decrypt = " << fmt_double(r.median_seconds) << " s   throughput = "
       << fmt_double(r.throughput_mib_s) << " MiB/s\n";
    return os.str();
}

std::string to_record(const HistogramReport& r) {
    std::ostringstream os;
    os << "record=histogram source=" << algorithm_name(r.source) << " position=" << r.position
       << " trials=" << r.trials << " key_len=" << r.key_len << " seed=" << r.seed
       << " chi_square=" << fmt_double(r.chi_square, 17) << " p_value=" << fmt_double(r.p_value, 17)
       << " freq0=" << fmt_double(r.frequency(0), 17) << " counts=";
    for (std::size_t v = 0; v < 256; ++v) os << (v ? "," : "") << r.counts[v];
    os << '\n';
    return os.str();
}

std::string to_record(const BruteForceReport& r) {
    std::ostringstream os;
    os << "record=brute_force cipher=" << algorithm_name(r.cipher) << " keyspace_bits=" << r.keyspace_bits
       << " recovered=" << key_display(r.recovered) << " trials_tested=" << r.trials_tested
       << " elapsed_seconds=" << fmt_double(r.elapsed_seconds, 9) << '\n';
    return os.str();
}

std::string to_record(const BenchReport& r) {
    std::ostringstream os;
    os << "record=bench cipher=" << algorithm_name(r.cipher) << " payload_bytes=" << r.payload_bytes
       << " reps=" << r.reps << " median_seconds=" << fmt_double(r.median_seconds, 9)
       << " throughput_mib_s=" << fmt_double(r.throughput_mib_s, 9) << '\n';
    return os.str();
}

}  // namespace vrc4lab::analysis
