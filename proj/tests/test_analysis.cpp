#include <numeric>

#include "doctest.h"
#include "test_util.hpp"
#include "vrc4lab/analysis.hpp"
#include "vrc4lab/rc4.hpp"
#include "vrc4lab/suite.hpp"

using namespace vrc4lab;
namespace an = vrc4lab::analysis;

namespace {

std::uint64_t total(const an::HistogramReport& r) {
    return std::accumulate(r.counts.begin(), r.counts.end(), std::uint64_t{0});
}

}  // namespace

TEST_SUITE("analysis") {

TEST_CASE("trial streams are reproducible and distinct") {
    an::TrialStream a(7, 3), b(7, 3), c(7, 4), d(8, 3);
    const auto va = a.next_u64();
    CHECK(va == b.next_u64());
    CHECK(va != c.next_u64());
    CHECK(va != d.next_u64());
    an::TrialStream e(7, 3);
    Bytes bytes(8);
    e.fill(bytes);
    for (std::size_t n = 0; n < 8; ++n) CHECK(bytes[n] == static_cast<std::uint8_t>(va >> (8 * n)));
}

TEST_CASE("chi-square closed form: two trials in one bin") {
    std::array<std::uint64_t, 256> counts{};
    counts[0] = 2;
    // exp = 2/256; (2 - exp)^2/exp + 255 * exp = 2 * 255
    CHECK(an::chi_square_uniform(counts) == doctest::Approx(510.0).epsilon(1e-12));
    counts.fill(10);
    CHECK(an::chi_square_uniform(counts) == 0.0);
    CHECK_THROWS_AS(an::chi_square_uniform(std::span<const std::uint64_t>{}), InvalidArgument);
}

TEST_CASE("chi-square distribution values") {
    // Reference values from an independent statistics package.
    CHECK(an::chi_square_quantile(0.99, 255) == doctest::Approx(310.45738821990585).epsilon(1e-9));
    CHECK(an::chi_square_quantile(0.005, 255) == doctest::Approx(200.58750169822608).epsilon(1e-9));
    CHECK(an::chi_square_quantile(0.995, 255) == doctest::Approx(316.9193852634747).epsilon(1e-9));
    CHECK(an::chi_square_upper_tail(255, 255) == doctest::Approx(0.48822252177040637).epsilon(1e-9));
    CHECK(an::chi_square_upper_tail(510, 255) == doctest::Approx(3.548444007374332e-19).epsilon(1e-6));
}

TEST_CASE("one trial gives exactly one tally") {
    an::HistogramParams p;
    p.trials = 1;
    p.seed = 99;
    for (const auto& r : {an::keystream_histogram(p), an::vrc4_body_histogram(p)}) {
        CHECK(total(r) == 1);
        CHECK(std::count(r.counts.begin(), r.counts.end(), 1u) == 1);
    }
}

TEST_CASE("parameter validation") {
    an::HistogramParams p;
    p.trials = 0;
    CHECK_THROWS_AS(an::keystream_histogram(p), InvalidArgument);
    p.trials = 5;
    p.key_len = 0;
    CHECK_THROWS_AS(an::vrc4_body_histogram(p), InvalidArgument);
    p.key_len = 257;
    CHECK_THROWS_AS(an::keystream_histogram(p), InvalidArgument);
}

TEST_CASE("histograms are reproducible and independent of the worker count") {
    an::HistogramParams p;
    p.position = 5;
    p.trials = 20'000;
    p.seed = 1234;
    p.threads = 1;
    const auto seq = an::keystream_histogram(p);
    const auto seq_v = an::vrc4_body_histogram(p);
    CHECK(total(seq) == p.trials);
    CHECK(an::keystream_histogram(p).counts == seq.counts);
    for (unsigned threads : {2u, 3u, 7u, 0u}) {
        p.threads = threads;
        CHECK(an::keystream_histogram(p).counts == seq.counts);
        CHECK(an::vrc4_body_histogram(p).counts == seq_v.counts);
    }
    p.seed = 1235;
    p.threads = 1;
    CHECK(an::keystream_histogram(p).counts != seq.counts);
}

TEST_CASE("trial keys follow the seed, not the position") {
    // Same seed, different positions: position 0 tallies must match the
    // first keystream byte of the same per-trial keys.
    an::HistogramParams p;
    p.trials = 3000;
    p.seed = 5;
    p.position = 0;
    const auto first = an::keystream_histogram(p);
    std::array<std::uint64_t, 256> manual{};
    for (std::uint64_t t = 0; t < p.trials; ++t) {
        an::TrialStream rng(p.seed, t);
        Bytes key(16);
        rng.fill(key);
        ++manual[rc4_crypt(KeyMaterial::from_bytes(key), Bytes{0})[0]];
    }
    CHECK(first.counts == manual);
}

TEST_CASE("all-zero key: VRC4 body histogram equals the RC4 histogram") {
    an::HistogramParams p;
    p.trials = 500;
    p.seed = 77;
    p.fixed_key = KeyMaterial::from_bytes(Bytes(16, 0x00));
    for (std::size_t pos : {0u, 1u, 200u, 300u}) {
        p.position = pos;
        CHECK(an::vrc4_body_histogram(p).counts == an::keystream_histogram(p).counts);
    }
}

TEST_CASE("second-byte zero bias is visible at 2^18 trials") {
    an::HistogramParams p;
    p.position = 1;
    p.trials = 1u << 18;
    p.seed = 3;
    p.threads = 0;
    const auto r = an::keystream_histogram(p);
    CHECK(r.frequency(0) >= 1.7 / 256);
    CHECK(r.frequency(0) <= 2.3 / 256);
}

TEST_CASE("brute force recovers a planted 16-bit key for RC4 and VRC4") {
    const auto key = KeyMaterial::from_hex("002A");
    const Bytes plain(testutil::bytes("known plaintext"));
    for (auto algo : {Algorithm::Rc4, Algorithm::Vrc4}) {
        const Bytes c = encrypt_payload(algo, key, plain, SplitIndex(9));
        const auto r = an::brute_force_known_plaintext(algo, c, plain, 16);
        REQUIRE(r.recovered.has_value());
        CHECK(to_hex(*r.recovered) == "002A");
        CHECK(r.trials_tested == 0x2A + 1);
        CHECK(r.keyspace_bits == 16);
    }
}

TEST_CASE("brute force exhausts the space when the key is outside it") {
    const auto key = KeyMaterial::from_hex("0102030405");
    const Bytes plain(testutil::bytes("outside"));
    const Bytes c = encrypt_payload(Algorithm::Rc4, key, plain, SplitIndex(0));
    const auto r = an::brute_force_known_plaintext(Algorithm::Rc4, c, plain, 8);
    CHECK_FALSE(r.recovered.has_value());
    CHECK(r.trials_tested == 256);
}

TEST_CASE("brute force returns the lexicographically first match") {
    // Empty known plaintext matches every key, so the first key wins.
    const auto r = an::brute_force_known_plaintext(Algorithm::Rc4, ByteView{}, ByteView{}, 16);
    REQUIRE(r.recovered.has_value());
    CHECK(to_hex(*r.recovered) == "0000");
    CHECK(r.trials_tested == 1);

    // A one-byte plaintext: many keys collide; the answer must be the
    // smallest one, found by scanning upward independently.
    const Bytes plain{0x41};
    const Bytes c = encrypt_payload(Algorithm::Rc4, KeyMaterial::from_hex("FFFF"), plain, SplitIndex(0));
    const auto first = an::brute_force_known_plaintext(Algorithm::Rc4, c, plain, 16);
    REQUIRE(first.recovered.has_value());
    for (unsigned k = 0; k < 0x10000; ++k) {
        const Bytes kb{static_cast<std::uint8_t>(k >> 8), static_cast<std::uint8_t>(k)};
        if (rc4_crypt(KeyMaterial::from_bytes(kb), c) == plain) {
            CHECK(*first.recovered == kb);
            break;
        }
    }
}

TEST_CASE("brute force argument checks") {
    const Bytes p(4), c4(4), c5(5);
    CHECK_THROWS_AS(an::brute_force_known_plaintext(Algorithm::Rc4, c5, p, 16), InvalidArgument);
    CHECK_THROWS_AS(an::brute_force_known_plaintext(Algorithm::Vrc4, c4, p, 16), InvalidArgument);
    CHECK_THROWS_AS(an::brute_force_known_plaintext(Algorithm::Rc4, c4, p, 12), InvalidArgument);
    CHECK_THROWS_AS(an::brute_force_known_plaintext(Algorithm::Rc4, c4, p, 32), InvalidArgument);
    CHECK_THROWS_AS(an::brute_force_known_plaintext(Algorithm::VigenereAlpha, c4, p, 8), InvalidArgument);
}

TEST_CASE("VRC4 keyspace note documents the clear-text J") {
    an::BruteForceReport r{Algorithm::Vrc4, 16, std::nullopt, 0, 0.0};
    CHECK(r.keyspace_note().find("clear") != std::string::npos);
    CHECK(r.keyspace_note().find("identical to RC4") != std::string::npos);
}

TEST_CASE("median") {
    CHECK(an::median({3.0, 1.0, 2.0}) == 2.0);
    CHECK(an::median({4.0, 1.0, 3.0, 2.0}) == 2.5);
    CHECK_THROWS_AS(an::median({}), InvalidArgument);
}

TEST_CASE("throughput harness") {
    CHECK_THROWS_AS(an::measure_throughput(Algorithm::Rc4, 1024, 4, 1), InvalidArgument);
    const auto zero = an::measure_throughput(Algorithm::Vrc4, 0, 5, 1);
    CHECK(zero.payload_bytes == 0);
    CHECK(zero.throughput_mib_s == 0.0);
    for (auto algo : {Algorithm::Rc4, Algorithm::Vrc4, Algorithm::VigenereAlpha}) {
        const auto r = an::measure_throughput(algo, 64 * 1024, 5, 2);
        CHECK(r.reps == 5);
        CHECK(r.median_seconds > 0.0);
        CHECK(r.throughput_mib_s > 0.0);
    }
}

TEST_CASE("reports serialize as one key=value record per line") {
    an::HistogramParams p;
    p.trials = 10;
    const auto h = an::keystream_histogram(p);
    const std::string rec = an::to_record(h);
    CHECK(rec.rfind("record=histogram source=rc4 position=1 trials=10", 0) == 0);
    CHECK(std::count(rec.begin(), rec.end(), '\n') == 1);
    CHECK(rec == an::to_record(an::keystream_histogram(p)));
    CHECK(an::to_table(h).find("chi_square") != std::string::npos);

    const an::BruteForceReport b{Algorithm::Vrc4, 16, Bytes{0x00, 0x2A}, 43, 0.5};
    CHECK(an::to_record(b).find("recovered=002A trials_tested=43") != std::string::npos);
    CHECK(an::to_table(b).find("note:") != std::string::npos);

    const an::BenchReport bench{Algorithm::Rc4, 100, 5, 0.25, 1.5};
    CHECK(an::to_record(bench).rfind("record=bench cipher=rc4 payload_bytes=100 reps=5", 0) == 0);
}

}
