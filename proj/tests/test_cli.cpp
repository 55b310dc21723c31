#include <filesystem>

#include "cli_runner.hpp"
#include "doctest.h"
#include "test_util.hpp"
#include "vrc4lab/container.hpp"

using namespace vrc4lab;
using clitest::run;

namespace {

const std::string kCli = VRC4LAB_CLI;
const std::string kCorruptCli = VRC4LAB_CLI_CORRUPT;

std::size_t entries(const std::filesystem::path& dir) {
    return static_cast<std::size_t>(std::distance(std::filesystem::directory_iterator(dir), {}));
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("vectors self-test") {
    const auto r = run(kCli, "vectors");
    CHECK(r.code == 0);
    CHECK(r.output.find("LXFOPVEFRNHR") != std::string::npos);
    CHECK(r.output.find("FAIL") == std::string::npos);
    CHECK(r.output.find("all vectors OK") != std::string::npos);
}

TEST_CASE("corrupted vector build fails the self-test and refuses to bench") {
    const auto r = run(kCorruptCli, "vectors");
    CHECK(r.code == 1);
    CHECK(r.output.find("FAIL  rc4 Key/Plaintext") != std::string::npos);
    const auto b = run(kCorruptCli, "bench --size 1024 --reps 5");
    CHECK(b.code == 1);
    CHECK(b.output.find("refusing to benchmark") != std::string::npos);
}

TEST_CASE("1 MiB VRC4 file round trip") {
    clitest::TempDir dir;
    std::mt19937_64 rng(81);
    const Bytes data = testutil::random_bytes(rng, 1 << 20);
    clitest::write(dir.file("plain.bin"), data);
    REQUIRE(run(kCli, "encrypt --algo vrc4 --key secret --in " + dir.file("plain.bin") + " --out " +
                          dir.file("c.vrc4")).code == 0);
    const Bytes framed = clitest::read(dir.file("c.vrc4"));
    CHECK(framed.size() == data.size() + 1 + kFrameHeaderSize);
    REQUIRE(run(kCli, "decrypt --key secret --in " + dir.file("c.vrc4") + " --out " + dir.file("back.bin")).code ==
            0);
    CHECK(clitest::read(dir.file("back.bin")) == data);
}

TEST_CASE("fixed J reproduces the VRC4 known-answer vector") {
    clitest::TempDir dir;
    clitest::write(dir.file("p.txt"), testutil::bytes("Plaintext"));
    REQUIRE(run(kCli, "encrypt --algo vrc4 --j 4 --key Key --in " + dir.file("p.txt") + " --out " + dir.file("c")).code ==
            0);
    const Frame f = read_frame(clitest::read(dir.file("c")));
    CHECK(f.algo == Algorithm::Vrc4);
    CHECK(to_hex(f.payload) == "06588F333EB9FA6F4C04");
}

TEST_CASE("rc4 with a hex key and with a key file") {
    clitest::TempDir dir;
    clitest::write(dir.file("p.txt"), testutil::bytes("Plaintext"));
    clitest::write(dir.file("key.bin"), testutil::bytes("Key"));
    REQUIRE(run(kCli, "encrypt --algo rc4 --key-hex 4B6579 --in " + dir.file("p.txt") + " --out " + dir.file("a"))
                .code == 0);
    REQUIRE(run(kCli, "encrypt --algo rc4 --key-file " + dir.file("key.bin") + " --in " + dir.file("p.txt") +
                          " --out " + dir.file("b"))
                .code == 0);
    CHECK(to_hex(read_frame(clitest::read(dir.file("a"))).payload) == "BBF316E8D940AF0AD3");
    CHECK(clitest::read(dir.file("a")) == clitest::read(dir.file("b")));
}

TEST_CASE("alphabetic Vigenere through files") {
    clitest::TempDir dir;
    clitest::write(dir.file("p.txt"), testutil::bytes("ATTACKATDAWN"));
    REQUIRE(run(kCli, "encrypt --algo vigenere --key LEMON --in " + dir.file("p.txt") + " --out " + dir.file("c"))
                .code == 0);
    CHECK(read_frame(clitest::read(dir.file("c"))).payload == testutil::bytes("LXFOPVEFRNHR"));
    REQUIRE(run(kCli, "decrypt --key LEMON --in " + dir.file("c") + " --out " + dir.file("p2")).code == 0);
    CHECK(clitest::read(dir.file("p2")) == testutil::bytes("ATTACKATDAWN"));
}

TEST_CASE("non A-Z input to vigenere exits 4 naming the offset") {
    clitest::TempDir dir;
    clitest::write(dir.file("p.txt"), testutil::bytes("1234"));
    const auto r = run(kCli, "encrypt --algo vigenere --key LEMON --in " + dir.file("p.txt") + " --out " + dir.file("c"));
    CHECK(r.code == 4);
    CHECK(r.output.find("offset 0") != std::string::npos);
    CHECK_FALSE(std::filesystem::exists(dir.file("c")));
}

TEST_CASE("exit codes for missing files and bad keys") {
    clitest::TempDir dir;
    clitest::write(dir.file("p"), testutil::bytes("data"));
    CHECK(run(kCli, "encrypt --key k --in " + dir.file("missing") + " --out " + dir.file("c")).code == 2);
    CHECK(run(kCli, "encrypt --key-file " + dir.file("missing") + " --in " + dir.file("p") + " --out " + dir.file("c"))
              .code == 2);
    CHECK(run(kCli, "encrypt --key k --in " + dir.file("p") + " --out " + dir.file("no/such/dir/c")).code == 2);
    CHECK(run(kCli, "encrypt --key-hex zz --in " + dir.file("p") + " --out " + dir.file("c")).code == 3);
    CHECK(run(kCli, "encrypt --in " + dir.file("p") + " --out " + dir.file("c")).code == 3);
    CHECK(run(kCli, "encrypt --key a --key-hex 00 --in " + dir.file("p") + " --out " + dir.file("c")).code == 3);
    CHECK(run(kCli, "encrypt --algo vigenere --key lemon --in " + dir.file("p") + " --out " + dir.file("c")).code == 3);
    CHECK(run(kCli, "encrypt --algo rc4 --j 3 --key k --in " + dir.file("p") + " --out " + dir.file("c")).code == 3);
    CHECK(run(kCli, "encrypt --j 256 --key k --in " + dir.file("p") + " --out " + dir.file("c")).code == 3);
    CHECK(run(kCli, "encrypt --algo des --key k --in " + dir.file("p") + " --out " + dir.file("c")).code == 3);
    CHECK(run(kCli, "frobnicate").code == 3);
    CHECK_FALSE(std::filesystem::exists(dir.file("c")));
    CHECK(entries(dir.path()) == 1);
}

TEST_CASE("decrypt rejects malformed frames with exit 5") {
    clitest::TempDir dir;
    clitest::write(dir.file("p"), testutil::bytes("hello"));
    REQUIRE(run(kCli, "encrypt --algo vrc4 --key k --in " + dir.file("p") + " --out " + dir.file("c")).code == 0);
    Bytes framed = clitest::read(dir.file("c"));

    Bytes bad = framed;
    bad[0] = 'X';
    clitest::write(dir.file("bad"), bad);
    auto r = run(kCli, "decrypt --key k --in " + dir.file("bad") + " --out " + dir.file("out"));
    CHECK(r.code == 5);
    CHECK(r.output.find("bad magic") != std::string::npos);

    r = run(kCli, "decrypt --algo rc4 --key k --in " + dir.file("c") + " --out " + dir.file("out"));
    CHECK(r.code == 5);
    CHECK(r.output.find("mismatch") != std::string::npos);

    clitest::write(dir.file("short"), ByteView(framed).first(10));
    r = run(kCli, "decrypt --key k --in " + dir.file("short") + " --out " + dir.file("out"));
    CHECK(r.code == 5);
    CHECK(r.output.find("truncated") != std::string::npos);

    clitest::write(dir.file("empty-vrc4"), write_frame(Algorithm::Vrc4, ByteView{}));
    r = run(kCli, "decrypt --key k --in " + dir.file("empty-vrc4") + " --out " + dir.file("out"));
    CHECK(r.code == 5);
    CHECK_FALSE(std::filesystem::exists(dir.file("out")));

    r = run(kCli, "decrypt --algo vrc4 --key k --in " + dir.file("c") + " --out " + dir.file("out"));
    CHECK(r.code == 0);
    CHECK(clitest::read(dir.file("out")) == testutil::bytes("hello"));
}

TEST_CASE("analyze second-byte is deterministic and persists records") {
    clitest::TempDir dir;
    const std::string args = "analyze --test second-byte --trials 4096 --seed 7 --out ";
    REQUIRE(run(kCli, args + dir.file("a.txt")).code == 0);
    REQUIRE(run(kCli, args + dir.file("b.txt") + " --threads 3").code == 0);
    const Bytes a = clitest::read(dir.file("a.txt"));
    CHECK_FALSE(a.empty());
    CHECK(a == clitest::read(dir.file("b.txt")));
    const std::string text(a.begin(), a.end());
    CHECK(text.find("record=histogram source=rc4 position=1") != std::string::npos);
    CHECK(text.find("record=histogram source=vrc4 position=1") != std::string::npos);
}

TEST_CASE("analyze uniformity and brute") {
    auto r = run(kCli, "analyze --test uniformity --trials 2048 --seed 1");
    CHECK(r.code == 0);
    CHECK(r.output.find("position=200") != std::string::npos);
    CHECK(r.output.find("critical chi_square") != std::string::npos);

    r = run(kCli, "analyze --test brute --bits 16 --key-hex 002a");
    CHECK(r.code == 0);
    CHECK(r.output.find("cipher=rc4") != std::string::npos);
    CHECK(r.output.find("cipher=vrc4") != std::string::npos);
    CHECK(r.output.find("recovered = 002A") != std::string::npos);
    CHECK(r.output.find("clear") != std::string::npos);

    CHECK(run(kCli, "analyze --test brute --bits 12").code == 3);
    CHECK(run(kCli, "analyze --test brute --bits 16 --key-hex 010203").code == 3);
    CHECK(run(kCli, "analyze --test second-byte --trials 0").code == 3);
    CHECK(run(kCli, "analyze --test nonsense").code == 3);
}

TEST_CASE("bench prints both ciphers and the ratio") {
    clitest::TempDir dir;
    const auto r = run(kCli, "bench --size 65536 --reps 5 --out " + dir.file("bench.txt"));
    CHECK(r.code == 0);
    CHECK(r.output.find("cipher=rc4") != std::string::npos);
    CHECK(r.output.find("cipher=vrc4") != std::string::npos);
    CHECK(r.output.find("median ratio vrc4/rc4") != std::string::npos);
    CHECK(run(kCli, "bench --reps 4").code == 3);
    const Bytes rec = clitest::read(dir.file("bench.txt"));
    CHECK(std::string(rec.begin(), rec.end()).find("record=bench_ratio") != std::string::npos);
}

}
