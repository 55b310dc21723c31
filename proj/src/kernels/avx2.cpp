#include <immintrin.h>

#include "vrc4lab/kernels.hpp"
#include "cyclic_impl.hpp"

namespace vrc4lab::kernels::detail {

namespace {

struct Avx2 {
    static constexpr std::size_t kWidth = 32;
    using Reg = __m256i;
    static Reg load(const std::uint8_t* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
    static void store(std::uint8_t* p, Reg v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }
    static Reg add(Reg a, Reg b) { return _mm256_add_epi8(a, b); }
    static Reg sub(Reg a, Reg b) { return _mm256_sub_epi8(a, b); }
    static Reg bxor(Reg a, Reg b) { return _mm256_xor_si256(a, b); }
};

const KernelTable kAvx2 = make_table<Avx2>(Isa::Avx2);

}  // namespace

const KernelTable* avx2_table() noexcept { return &kAvx2; }

}  // namespace vrc4lab::kernels::detail
