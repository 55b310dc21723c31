#include <emmintrin.h>

#include "vrc4lab/kernels.hpp"
#include "cyclic_impl.hpp"

namespace vrc4lab::kernels::detail {

namespace {

struct Sse2 {
    static constexpr std::size_t kWidth = 16;
    using Reg = __m128i;
    static Reg load(const std::uint8_t* p) { return _mm_loadu_si128(reinterpret_cast<const __m128i*>(p)); }
    static void store(std::uint8_t* p, Reg v) { _mm_storeu_si128(reinterpret_cast<__m128i*>(p), v); }
    static Reg add(Reg a, Reg b) { return _mm_add_epi8(a, b); }
    static Reg sub(Reg a, Reg b) { return _mm_sub_epi8(a, b); }
    static Reg bxor(Reg a, Reg b) { return _mm_xor_si128(a, b); }
};

const KernelTable kSse2 = make_table<Sse2>(Isa::Sse2);

}  // namespace

const KernelTable* sse2_table() noexcept { return &kSse2; }

}  // namespace vrc4lab::kernels::detail
