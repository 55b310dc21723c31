#include <arm_neon.h>

#include "vrc4lab/kernels.hpp"
#include "cyclic_impl.hpp"

namespace vrc4lab::kernels::detail {

namespace {

struct Neon {
    static constexpr std::size_t kWidth = 16;
    using Reg = uint8x16_t;
    static Reg load(const std::uint8_t* p) { return vld1q_u8(p); }
    static void store(std::uint8_t* p, Reg v) { vst1q_u8(p, v); }
    static Reg add(Reg a, Reg b) { return vaddq_u8(a, b); }
    static Reg sub(Reg a, Reg b) { return vsubq_u8(a, b); }
    static Reg bxor(Reg a, Reg b) { return veorq_u8(a, b); }
};

const KernelTable kNeon = make_table<Neon>(Isa::Neon);

}  // namespace

const KernelTable* neon_table() noexcept { return &kNeon; }

}  // namespace vrc4lab::kernels::detail
