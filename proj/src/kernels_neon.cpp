#include "z2r/kernels.hpp"

#if defined(__ARM_NEON) || defined(__aarch64__)
#define Z2R_NEON_BUILD 1
#include <arm_neon.h>
#endif

namespace z2r::kernels::neon {

#if defined(Z2R_NEON_BUILD)

namespace {

inline uint64x2_t popcount64(uint64x2_t v) {
    return vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(vcntq_u8(vreinterpretq_u8_u64(v)))));
}

inline uint64x2_t load(std::span<const std::uint64_t> s, std::size_t i) { return vld1q_u64(s.data() + i); }

}  // namespace

void lee_weights(WordColumns words, std::span<std::uint16_t> out) {
    const std::size_t n = words.size();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const uint64x2_t x = load(words.bin, i);
        const uint64x2_t a = load(words.ring_a, i);
        const uint64x2_t b = load(words.ring_b, i);
        const uint64x2_t w = vaddq_u64(vaddq_u64(popcount64(x), popcount64(b)), popcount64(veorq_u64(a, b)));
        out[i] = static_cast<std::uint16_t>(vgetq_lane_u64(w, 0));
        out[i + 1] = static_cast<std::uint16_t>(vgetq_lane_u64(w, 1));
    }
    scalar::lee_weights({words.bin.subspan(i), words.ring_a.subspan(i), words.ring_b.subspan(i)}, out.subspan(i));
}

void inner_products(WordColumns words, const MixedWord& g, std::span<std::uint8_t> out) {
    const std::size_t n = words.size();
    const uint64x2_t gx = vdupq_n_u64(g.bin().bits());
    const uint64x2_t ga = vdupq_n_u64(g.ring().a_bits());
    const uint64x2_t gb = vdupq_n_u64(g.ring().b_bits());
    const uint64x2_t one = vdupq_n_u64(1);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const uint64x2_t x = load(words.bin, i);
        const uint64x2_t a = load(words.ring_a, i);
        const uint64x2_t b = load(words.ring_b, i);
        const uint64x2_t c = vandq_u64(popcount64(vandq_u64(a, ga)), one);
        const uint64x2_t uterm = veorq_u64(veorq_u64(vandq_u64(x, gx), vandq_u64(a, gb)), vandq_u64(b, ga));
        const uint64x2_t u = vandq_u64(popcount64(uterm), one);
        const uint64x2_t r = vorrq_u64(c, vshlq_n_u64(u, 1));
        out[i] = static_cast<std::uint8_t>(vgetq_lane_u64(r, 0));
        out[i + 1] = static_cast<std::uint8_t>(vgetq_lane_u64(r, 1));
    }
    scalar::inner_products({words.bin.subspan(i), words.ring_a.subspan(i), words.ring_b.subspan(i)}, g,
                           out.subspan(i));
}

void unit_overlaps(WordColumns words, const MixedWord& g, std::span<std::uint16_t> out) {
    const std::size_t n = words.size();
    const uint64x2_t ga = vdupq_n_u64(g.ring().a_bits());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const uint64x2_t c = popcount64(vandq_u64(load(words.ring_a, i), ga));
        out[i] = static_cast<std::uint16_t>(vgetq_lane_u64(c, 0));
        out[i + 1] = static_cast<std::uint16_t>(vgetq_lane_u64(c, 1));
    }
    scalar::unit_overlaps({words.bin.subspan(i), words.ring_a.subspan(i), words.ring_b.subspan(i)}, g,
                          out.subspan(i));
}

#else

// Not built for NEON; dispatch never selects these.
void lee_weights(WordColumns words, std::span<std::uint16_t> out) { scalar::lee_weights(words, out); }
void inner_products(WordColumns words, const MixedWord& g, std::span<std::uint8_t> out) {
    scalar::inner_products(words, g, out);
}
void unit_overlaps(WordColumns words, const MixedWord& g, std::span<std::uint16_t> out) {
    scalar::unit_overlaps(words, g, out);
}

#endif

}  // namespace z2r::kernels::neon
