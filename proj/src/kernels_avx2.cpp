#include "z2r/kernels.hpp"

#if defined(__AVX2__)
#include <immintrin.h>
#endif

namespace z2r::kernels::avx2 {

#if defined(__AVX2__)

namespace {

// Per-byte population counts via nibble lookup; summed to 64-bit lanes by
// the caller with _mm256_sad_epu8.
inline __m256i byte_popcount(__m256i v) {
    const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,  //
                                            0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i nibble = _mm256_set1_epi8(0x0f);
    const __m256i lo = _mm256_and_si256(v, nibble);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), nibble);
    return _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
}

inline __m256i lane_sum(__m256i byte_counts) { return _mm256_sad_epu8(byte_counts, _mm256_setzero_si256()); }

inline __m256i load(std::span<const std::uint64_t> s, std::size_t i) {
    return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(s.data() + i));
}

}  // namespace

void lee_weights(WordColumns words, std::span<std::uint16_t> out) {
    const std::size_t n = words.size();
    std::size_t i = 0;
    alignas(32) std::uint64_t lanes[4];
    for (; i + 4 <= n; i += 4) {
        const __m256i x = load(words.bin, i);
        const __m256i a = load(words.ring_a, i);
        const __m256i b = load(words.ring_b, i);
        // At most 8 + 8 + 8 per byte, no overflow before the horizontal sum.
        const __m256i bytes = _mm256_add_epi8(_mm256_add_epi8(byte_popcount(x), byte_popcount(b)),
                                              byte_popcount(_mm256_xor_si256(a, b)));
        _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), lane_sum(bytes));
        for (int k = 0; k < 4; ++k) out[i + k] = static_cast<std::uint16_t>(lanes[k]);
    }
    scalar::lee_weights({words.bin.subspan(i), words.ring_a.subspan(i), words.ring_b.subspan(i)}, out.subspan(i));
}

void inner_products(WordColumns words, const MixedWord& g, std::span<std::uint8_t> out) {
    const std::size_t n = words.size();
    const __m256i gx = _mm256_set1_epi64x(static_cast<long long>(g.bin().bits()));
    const __m256i ga = _mm256_set1_epi64x(static_cast<long long>(g.ring().a_bits()));
    const __m256i gb = _mm256_set1_epi64x(static_cast<long long>(g.ring().b_bits()));
    const __m256i one = _mm256_set1_epi64x(1);
    std::size_t i = 0;
    alignas(32) std::uint64_t lanes[4];
    for (; i + 4 <= n; i += 4) {
        const __m256i x = load(words.bin, i);
        const __m256i a = load(words.ring_a, i);
        const __m256i b = load(words.ring_b, i);
        const __m256i c = _mm256_and_si256(lane_sum(byte_popcount(_mm256_and_si256(a, ga))), one);
        const __m256i uterm = _mm256_xor_si256(_mm256_xor_si256(_mm256_and_si256(x, gx), _mm256_and_si256(a, gb)),
                                               _mm256_and_si256(b, ga));
        const __m256i u = _mm256_and_si256(lane_sum(byte_popcount(uterm)), one);
        _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), _mm256_or_si256(c, _mm256_slli_epi64(u, 1)));
        for (int k = 0; k < 4; ++k) out[i + k] = static_cast<std::uint8_t>(lanes[k]);
    }
    scalar::inner_products({words.bin.subspan(i), words.ring_a.subspan(i), words.ring_b.subspan(i)}, g,
                           out.subspan(i));
}

void unit_overlaps(WordColumns words, const MixedWord& g, std::span<std::uint16_t> out) {
    const std::size_t n = words.size();
    const __m256i ga = _mm256_set1_epi64x(static_cast<long long>(g.ring().a_bits()));
    std::size_t i = 0;
    alignas(32) std::uint64_t lanes[4];
    for (; i + 4 <= n; i += 4) {
        const __m256i a = load(words.ring_a, i);
        _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), lane_sum(byte_popcount(_mm256_and_si256(a, ga))));
        for (int k = 0; k < 4; ++k) out[i + k] = static_cast<std::uint16_t>(lanes[k]);
    }
    scalar::unit_overlaps({words.bin.subspan(i), words.ring_a.subspan(i), words.ring_b.subspan(i)}, g,
                          out.subspan(i));
}

#else

// Not built for AVX2; dispatch never selects these.
void lee_weights(WordColumns words, std::span<std::uint16_t> out) { scalar::lee_weights(words, out); }
void inner_products(WordColumns words, const MixedWord& g, std::span<std::uint8_t> out) {
    scalar::inner_products(words, g, out);
}
void unit_overlaps(WordColumns words, const MixedWord& g, std::span<std::uint16_t> out) {
    scalar::unit_overlaps(words, g, out);
}

#endif

}  // namespace z2r::kernels::avx2
