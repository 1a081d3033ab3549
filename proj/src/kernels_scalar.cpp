#include <bit>

#include "z2r/kernels.hpp"

namespace z2r::kernels::scalar {

void lee_weights(WordColumns words, std::span<std::uint16_t> out) {
    for (std::size_t i = 0; i < words.size(); ++i) {
        const std::uint64_t a = words.ring_a[i];
        const std::uint64_t b = words.ring_b[i];
        out[i] = static_cast<std::uint16_t>(std::popcount(words.bin[i]) + std::popcount(b) + std::popcount(a ^ b));
    }
}

void inner_products(WordColumns words, const MixedWord& g, std::span<std::uint8_t> out) {
    const std::uint64_t gx = g.bin().bits();
    const std::uint64_t ga = g.ring().a_bits();
    const std::uint64_t gb = g.ring().b_bits();
    for (std::size_t i = 0; i < words.size(); ++i) {
        const std::uint64_t a = words.ring_a[i];
        const std::uint64_t b = words.ring_b[i];
        const unsigned c = std::popcount(a & ga) & 1;
        const unsigned u = std::popcount((words.bin[i] & gx) ^ (a & gb) ^ (b & ga)) & 1;
        out[i] = static_cast<std::uint8_t>(c | (u << 1));
    }
}

void unit_overlaps(WordColumns words, const MixedWord& g, std::span<std::uint16_t> out) {
    const std::uint64_t ga = g.ring().a_bits();
    for (std::size_t i = 0; i < words.size(); ++i)
        out[i] = static_cast<std::uint16_t>(std::popcount(words.ring_a[i] & ga));
}

}  // namespace z2r::kernels::scalar
