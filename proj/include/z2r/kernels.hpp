#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

#include "z2r/words.hpp"

// Batch kernels over bit-packed codeword columns. Every kernel has a scalar
// reference implementation and, where the target supports it, AVX2 and NEON
// variants that must produce identical output. The active variant is picked
// at first use from the CPU features, or from the Z2R_ISA environment
// variable (scalar | avx2 | neon).
namespace z2r::kernels {

// Structure-of-arrays view of a batch of words: element i is
// (bin[i] | ring_a[i] + u ring_b[i]). All three spans have the same size.
struct WordColumns {
    std::span<const std::uint64_t> bin;
    std::span<const std::uint64_t> ring_a;
    std::span<const std::uint64_t> ring_b;

    std::size_t size() const { return bin.size(); }
};

enum class Isa { scalar, avx2, neon };

std::string_view name(Isa isa);
bool available(Isa isa);
// Best variant this binary and CPU support.
Isa best_available();
Isa active();
// Overrides the dispatch choice; throws PreconditionFailed if unavailable.
void set_active(Isa isa);

// out[i] = Lee weight of word i.
void lee_weights(WordColumns words, std::span<std::uint16_t> out);
// out[i] = code of <word i, g> in R (see RingElem::code()).
void inner_products(WordColumns words, const MixedWord& g, std::span<std::uint8_t> out);
// out[i] = N11(ring part of word i, ring part of g).
void unit_overlaps(WordColumns words, const MixedWord& g, std::span<std::uint16_t> out);

// Explicit variants, for equivalence tests and benchmarks.
namespace scalar {
void lee_weights(WordColumns words, std::span<std::uint16_t> out);
void inner_products(WordColumns words, const MixedWord& g, std::span<std::uint8_t> out);
void unit_overlaps(WordColumns words, const MixedWord& g, std::span<std::uint16_t> out);
}  // namespace scalar

namespace avx2 {
void lee_weights(WordColumns words, std::span<std::uint16_t> out);
void inner_products(WordColumns words, const MixedWord& g, std::span<std::uint8_t> out);
void unit_overlaps(WordColumns words, const MixedWord& g, std::span<std::uint16_t> out);
}  // namespace avx2

namespace neon {
void lee_weights(WordColumns words, std::span<std::uint16_t> out);
void inner_products(WordColumns words, const MixedWord& g, std::span<std::uint8_t> out);
void unit_overlaps(WordColumns words, const MixedWord& g, std::span<std::uint16_t> out);
}  // namespace neon

}  // namespace z2r::kernels
