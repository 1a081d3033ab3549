#include <atomic>
#include <cstdlib>
#include <string>

#include "z2r/kernels.hpp"

namespace z2r::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(Z2R_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__)) && (defined(__x86_64__) || defined(__i386__))
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

Isa initial_choice() {
    if (const char* env = std::getenv("Z2R_ISA")) {
        const std::string_view want(env);
        for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon})
            if (want == name(isa) && available(isa)) return isa;
    }
    return best_available();
}

std::atomic<Isa>& current() {
    static std::atomic<Isa> isa{initial_choice()};
    return isa;
}

void check_sizes(WordColumns words, std::size_t out) {
    if (words.ring_a.size() != words.size() || words.ring_b.size() != words.size() || out < words.size())
        throw LengthMismatch("kernel column/output sizes disagree");
}

}  // namespace

std::string_view name(Isa isa) {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
        case Isa::neon: return "neon";
    }
    return "unknown";
}

bool available(Isa isa) {
    switch (isa) {
        case Isa::scalar: return true;
        case Isa::avx2: return cpu_has_avx2();
        case Isa::neon:
#if defined(__ARM_NEON) || defined(__aarch64__)
            return true;
#else
            return false;
#endif
    }
    return false;
}

Isa best_available() {
    if (available(Isa::avx2)) return Isa::avx2;
    if (available(Isa::neon)) return Isa::neon;
    return Isa::scalar;
}

Isa active() { return current().load(std::memory_order_relaxed); }

void set_active(Isa isa) {
    if (!available(isa)) throw PreconditionFailed("kernel variant " + std::string(name(isa)) + " unavailable");
    current().store(isa, std::memory_order_relaxed);
}

void lee_weights(WordColumns words, std::span<std::uint16_t> out) {
    check_sizes(words, out.size());
    switch (active()) {
        case Isa::avx2: return avx2::lee_weights(words, out);
        case Isa::neon: return neon::lee_weights(words, out);
        case Isa::scalar: break;
    }
    scalar::lee_weights(words, out);
}

void inner_products(WordColumns words, const MixedWord& g, std::span<std::uint8_t> out) {
    check_sizes(words, out.size());
    switch (active()) {
        case Isa::avx2: return avx2::inner_products(words, g, out);
        case Isa::neon: return neon::inner_products(words, g, out);
        case Isa::scalar: break;
    }
    scalar::inner_products(words, g, out);
}

void unit_overlaps(WordColumns words, const MixedWord& g, std::span<std::uint16_t> out) {
    check_sizes(words, out.size());
    switch (active()) {
        case Isa::avx2: return avx2::unit_overlaps(words, g, out);
        case Isa::neon: return neon::unit_overlaps(words, g, out);
        case Isa::scalar: break;
    }
    scalar::unit_overlaps(words, g, out);
}

}  // namespace z2r::kernels
