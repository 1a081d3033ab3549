#include <cstdlib>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "z2r/kernels.hpp"

using namespace z2r;

namespace {

struct Batch {
    int alpha, beta;
    std::vector<std::uint64_t> bin, a, b;
    kernels::WordColumns cols() const { return {bin, a, b}; }
    MixedWord word(std::size_t i) const {
        return {BinaryVector(alpha, bin[i]), RingVector(beta, a[i], b[i])};
    }
};

Batch random_batch(std::mt19937_64& rng, int alpha, int beta, std::size_t n) {
    Batch out{alpha, beta, {}, {}, {}};
    for (std::size_t i = 0; i < n; ++i) {
        const MixedWord w = oracle::random_word(rng, alpha, beta);
        out.bin.push_back(w.bin().bits());
        out.a.push_back(w.ring().a_bits());
        out.b.push_back(w.ring().b_bits());
    }
    return out;
}

using LeeFn = void (*)(kernels::WordColumns, std::span<std::uint16_t>);
using InnerFn = void (*)(kernels::WordColumns, const MixedWord&, std::span<std::uint8_t>);
using OverlapFn = void (*)(kernels::WordColumns, const MixedWord&, std::span<std::uint16_t>);

struct Variant {
    kernels::Isa isa;
    LeeFn lee;
    InnerFn inner;
    OverlapFn overlap;
};

std::vector<Variant> variants() {
    std::vector<Variant> v{{kernels::Isa::scalar, kernels::scalar::lee_weights, kernels::scalar::inner_products,
                            kernels::scalar::unit_overlaps}};
    if (kernels::available(kernels::Isa::avx2))
        v.push_back({kernels::Isa::avx2, kernels::avx2::lee_weights, kernels::avx2::inner_products,
                     kernels::avx2::unit_overlaps});
    if (kernels::available(kernels::Isa::neon))
        v.push_back({kernels::Isa::neon, kernels::neon::lee_weights, kernels::neon::inner_products,
                     kernels::neon::unit_overlaps});
    v.push_back({kernels::active(), kernels::lee_weights, kernels::inner_products, kernels::unit_overlaps});
    return v;
}

}  // namespace

TEST_CASE("dispatch honours the environment override") {
    const char* env = std::getenv("Z2R_ISA");
    MESSAGE("active kernel variant: " << kernels::name(kernels::active()));
    if (env && std::string_view(env) == "scalar") CHECK(kernels::active() == kernels::Isa::scalar);
    CHECK(kernels::available(kernels::Isa::scalar));
    CHECK(kernels::available(kernels::best_available()));
}

TEST_CASE("scalar kernels match the oracle") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const int alpha = static_cast<int>(rng() % 65), beta = static_cast<int>(rng() % 65);
        const Batch batch = random_batch(rng, alpha, beta, 37);
        const MixedWord g = oracle::random_word(rng, alpha, beta);
        std::vector<std::uint16_t> lee(37), ov(37);
        std::vector<std::uint8_t> ip(37);
        kernels::scalar::lee_weights(batch.cols(), lee);
        kernels::scalar::inner_products(batch.cols(), g, ip);
        kernels::scalar::unit_overlaps(batch.cols(), g, ov);
        for (std::size_t i = 0; i < 37; ++i) {
            const auto w = oracle::from(batch.word(i));
            const auto og = oracle::from(g);
            CHECK(lee[i] == oracle::lee(w));
            CHECK(ip[i] == oracle::inner(w, og));
            int n11 = 0;
            for (std::size_t j = 0; j < w.y.size(); ++j) n11 += (w.y[j] % 2) * (og.y[j] % 2);
            CHECK(ov[i] == n11);
        }
    }
}

TEST_CASE("all variants agree, including ragged tails") {
    std::mt19937_64 rng(12);
    const auto vs = variants();
    for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 7u, 8u, 15u, 16u, 17u, 31u, 64u, 1000u, 1027u}) {
        const int alpha = static_cast<int>(rng() % 65), beta = static_cast<int>(rng() % 65);
        const Batch batch = random_batch(rng, alpha, beta, n);
        const MixedWord g = oracle::random_word(rng, alpha, beta);
        std::vector<std::uint16_t> ref_lee(n), ref_ov(n);
        std::vector<std::uint8_t> ref_ip(n);
        vs[0].lee(batch.cols(), ref_lee);
        vs[0].inner(batch.cols(), g, ref_ip);
        vs[0].overlap(batch.cols(), g, ref_ov);
        for (const auto& v : vs) {
            CAPTURE(kernels::name(v.isa));
            CAPTURE(n);
            std::vector<std::uint16_t> lee(n), ov(n);
            std::vector<std::uint8_t> ip(n);
            v.lee(batch.cols(), lee);
            v.inner(batch.cols(), g, ip);
            v.overlap(batch.cols(), g, ov);
            CHECK(lee == ref_lee);
            CHECK(ip == ref_ip);
            CHECK(ov == ref_ov);
        }
    }
}

TEST_CASE("set_active rejects unavailable variants") {
    const auto before = kernels::active();
    for (auto isa : {kernels::Isa::scalar, kernels::Isa::avx2, kernels::Isa::neon}) {
        if (kernels::available(isa)) {
            kernels::set_active(isa);
            CHECK(kernels::active() == isa);
        } else {
            CHECK_THROWS_AS(kernels::set_active(isa), PreconditionFailed);
        }
    }
    kernels::set_active(before);
}
