#include "doctest.h"
#include "oracles.hpp"
#include "z2r/analysis.hpp"
#include "z2r/constructions.hpp"
#include "z2r/io.hpp"

using namespace z2r;

namespace {

GenMatrix seed_matrix(const oracle::WordSet& ws, int alpha, int beta) {
    GenMatrix g(alpha, beta);
    for (const auto& w : ws) g.add_row(oracle::to(w));
    return standard_form(g).in_original_coordinates();
}

std::vector<BinaryVector> all_binary(int n) {
    std::vector<BinaryVector> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) out.emplace_back(n, m);
    return out;
}

std::vector<RingVector> all_ring(int n) {
    std::vector<RingVector> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << (2 * n)); ++m) {
        std::uint64_t a = 0, b = 0;
        for (int j = 0; j < n; ++j) {
            a |= ((m >> (2 * j)) & 1u) << j;
            b |= ((m >> (2 * j + 1)) & 1u) << j;
        }
        out.emplace_back(n, a, b);
    }
    return out;
}

// Outcome of one build-up call, checked against the oracle.
struct Sweep {
    int valid = 0;
    int rejected = 0;
};

void check_output(const GenMatrix& in, const GenMatrix& out, std::optional<bool> expected_separable) {
    const auto ws = oracle::span(out);
    REQUIRE(oracle::self_dual(out.alpha(), out.beta(), ws));
    const bool sep_in = oracle::separable(in.alpha(), in.beta(), oracle::span(in));
    const bool sep_out = oracle::separable(out.alpha(), out.beta(), ws);
    if (expected_separable) CHECK(sep_out == *expected_separable);
    else CHECK(sep_out == sep_in);
}

}  // namespace

TEST_CASE("direct sum") {
    const GenMatrix sd21 = corpus::load("sd_2_1.code");
    const GenMatrix m = direct_sum(sd21, sd21);
    CHECK(is_self_dual(m));
    CHECK(span(m).type() == CodeType{4, 2, 4, 0, 2});
    const auto w = weight_enumerator(span(sd21));
    CHECK(weight_enumerator(span(m)) == product(w, w));

    const GenMatrix x = corpus::load("binary_8_4.code");
    const GenMatrix y = corpus::load("ring_0_4.code");
    const GenMatrix xy = direct_sum(x, y);
    CHECK(oracle::self_dual(8, 4, oracle::span(xy)));
    CHECK(classify(span(xy)) == SelfDualType::TypeII);
    CHECK(separability_report(span(xy)).all_agree());
    CHECK(separability_report(span(xy)).separable);

    CHECK(oracle::span(direct_sum(sd21, GenMatrix(0, 0))) == oracle::span(sd21));
    CHECK_THROWS_AS(direct_sum(corpus::load("c2.code"), sd21), PreconditionFailed);
}

TEST_CASE("direct sum enumerator law on self-dual pairs") {
    const auto a = oracle::all_self_dual_codes(2, 1);
    const auto b = oracle::all_self_dual_codes(0, 2);
    for (const auto& p : a)
        for (const auto& q : b) {
            const GenMatrix g1 = seed_matrix(p, 2, 1), g2 = seed_matrix(q, 0, 2);
            const GenMatrix m = direct_sum(g1, g2);
            CHECK(weight_enumerator(span(m)) == product(weight_enumerator(span(g1)), weight_enumerator(span(g2))));
            CHECK(span(m).type().gamma == span(g1).type().gamma + span(g2).type().gamma);
            CHECK(span(m).type().delta == span(g1).type().delta + span(g2).type().delta);
        }
}

TEST_CASE("existence for every even alpha") {
    CHECK(oracle::span(exists_self_dual(2, 1)) == oracle::span(corpus::load("sd_2_1.code")));
    CHECK(span(exists_self_dual(0, 0)).size() == 1);
    CHECK(is_self_dual(exists_self_dual(6, 4)));
    for (int alpha = 0; alpha <= 6; alpha += 2)
        for (int beta = 0; beta <= 3; ++beta)
            CHECK(oracle::self_dual(alpha, beta, oracle::span(exists_self_dual(alpha, beta))));
    CHECK_THROWS_AS(exists_self_dual(3, 1), PreconditionFailed);
}

TEST_CASE("build-up examples") {
    const GenMatrix sd21 = corpus::load("sd_2_1.code");
    const GenMatrix d1 = build_up_1(sd21, parse_binary("1 0"), parse_ring("0"));
    CHECK(d1.alpha() == 4);
    CHECK(d1.beta() == 1);
    CHECK(oracle::self_dual(4, 1, oracle::span(d1)));
    CHECK(oracle::self_dual(4, 1, oracle::span(build_up_1(sd21, parse_binary("0 1"), parse_ring("u")))));
    CHECK_THROWS_AS(build_up_1(sd21, parse_binary("0 0"), parse_ring("0")), PreconditionFailed);
    CHECK_THROWS_AS(build_up_1(sd21, parse_binary("1 0"), parse_ring("1")), PreconditionFailed);

    const GenMatrix e2 = build_up_2(sd21, parse_ring("1"), parse_binary("0 0"), RingElem::one());
    CHECK(e2.alpha() == 2);
    CHECK(e2.beta() == 3);
    CHECK(oracle::self_dual(2, 3, oracle::span(e2)));
    CHECK(oracle::self_dual(2, 3, oracle::span(build_up_2(sd21, parse_ring("v"), parse_binary("1 1"),
                                                           RingElem::one_plus_u()))));
    CHECK_THROWS_AS(build_up_2(sd21, parse_ring("1"), parse_binary("0 0"), RingElem::u()), PreconditionFailed);

    const GenMatrix f = build_up_3(sd21, parse_binary("1 0"), parse_ring("1"), parse_binary("0 0"), parse_ring("0"),
                                   RingElem::one());
    CHECK(f.alpha() == 4);
    CHECK(f.beta() == 3);
    CHECK(oracle::self_dual(4, 3, oracle::span(f)));
    try {
        build_up_3(sd21, parse_binary("1 0"), parse_ring("1"), parse_binary("1 0"), parse_ring("0"), RingElem::one());
        FAIL("expected rejection");
    } catch (const PreconditionFailed& ex) {
        CHECK_FALSE(ex.reasons().empty());
    }
}

TEST_CASE("build-up variant 3 with odd <x,e> is non-separable") {
    // Seed (0 0 | ...) style: alpha = 4 so that e can be even and meet x oddly.
    const GenMatrix seed = exists_self_dual(4, 1);
    bool found = false;
    for (const auto& x : all_binary(4))
        for (const auto& e : all_binary(4))
            for (const auto& y : all_ring(1))
                for (const auto& a : all_ring(1)) {
                    const BuildUpInput in{3, x, y, e, a, RingElem::one()};
                    if (!build_up_violations(seed, in).empty() || !dot(x, e)) continue;
                    const GenMatrix out = build_up(seed, in);
                    CHECK_FALSE(is_separable(span(out)));
                    found = true;
                }
    CHECK(found);
}

TEST_CASE("exhaustive build-up sweeps") {
    std::vector<std::pair<int, int>> seeds{{2, 1}, {0, 2}, {2, 0}, {0, 1}};
    for (auto [alpha, beta] : seeds) {
        for (const auto& ws : oracle::all_self_dual_codes(alpha, beta)) {
            const GenMatrix g = seed_matrix(ws, alpha, beta);
            CAPTURE(emit_code_file(g));
            Sweep s;
            for (const auto& x : all_binary(alpha))
                for (const auto& y : all_ring(beta)) {
                    const BuildUpInput in{1, x, y, {}, {}, RingElem::one()};
                    if (!build_up_violations(g, in).empty()) {
                        CHECK_THROWS_AS(build_up(g, in), PreconditionFailed);
                        ++s.rejected;
                        continue;
                    }
                    ++s.valid;
                    check_output(g, build_up(g, in), std::nullopt);
                }
            for (const auto& x : all_binary(alpha))
                for (const auto& y : all_ring(beta))
                    for (auto t : kUnits) {
                        const BuildUpInput in{2, x, y, {}, {}, t};
                        if (!build_up_violations(g, in).empty()) continue;
                        ++s.valid;
                        check_output(g, build_up(g, in), std::nullopt);
                    }
            for (const auto& x : all_binary(alpha))
                for (const auto& e : all_binary(alpha))
                    for (const auto& y : all_ring(beta))
                        for (const auto& a : all_ring(beta))
                            for (auto t : kUnits) {
                                const BuildUpInput in{3, x, y, e, a, t};
                                if (!build_up_violations(g, in).empty()) continue;
                                ++s.valid;
                                const std::optional<bool> sep =
                                    dot(x, e) ? std::optional<bool>(false) : std::nullopt;
                                check_output(g, build_up(g, in), sep);
                            }
            if (alpha > 0 && beta > 0) CHECK(s.valid > 0);
        }
    }
}

TEST_CASE("theta bridge") {
    const GenMatrix sd21 = corpus::load("sd_2_1.code");
    const Z2Z4Matrix z = to_z2z4(sd21);
    CHECK(is_self_dual(z));
    CHECK(oracle::self_dual_z4(z));
    std::set<oracle::Z4Word> expected{{{0, 0}, {0}}, {{1, 1}, {0}}, {{0, 0}, {2}}, {{1, 1}, {2}}};
    CHECK(oracle::span_z4(z) == expected);
    CHECK(oracle::span(from_z2z4(z)) == oracle::span(sd21));

    CHECK_THROWS_AS(to_z2z4(corpus::load("c1.code")), HypothesisFailed);
    CHECK(to_z2z4(GenMatrix(2, 1)).rows.empty());

    for (auto r : kRingElements) CHECK(theta_inv(theta(MixedWord(BinaryVector(1, 1), RingVector(1, r.a(), r.b())))) ==
                                       MixedWord(BinaryVector(1, 1), RingVector(1, r.a(), r.b())));
}

TEST_CASE("theta transfers self-duality whenever the hypothesis holds") {
    int transferred = 0, refused = 0;
    for (auto [alpha, beta] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {4, 1}, {4, 2}, {0, 4}}) {
        for (const auto& ws : oracle::all_self_dual_codes(alpha, beta)) {
            const GenMatrix g = seed_matrix(ws, alpha, beta);
            bool hypothesis = true;
            for (const auto& v : ws)
                for (const auto& w : ws) {
                    int n11 = 0;
                    for (std::size_t j = 0; j < v.y.size(); ++j) n11 += (v.y[j] % 2) * (w.y[j] % 2);
                    hypothesis = hypothesis && n11 % 4 == 0;
                }
            if (!hypothesis) {
                CHECK_THROWS_AS(to_z2z4(g), HypothesisFailed);
                ++refused;
                continue;
            }
            const Z2Z4Matrix z = to_z2z4(g);
            CHECK(oracle::self_dual_z4(z));
            CHECK(oracle::span(from_z2z4(z)) == ws);
            ++transferred;
        }
    }
    CHECK(transferred > 0);
    CHECK(refused > 0);
}
