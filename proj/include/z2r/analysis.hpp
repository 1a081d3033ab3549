#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "z2r/codes.hpp"

namespace z2r {

// Lee weight enumerator: coeffs[i] = number of words of Lee weight i,
// i = 0..n, read as the homogeneous polynomial sum A_i X^(n-i) Y^i.
struct WeightEnumerator {
    int n = 0;
    std::vector<std::uint64_t> coeffs;

    WeightEnumerator() = default;
    WeightEnumerator(int length, std::vector<std::uint64_t> a);

    std::uint64_t total() const;
    // Nonzero weights with a nonzero coefficient.
    std::vector<int> nonzero_weights() const;
    // "X^8 + 14X^4Y^4 + Y^8"
    std::string to_string() const;

    friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;
};

WeightEnumerator weight_enumerator(const Code& c);

// (1/size) W(X+Y, X-Y), evaluated exactly. Throws NonIntegral if a
// coefficient comes out negative or fractional, and PreconditionFailed if
// size differs from the coefficient sum.
WeightEnumerator macwilliams(const WeightEnumerator& w, std::uint64_t size);

// Enumerator of a direct product: the polynomial product.
WeightEnumerator product(const WeightEnumerator& a, const WeightEnumerator& b);

enum class SelfDualType { Type0, TypeI, TypeII };

std::string to_string(SelfDualType t);

// Throws PreconditionFailed unless c is self-dual.
SelfDualType classify(const Code& c);

struct BoundsReport {
    bool applicable = false;  // false when alpha * beta == 0 or C is not self-dual
    SelfDualType type = SelfDualType::TypeI;
    bool separable = false;
    int min_alpha = 0;
    int min_beta = 0;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

// Lower bounds on alpha and beta for self-dual codes with alpha * beta > 0:
// Type I separable needs (2,1), Type I non-separable and Type II need (4,2).
BoundsReport check_min_param_bounds(const Code& c);

struct TwoWeightReport {
    std::vector<std::string> precondition_failures;
    bool two_weight = false;
    std::vector<int> weights;  // distinct nonzero Lee weights
    bool alpha_is_2beta = false;
    bool n_divisible_by_4 = false;
    bool distribution_ok = false;
    bool dichotomy_ok = false;
    bool delta_at_most_1 = false;
    std::vector<std::string> failures;

    bool preconditions_met() const { return precondition_failures.empty(); }
    // Preconditions hold, the code is two-weight and every structural check passes.
    bool all_pass() const;
};

// Structure checks for codes containing (1..1|0..0) and (0..0|u..u) with two
// nonzero Lee weights. Precondition failures are recorded, not thrown.
TwoWeightReport two_weight_check(const Code& c);

// Minimum nonzero Lee weight, equal to the minimum Lee (Gray image Hamming)
// distance. Throws PreconditionFailed on the zero code.
int min_lee_distance(const Code& c);

}  // namespace z2r
