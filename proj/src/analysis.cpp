#include "z2r/analysis.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>

#include "z2r/kernels.hpp"

namespace z2r {

using boost::multiprecision::cpp_int;

WeightEnumerator::WeightEnumerator(int length, std::vector<std::uint64_t> a) : n(length), coeffs(std::move(a)) {
    if (n < 0 || coeffs.size() != static_cast<std::size_t>(n) + 1)
        throw LengthMismatch("enumerator of length " + std::to_string(n) + " needs " + std::to_string(n + 1) +
                             " coefficients");
}

std::uint64_t WeightEnumerator::total() const { return std::accumulate(coeffs.begin(), coeffs.end(), std::uint64_t{0}); }

std::vector<int> WeightEnumerator::nonzero_weights() const {
    std::vector<int> out;
    for (int i = 1; i <= n; ++i)
        if (coeffs[static_cast<std::size_t>(i)] != 0) out.push_back(i);
    return out;
}

namespace {

std::string monomial(char var, int power) {
    if (power == 0) return "";
    if (power == 1) return std::string(1, var);
    return std::string(1, var) + "^" + std::to_string(power);
}

}  // namespace

std::string WeightEnumerator::to_string() const {
    std::string out;
    for (int i = 0; i <= n; ++i) {
        const std::uint64_t a = coeffs[static_cast<std::size_t>(i)];
        if (a == 0) continue;
        if (!out.empty()) out += " + ";
        std::string term = monomial('X', n - i) + monomial('Y', i);
        if (a != 1 || term.empty()) term = std::to_string(a) + term;
        out += term;
    }
    return out.empty() ? "0" : out;
}

WeightEnumerator weight_enumerator(const Code& c) {
    std::vector<std::uint16_t> w(c.size());
    kernels::lee_weights(c.columns(), w);
    std::vector<std::uint64_t> a(static_cast<std::size_t>(c.length()) + 1, 0);
    for (auto x : w) ++a[x];
    return {c.length(), std::move(a)};
}

WeightEnumerator macwilliams(const WeightEnumerator& w, std::uint64_t size) {
    if (size == 0 || w.total() != size)
        throw PreconditionFailed("code size " + std::to_string(size) + " differs from coefficient sum " +
                                 std::to_string(w.total()));
    const int n = w.n;
    std::vector<std::vector<cpp_int>> binom(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        binom[i].assign(static_cast<std::size_t>(i) + 1, 1);
        for (int k = 1; k < i; ++k) binom[i][k] = binom[i - 1][k - 1] + binom[i - 1][k];
    }
    auto choose = [&](int a, int b) -> cpp_int { return (b < 0 || b > a) ? cpp_int(0) : binom[a][b]; };

    std::vector<std::uint64_t> out(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        // Coefficient of X^(n-j) Y^j in sum_i A_i (X+Y)^(n-i) (X-Y)^i.
        cpp_int sum = 0;
        for (int i = 0; i <= n; ++i) {
            const std::uint64_t a = w.coeffs[static_cast<std::size_t>(i)];
            if (a == 0) continue;
            cpp_int k = 0;
            for (int s = 0; s <= std::min(i, j); ++s) {
                const cpp_int t = choose(i, s) * choose(n - i, j - s);
                if (s % 2) k -= t;
                else k += t;
            }
            sum += cpp_int(a) * k;
        }
        if (sum < 0 || sum % size != 0)
            throw NonIntegral("coefficient of X^" + std::to_string(n - j) + "Y^" + std::to_string(j) + " is " +
                              sum.str() + "/" + std::to_string(size));
        const cpp_int q = sum / size;
        if (q > std::numeric_limits<std::uint64_t>::max()) throw NonIntegral("coefficient overflows 64 bits");
        out[static_cast<std::size_t>(j)] = static_cast<std::uint64_t>(q);
    }
    return {n, std::move(out)};
}

WeightEnumerator product(const WeightEnumerator& a, const WeightEnumerator& b) {
    std::vector<std::uint64_t> out(static_cast<std::size_t>(a.n + b.n) + 1, 0);
    for (int i = 0; i <= a.n; ++i)
        for (int j = 0; j <= b.n; ++j) out[i + j] += a.coeffs[i] * b.coeffs[j];
    return {a.n + b.n, std::move(out)};
}

std::string to_string(SelfDualType t) {
    switch (t) {
        case SelfDualType::Type0: return "Type0";
        case SelfDualType::TypeI: return "TypeI";
        case SelfDualType::TypeII: return "TypeII";
    }
    return "?";
}

SelfDualType classify(const Code& c) {
    if (!is_self_dual(c)) throw PreconditionFailed("classification is defined only for self-dual codes");
    const auto w = weight_enumerator(c);
    bool odd = false;
    bool singly_even = false;
    for (int i = 1; i <= w.n; ++i) {
        if (w.coeffs[i] == 0) continue;
        if (i % 2) odd = true;
        else if (i % 4) singly_even = true;
    }
    if (odd) return SelfDualType::Type0;
    return singly_even ? SelfDualType::TypeI : SelfDualType::TypeII;
}

BoundsReport check_min_param_bounds(const Code& c) {
    BoundsReport r;
    if (c.alpha() * c.beta() == 0 || !is_self_dual(c)) return r;
    r.applicable = true;
    r.type = classify(c);
    r.separable = is_separable(c);
    if (r.type == SelfDualType::TypeI && r.separable) {
        r.min_alpha = 2;
        r.min_beta = 1;
    } else {
        r.min_alpha = 4;
        r.min_beta = 2;
    }
    const std::string what = to_string(r.type) + (r.separable ? " separable" : " non-separable");
    if (c.alpha() < r.min_alpha)
        r.violations.push_back(what + " code with alpha=" + std::to_string(c.alpha()) + " < " +
                               std::to_string(r.min_alpha));
    if (c.beta() < r.min_beta)
        r.violations.push_back(what + " code with beta=" + std::to_string(c.beta()) + " < " +
                               std::to_string(r.min_beta));
    return r;
}

bool TwoWeightReport::all_pass() const {
    return preconditions_met() && two_weight && alpha_is_2beta && n_divisible_by_4 && distribution_ok &&
           dichotomy_ok && delta_at_most_1;
}

TwoWeightReport two_weight_check(const Code& c) {
    TwoWeightReport r;
    const int alpha = c.alpha();
    const int beta = c.beta();
    const int n = c.length();
    if (alpha * beta == 0) r.precondition_failures.push_back("alpha * beta must be nonzero");
    const MixedWord ones = ones_binary(alpha, beta);
    const MixedWord us = all_u_ring(alpha, beta);
    if (!c.contains(ones)) r.precondition_failures.push_back("(1..1|0..0) not in C");
    if (!c.contains(us)) r.precondition_failures.push_back("(0..0|u..u) not in C");

    const auto w = weight_enumerator(c);
    r.weights = w.nonzero_weights();
    r.two_weight = r.weights.size() == 2;
    if (!r.preconditions_met() || !r.two_weight) return r;

    r.alpha_is_2beta = alpha == 2 * beta;
    if (!r.alpha_is_2beta) r.failures.push_back("alpha != 2 beta");
    r.n_divisible_by_4 = n % 4 == 0;
    if (!r.n_divisible_by_4) r.failures.push_back("n not divisible by 4");

    std::vector<std::uint64_t> expect(static_cast<std::size_t>(n) + 1, 0);
    expect[0] = 1;
    expect[static_cast<std::size_t>(n)] += 1;
    if (n % 2 == 0) expect[static_cast<std::size_t>(n / 2)] += c.size() - 2;
    r.distribution_ok = n % 2 == 0 && w.coeffs == expect;
    if (!r.distribution_ok) r.failures.push_back("weight distribution is not {0:1, n/2:|C|-2, n:1}");

    r.dichotomy_ok = true;
    const MixedWord both = ones + us;
    const MixedWord zero(alpha, beta);
    for (std::size_t i = 0; i < c.size(); ++i) {
        const MixedWord x = c.word(i);
        if (x == zero || x == ones || x == us || x == both) continue;
        const WordStats s = stats(x);
        const bool quarter = 4 * s.bin_weight == n;
        const bool first = quarter && 4 * s.units == n && s.u_count == 0;
        const bool second = quarter && s.units == 0 && 8 * s.u_count == n;
        if (!first && !second) {
            r.dichotomy_ok = false;
            r.failures.push_back("word " + std::to_string(i) + " has N=" + std::to_string(s.units) +
                                 ", N_u=" + std::to_string(s.u_count) + ", wt_H=" + std::to_string(s.bin_weight));
            break;
        }
    }

    r.delta_at_most_1 = c.type().delta <= 1;
    if (!r.delta_at_most_1) r.failures.push_back("delta = " + std::to_string(c.type().delta) + " > 1");
    return r;
}

int min_lee_distance(const Code& c) {
    const auto w = weight_enumerator(c);
    const auto nz = w.nonzero_weights();
    if (nz.empty()) throw PreconditionFailed("minimum distance of the zero code is undefined");
    return nz.front();
}

}  // namespace z2r
