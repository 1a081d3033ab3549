#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "z2r/errors.hpp"

namespace z2r {

// Element a + b*u of R = F2[u]/(u^2). Encoded in two bits as a | (b << 1),
// so the four values 0, 1, u, 1+u have codes 0, 1, 2, 3.
class RingElem {
public:
    constexpr RingElem() = default;
    constexpr RingElem(bool a, bool b) : code_(static_cast<std::uint8_t>(a | (b << 1))) {}

    static constexpr RingElem zero() { return {false, false}; }
    static constexpr RingElem one() { return {true, false}; }
    static constexpr RingElem u() { return {false, true}; }
    static constexpr RingElem one_plus_u() { return {true, true}; }

    static constexpr RingElem from_code(std::uint8_t code) { return {(code & 1u) != 0, (code & 2u) != 0}; }

    // Constant coefficient.
    constexpr bool a() const { return (code_ & 1u) != 0; }
    // Coefficient of u.
    constexpr bool b() const { return (code_ & 2u) != 0; }
    constexpr std::uint8_t code() const { return code_; }

    friend constexpr RingElem operator+(RingElem x, RingElem y) {
        return from_code(static_cast<std::uint8_t>(x.code_ ^ y.code_));
    }
    friend constexpr RingElem operator*(RingElem x, RingElem y) {
        return {x.a() && y.a(), (x.a() && y.b()) != (x.b() && y.a())};
    }
    RingElem& operator+=(RingElem y) { return *this = *this + y; }
    RingElem& operator*=(RingElem y) { return *this = *this * y; }

    friend constexpr bool operator==(RingElem, RingElem) = default;

private:
    std::uint8_t code_ = 0;
};

constexpr RingElem add(RingElem x, RingElem y) { return x + y; }
constexpr RingElem mul(RingElem x, RingElem y) { return x * y; }

// The reduction R -> Z2, a + bu -> a.
constexpr bool eta(RingElem x) { return x.a(); }

// Gray image of one coordinate: a + bu -> (b, a + b).
constexpr std::pair<bool, bool> phi(RingElem x) { return {x.b(), x.a() != x.b()}; }

constexpr int lee_weight(RingElem x) {
    const auto [p, q] = phi(x);
    return int(p) + int(q);
}

constexpr bool is_unit(RingElem x) { return x.a(); }

// Units of R are self-inverse.
constexpr RingElem inverse(RingElem x) {
    if (!is_unit(x)) throw PreconditionFailed("ring element is not a unit");
    return x;
}

class Z4Elem {
public:
    constexpr Z4Elem() = default;
    constexpr explicit Z4Elem(int v) : v_(static_cast<std::uint8_t>(((v % 4) + 4) % 4)) {}

    constexpr int value() const { return v_; }

    friend constexpr Z4Elem operator+(Z4Elem x, Z4Elem y) { return Z4Elem(x.v_ + y.v_); }
    friend constexpr Z4Elem operator*(Z4Elem x, Z4Elem y) { return Z4Elem(x.v_ * y.v_); }
    friend constexpr bool operator==(Z4Elem, Z4Elem) = default;

private:
    std::uint8_t v_ = 0;
};

// Bijection R -> Z4 with 0,1,u,1+u -> 0,1,2,3. Not additive.
constexpr Z4Elem theta(RingElem x) { return Z4Elem(int(x.a()) + 2 * int(x.b())); }
constexpr RingElem theta_inv(Z4Elem z) { return {(z.value() & 1) != 0, (z.value() & 2) != 0}; }

// Text symbols: 0, 1, u, and v for 1+u.
constexpr char symbol(RingElem x) {
    constexpr char table[4] = {'0', '1', 'u', 'v'};
    return table[x.code()];
}

constexpr std::optional<RingElem> ring_from_symbol(char c) {
    switch (c) {
        case '0': return RingElem::zero();
        case '1': return RingElem::one();
        case 'u': return RingElem::u();
        case 'v': return RingElem::one_plus_u();
        default: return std::nullopt;
    }
}

inline constexpr RingElem kRingElements[4] = {RingElem::zero(), RingElem::one(), RingElem::u(),
                                              RingElem::one_plus_u()};
inline constexpr RingElem kUnits[2] = {RingElem::one(), RingElem::one_plus_u()};

}  // namespace z2r
