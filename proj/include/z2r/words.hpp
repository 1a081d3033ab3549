#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

#include "z2r/errors.hpp"
#include "z2r/ring.hpp"

namespace z2r {

// Each block (binary and ring) is packed into one 64-bit word per plane.
inline constexpr int kMaxCoordinates = 64;

constexpr std::uint64_t low_mask(int n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

// Vector in Z2^n, bit i holds coordinate i.
class BinaryVector {
public:
    BinaryVector() = default;
    explicit BinaryVector(int length, std::uint64_t bits = 0);

    int length() const { return length_; }
    std::uint64_t bits() const { return bits_; }

    bool operator[](int i) const { return (bits_ >> i) & 1u; }
    void set(int i, bool value);

    int weight() const { return std::popcount(bits_); }
    bool is_zero() const { return bits_ == 0; }

    friend BinaryVector operator+(const BinaryVector& x, const BinaryVector& y);
    BinaryVector& operator+=(const BinaryVector& y) { return *this = *this + y; }

    friend bool operator==(const BinaryVector&, const BinaryVector&) = default;
    friend auto operator<=>(const BinaryVector&, const BinaryVector&) = default;

private:
    int length_ = 0;
    std::uint64_t bits_ = 0;
};

// Binary dot product reduced mod 2.
bool dot(const BinaryVector& x, const BinaryVector& y);

// Vector in R^n stored as two bit planes: plane a holds the constant
// coefficients, plane b the coefficients of u.
class RingVector {
public:
    RingVector() = default;
    explicit RingVector(int length, std::uint64_t a = 0, std::uint64_t b = 0);

    int length() const { return length_; }
    std::uint64_t a_bits() const { return a_; }
    std::uint64_t b_bits() const { return b_; }
    std::uint64_t unit_mask() const { return a_; }
    std::uint64_t u_mask() const { return ~a_ & b_; }

    RingElem operator[](int i) const { return {((a_ >> i) & 1u) != 0, ((b_ >> i) & 1u) != 0}; }
    void set(int i, RingElem value);

    int unit_count() const { return std::popcount(a_); }
    int u_count() const { return std::popcount(u_mask()); }
    int lee_weight() const { return std::popcount(b_) + std::popcount(a_ ^ b_); }
    bool is_zero() const { return (a_ | b_) == 0; }
    // True when every coordinate lies in {0, u}.
    bool in_u_ideal() const { return a_ == 0; }

    friend RingVector operator+(const RingVector& x, const RingVector& y);
    friend RingVector operator*(RingElem d, const RingVector& v);
    RingVector& operator+=(const RingVector& y) { return *this = *this + y; }

    friend bool operator==(const RingVector&, const RingVector&) = default;
    friend auto operator<=>(const RingVector&, const RingVector&) = default;

private:
    int length_ = 0;
    std::uint64_t a_ = 0;
    std::uint64_t b_ = 0;
};

// Sum of coordinate products in R.
RingElem dot(const RingVector& x, const RingVector& y);

// Element (v | w) of Z2^alpha x R^beta.
class MixedWord {
public:
    MixedWord() = default;
    MixedWord(int alpha, int beta);
    MixedWord(BinaryVector bin, RingVector ring) : bin_(bin), ring_(ring) {}

    int alpha() const { return bin_.length(); }
    int beta() const { return ring_.length(); }
    // Length of the Gray image, alpha + 2 beta.
    int length() const { return alpha() + 2 * beta(); }

    const BinaryVector& bin() const { return bin_; }
    const RingVector& ring() const { return ring_; }
    BinaryVector& bin() { return bin_; }
    RingVector& ring() { return ring_; }

    bool is_zero() const { return bin_.is_zero() && ring_.is_zero(); }

    friend MixedWord operator+(const MixedWord& x, const MixedWord& y);
    MixedWord& operator+=(const MixedWord& y) { return *this = *this + y; }

    friend bool operator==(const MixedWord&, const MixedWord&) = default;
    friend auto operator<=>(const MixedWord&, const MixedWord&) = default;

private:
    BinaryVector bin_;
    RingVector ring_;
};

// (1^alpha | 0), (0 | u^beta) and their sum; members of every self-dual code.
MixedWord ones_binary(int alpha, int beta);
MixedWord all_u_ring(int alpha, int beta);

// Scalar action d(v | w) = (eta(d) v | d w).
MixedWord scalar_mul(RingElem d, const MixedWord& v);
inline MixedWord operator*(RingElem d, const MixedWord& v) { return scalar_mul(d, v); }

// <(v|w),(x|y)> = u * (v.x mod 2) + w.y, valued in R.
RingElem inner_product(const MixedWord& v, const MixedWord& w);

// Binary image (v_1..v_alpha | phi(w_1) .. phi(w_beta)), one byte per bit.
std::vector<std::uint8_t> gray_map(const MixedWord& v);

inline int lee_weight(const MixedWord& v) { return v.bin().weight() + v.ring().lee_weight(); }

struct WordStats {
    int units = 0;       // N(w): coordinates equal to 1 or 1+u
    int u_count = 0;     // N_u(w)
    int bin_weight = 0;  // wt_H(v)
    int lee_weight = 0;  // wt_L(v|w) = bin_weight + units + 2 u_count

    friend bool operator==(const WordStats&, const WordStats&) = default;
};

WordStats stats(const MixedWord& v);

// Coordinate pair counts between two ring vectors.
//   n11: both units          n1u: w unit, y = u       nu1: w = u, y unit
//   ns:  both units, equal   nd:  one is 1, the other 1+u
// n11 == ns + nd always.
struct PairStats {
    int n11 = 0;
    int n1u = 0;
    int nu1 = 0;
    int ns = 0;
    int nd = 0;

    friend bool operator==(const PairStats&, const PairStats&) = default;
};

PairStats pair_stats(const RingVector& w, const RingVector& y);

}  // namespace z2r
