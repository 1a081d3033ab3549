#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "z2r/codes.hpp"

namespace z2r {

// Block-diagonal sum: binary parts and ring parts are each concatenated.
// Both inputs must generate self-dual codes.
GenMatrix direct_sum(const GenMatrix& g1, const GenMatrix& g2);

// A self-dual code for any even alpha: alpha/2 copies of (1 1|) and beta
// copies of (|u). Throws PreconditionFailed for odd or negative alpha.
GenMatrix exists_self_dual(int alpha, int beta);

// Element of Z2^alpha x Z4^beta. Quaternary coordinates are bit-sliced:
// value = lo + 2 hi.
class Z2Z4Word {
public:
    Z2Z4Word() = default;
    Z2Z4Word(int alpha, int beta);
    Z2Z4Word(BinaryVector bin, int beta, std::uint64_t lo, std::uint64_t hi);

    int alpha() const { return bin_.length(); }
    int beta() const { return beta_; }

    const BinaryVector& bin() const { return bin_; }
    BinaryVector& bin() { return bin_; }
    std::uint64_t lo() const { return lo_; }
    std::uint64_t hi() const { return hi_; }

    Z4Elem operator[](int i) const { return Z4Elem(int((lo_ >> i) & 1u) + 2 * int((hi_ >> i) & 1u)); }
    void set(int i, Z4Elem z);

    bool is_zero() const { return bin_.is_zero() && (lo_ | hi_) == 0; }
    // Coordinates equal to 1 or 3.
    std::uint64_t unit_mask() const { return lo_; }

    friend Z2Z4Word operator+(const Z2Z4Word& x, const Z2Z4Word& y);
    // Scalar action of Z4: the binary part is multiplied by the scalar mod 2.
    friend Z2Z4Word operator*(Z4Elem d, const Z2Z4Word& x);

    friend bool operator==(const Z2Z4Word&, const Z2Z4Word&) = default;
    friend auto operator<=>(const Z2Z4Word&, const Z2Z4Word&) = default;

private:
    BinaryVector bin_;
    int beta_ = 0;
    std::uint64_t lo_ = 0;
    std::uint64_t hi_ = 0;
};

// 2 (v.x mod 2) + w.y, valued in Z4.
Z4Elem inner_product(const Z2Z4Word& x, const Z2Z4Word& y);

struct Z2Z4Matrix {
    int alpha = 0;
    int beta = 0;
    std::vector<Z2Z4Word> rows;

    friend bool operator==(const Z2Z4Matrix&, const Z2Z4Matrix&) = default;
};

// All Z4-linear combinations of the rows, sorted. Throws SizeExceeded past limit.
std::vector<Z2Z4Word> span_z2z4(const Z2Z4Matrix& m, std::size_t limit = kDefaultSpanLimit);

bool is_self_orthogonal(const Z2Z4Matrix& m);
bool is_self_dual(const Z2Z4Matrix& m, std::size_t limit = kDefaultSpanLimit);

Z2Z4Word theta(const MixedWord& w);
MixedWord theta_inv(const Z2Z4Word& w);

// Rowwise theta. Enumerates the span of g and throws HypothesisFailed unless
// N11(w, y) is divisible by 4 for every pair of codewords.
Z2Z4Matrix to_z2z4(const GenMatrix& g, std::size_t limit = kDefaultSpanLimit);
// Rowwise inverse theta, under the same hypothesis on the Z4 span.
GenMatrix from_z2z4(const Z2Z4Matrix& m, std::size_t limit = kDefaultSpanLimit);

// Auxiliary vectors for the building-up constructions.
//   variant 1: x (odd weight), y in {0,u}^beta orthogonal to every ring row part
//   variant 2: y (odd Lee weight), x (even weight, orthogonal to every binary
//              row part), unit t
//   variant 3: all of the above plus e (even weight, orthogonal to every
//              binary row part) and a in {0,u}^beta (orthogonal to every ring
//              row part) with <(x|a),(e|y)> = 0
struct BuildUpInput {
    int variant = 1;
    BinaryVector x;
    RingVector y;
    BinaryVector e;
    RingVector a;
    RingElem t = RingElem::one();
};

// Variant 1, alpha + 2:  top row (1 0 x | y); row (g|r) becomes (h h g | r)
// with h = g.x mod 2.
GenMatrix build_up_1(const GenMatrix& g, const BinaryVector& x, const RingVector& y);
// Variant 2, beta + 2:   top row (x | 1 0 y); row (g|r) becomes (g | s ts r)
// with s = r.y in R.
GenMatrix build_up_2(const GenMatrix& g, const RingVector& y, const BinaryVector& x, RingElem t);
// Variant 3, alpha + 2 and beta + 2: rows (1 0 x | 0 0 a), (0 0 e | 1 0 y);
// row (g|r) becomes (h h g | s ts r).
GenMatrix build_up_3(const GenMatrix& g, const BinaryVector& x, const RingVector& y, const BinaryVector& e,
                     const RingVector& a, RingElem t);
GenMatrix build_up(const GenMatrix& g, const BuildUpInput& in);

// The precondition failures build_up would report, empty when the input is valid.
std::vector<std::string> build_up_violations(const GenMatrix& g, const BuildUpInput& in);

}  // namespace z2r
