#include "z2r/words.hpp"

#include <string>

namespace z2r {

namespace {

void check_length(int n) {
    if (n < 0 || n > kMaxCoordinates)
        throw LengthMismatch("block length " + std::to_string(n) + " outside [0, " +
                             std::to_string(kMaxCoordinates) + "]");
}

void check_same(int x, int y, const char* what) {
    if (x != y)
        throw LengthMismatch(std::string(what) + " length mismatch: " + std::to_string(x) + " vs " +
                             std::to_string(y));
}

bool parity(std::uint64_t x) { return (std::popcount(x) & 1) != 0; }

}  // namespace

BinaryVector::BinaryVector(int length, std::uint64_t bits) : length_(length), bits_(bits & low_mask(length)) {
    check_length(length);
}

void BinaryVector::set(int i, bool value) {
    const std::uint64_t m = std::uint64_t{1} << i;
    bits_ = value ? (bits_ | m) : (bits_ & ~m);
}

BinaryVector operator+(const BinaryVector& x, const BinaryVector& y) {
    check_same(x.length_, y.length_, "binary");
    return BinaryVector(x.length_, x.bits_ ^ y.bits_);
}

bool dot(const BinaryVector& x, const BinaryVector& y) {
    check_same(x.length(), y.length(), "binary");
    return parity(x.bits() & y.bits());
}

RingVector::RingVector(int length, std::uint64_t a, std::uint64_t b)
    : length_(length), a_(a & low_mask(length)), b_(b & low_mask(length)) {
    check_length(length);
}

void RingVector::set(int i, RingElem value) {
    const std::uint64_t m = std::uint64_t{1} << i;
    a_ = value.a() ? (a_ | m) : (a_ & ~m);
    b_ = value.b() ? (b_ | m) : (b_ & ~m);
}

RingVector operator+(const RingVector& x, const RingVector& y) {
    check_same(x.length_, y.length_, "ring");
    return RingVector(x.length_, x.a_ ^ y.a_, x.b_ ^ y.b_);
}

RingVector operator*(RingElem d, const RingVector& v) {
    // (a + bu)(p + qu) = ap + (aq + bp)u, applied planewise.
    const std::uint64_t a = d.a() ? v.a_ : 0;
    const std::uint64_t b = (d.a() ? v.b_ : 0) ^ (d.b() ? v.a_ : 0);
    return RingVector(v.length_, a, b);
}

RingElem dot(const RingVector& x, const RingVector& y) {
    check_same(x.length(), y.length(), "ring");
    const bool a = parity(x.a_bits() & y.a_bits());
    const bool b = parity((x.a_bits() & y.b_bits()) ^ (x.b_bits() & y.a_bits()));
    return {a, b};
}

MixedWord::MixedWord(int alpha, int beta) : bin_(alpha), ring_(beta) {}

MixedWord operator+(const MixedWord& x, const MixedWord& y) { return {x.bin_ + y.bin_, x.ring_ + y.ring_}; }

MixedWord ones_binary(int alpha, int beta) { return {BinaryVector(alpha, low_mask(alpha)), RingVector(beta)}; }

MixedWord all_u_ring(int alpha, int beta) { return {BinaryVector(alpha), RingVector(beta, 0, low_mask(beta))}; }

MixedWord scalar_mul(RingElem d, const MixedWord& v) {
    return {BinaryVector(v.alpha(), eta(d) ? v.bin().bits() : 0), d * v.ring()};
}

RingElem inner_product(const MixedWord& v, const MixedWord& w) {
    const RingElem binary = dot(v.bin(), w.bin()) ? RingElem::u() : RingElem::zero();
    return binary + dot(v.ring(), w.ring());
}

std::vector<std::uint8_t> gray_map(const MixedWord& v) {
    std::vector<std::uint8_t> out;
    out.reserve(static_cast<std::size_t>(v.length()));
    for (int i = 0; i < v.alpha(); ++i) out.push_back(v.bin()[i]);
    for (int j = 0; j < v.beta(); ++j) {
        const auto [p, q] = phi(v.ring()[j]);
        out.push_back(p);
        out.push_back(q);
    }
    return out;
}

WordStats stats(const MixedWord& v) {
    WordStats s;
    s.units = v.ring().unit_count();
    s.u_count = v.ring().u_count();
    s.bin_weight = v.bin().weight();
    s.lee_weight = s.bin_weight + s.units + 2 * s.u_count;
    return s;
}

PairStats pair_stats(const RingVector& w, const RingVector& y) {
    check_same(w.length(), y.length(), "ring");
    const std::uint64_t both_units = w.unit_mask() & y.unit_mask();
    const std::uint64_t differ = w.b_bits() ^ y.b_bits();
    PairStats p;
    p.n11 = std::popcount(both_units);
    p.n1u = std::popcount(w.unit_mask() & y.u_mask());
    p.nu1 = std::popcount(w.u_mask() & y.unit_mask());
    p.ns = std::popcount(both_units & ~differ);
    p.nd = std::popcount(both_units & differ);
    return p;
}

}  // namespace z2r
