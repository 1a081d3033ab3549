#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "z2r/words.hpp"

namespace z2r::detail {

// A word viewed as a vector over F2 of 192 bits. planes[0] is the most
// significant plane, so echelon pivots land in planes[0] first.
struct Bits192 {
    std::array<std::uint64_t, 3> planes{};

    bool is_zero() const { return (planes[0] | planes[1] | planes[2]) == 0; }

    // Leading (highest) set bit as plane * 64 + (63 - bit), smaller is more
    // significant; 192 for the zero vector.
    int lead() const {
        for (int p = 0; p < 3; ++p)
            if (planes[p]) return p * 64 + std::countl_zero(planes[p]);
        return 192;
    }

    bool test(int lead_pos) const { return (planes[lead_pos / 64] >> (63 - lead_pos % 64)) & 1u; }

    Bits192& operator^=(const Bits192& o) {
        for (int p = 0; p < 3; ++p) planes[p] ^= o.planes[p];
        return *this;
    }

    friend bool operator==(const Bits192&, const Bits192&) = default;
};

// Plane order (a, b, bin): pivots in the a-plane count free generators,
// rows with a == 0 span C_b, rows with a == b == 0 span C_0.
inline Bits192 to_bits(const MixedWord& w) { return {{w.ring().a_bits(), w.ring().b_bits(), w.bin().bits()}}; }

inline MixedWord from_bits(const Bits192& v, int alpha, int beta) {
    return {BinaryVector(alpha, v.planes[2]), RingVector(beta, v.planes[0], v.planes[1])};
}

// Row echelon basis kept sorted by pivot, most significant first.
class Echelon {
public:
    Bits192 reduce(Bits192 v) const {
        for (const auto& r : rows_) {
            if (v.test(r.lead())) v ^= r;
        }
        return v;
    }

    // Returns true when v was independent of the current rows.
    bool insert(const Bits192& v) {
        const Bits192 r = reduce(v);
        if (r.is_zero()) return false;
        const int lead = r.lead();
        auto pos = std::find_if(rows_.begin(), rows_.end(), [&](const Bits192& x) { return x.lead() > lead; });
        rows_.insert(pos, r);
        return true;
    }

    bool contains(const Bits192& v) const { return reduce(v).is_zero(); }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<Bits192>& rows() const { return rows_; }

private:
    std::vector<Bits192> rows_;
};

}  // namespace z2r::detail
