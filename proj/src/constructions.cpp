#include "z2r/constructions.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "z2r/kernels.hpp"

namespace z2r {

namespace {

BinaryVector concat(const BinaryVector& x, const BinaryVector& y) {
    return BinaryVector(x.length() + y.length(), x.bits() | (y.bits() << (x.length() % 64)));
}

RingVector concat(const RingVector& x, const RingVector& y) {
    const int s = x.length() % 64;
    return RingVector(x.length() + y.length(), x.a_bits() | (y.a_bits() << s), x.b_bits() | (y.b_bits() << s));
}

// Two new binary coordinates (h, h) in front of v.
BinaryVector prepend_pair(const BinaryVector& v, bool h0, bool h1) {
    return BinaryVector(v.length() + 2, (v.bits() << 2) | std::uint64_t(h0) | (std::uint64_t(h1) << 1));
}

RingVector prepend_pair(const RingVector& w, RingElem c0, RingElem c1) {
    return RingVector(w.length() + 2, (w.a_bits() << 2) | std::uint64_t(c0.a()) | (std::uint64_t(c1.a()) << 1),
                      (w.b_bits() << 2) | std::uint64_t(c0.b()) | (std::uint64_t(c1.b()) << 1));
}

void require_self_dual(const GenMatrix& g, const char* which) {
    if (!is_self_dual(g)) throw PreconditionFailed(std::string(which) + " does not generate a self-dual code");
}

}  // namespace

GenMatrix direct_sum(const GenMatrix& g1, const GenMatrix& g2) {
    require_self_dual(g1, "first matrix");
    require_self_dual(g2, "second matrix");
    const int alpha = g1.alpha() + g2.alpha();
    const int beta = g1.beta() + g2.beta();
    GenMatrix out(alpha, beta);
    const BinaryVector zx1(g1.alpha()), zx2(g2.alpha());
    const RingVector zy1(g1.beta()), zy2(g2.beta());
    for (const auto& r : g1.rows()) out.add_row({concat(r.bin(), zx2), concat(r.ring(), zy2)});
    for (const auto& r : g2.rows()) out.add_row({concat(zx1, r.bin()), concat(zy1, r.ring())});
    return out;
}

GenMatrix exists_self_dual(int alpha, int beta) {
    if (alpha < 0 || beta < 0 || alpha % 2 != 0)
        throw PreconditionFailed("self-dual codes need even alpha >= 0 and beta >= 0, got (" + std::to_string(alpha) +
                                 "," + std::to_string(beta) + ")");
    GenMatrix out(alpha, beta);
    for (int i = 0; i < alpha / 2; ++i) {
        MixedWord w(alpha, beta);
        w.bin().set(2 * i, true);
        w.bin().set(2 * i + 1, true);
        out.add_row(w);
    }
    for (int j = 0; j < beta; ++j) {
        MixedWord w(alpha, beta);
        w.ring().set(j, RingElem::u());
        out.add_row(w);
    }
    return out;
}

Z2Z4Word::Z2Z4Word(int alpha, int beta) : Z2Z4Word(BinaryVector(alpha), beta, 0, 0) {}

Z2Z4Word::Z2Z4Word(BinaryVector bin, int beta, std::uint64_t lo, std::uint64_t hi) : bin_(bin), beta_(beta) {
    if (beta < 0 || beta > kMaxCoordinates) throw LengthMismatch("Z4 length " + std::to_string(beta) + " unsupported");
    lo_ = lo & low_mask(beta);
    hi_ = hi & low_mask(beta);
}

void Z2Z4Word::set(int i, Z4Elem z) {
    if (i < 0 || i >= beta_) throw LengthMismatch("Z4 coordinate " + std::to_string(i) + " out of range");
    const std::uint64_t m = std::uint64_t{1} << i;
    lo_ = (z.value() & 1) ? (lo_ | m) : (lo_ & ~m);
    hi_ = (z.value() & 2) ? (hi_ | m) : (hi_ & ~m);
}

Z2Z4Word operator+(const Z2Z4Word& x, const Z2Z4Word& y) {
    if (x.beta_ != y.beta_) throw LengthMismatch("Z4 lengths differ");
    return {x.bin_ + y.bin_, x.beta_, x.lo_ ^ y.lo_, x.hi_ ^ y.hi_ ^ (x.lo_ & y.lo_)};
}

Z2Z4Word operator*(Z4Elem d, const Z2Z4Word& x) {
    switch (d.value()) {
        case 1: return x;
        case 2: return {BinaryVector(x.alpha()), x.beta_, 0, x.lo_};
        case 3: return {x.bin_, x.beta_, x.lo_, x.hi_ ^ x.lo_};
        default: return Z2Z4Word(x.alpha(), x.beta_);
    }
}

Z4Elem inner_product(const Z2Z4Word& x, const Z2Z4Word& y) {
    if (x.alpha() != y.alpha() || x.beta() != y.beta()) throw LengthMismatch("Z2Z4 word shapes differ");
    const int sum = std::popcount(x.lo() & y.lo()) +
                    2 * (int(dot(x.bin(), y.bin())) + std::popcount(x.lo() & y.hi()) + std::popcount(x.hi() & y.lo()));
    return Z4Elem(sum);
}

std::vector<Z2Z4Word> span_z2z4(const Z2Z4Matrix& m, std::size_t limit) {
    std::set<Z2Z4Word> words{Z2Z4Word(m.alpha, m.beta)};
    for (const auto& r : m.rows) {
        if (r.alpha() != m.alpha || r.beta() != m.beta) throw LengthMismatch("row shape differs from matrix");
        std::vector<Z2Z4Word> add;
        for (const auto& s : words) {
            Z2Z4Word t = s;
            for (int k = 1; k < 4; ++k) {
                t = t + r;
                add.push_back(t);
            }
        }
        words.insert(add.begin(), add.end());
        if (words.size() > limit)
            throw SizeExceeded("Z2Z4 span exceeds limit of " + std::to_string(limit) + " words");
    }
    return {words.begin(), words.end()};
}

bool is_self_orthogonal(const Z2Z4Matrix& m) {
    for (std::size_t i = 0; i < m.rows.size(); ++i)
        for (std::size_t j = i; j < m.rows.size(); ++j)
            if (inner_product(m.rows[i], m.rows[j]).value() != 0) return false;
    return true;
}

bool is_self_dual(const Z2Z4Matrix& m, std::size_t limit) {
    const int n = m.alpha + 2 * m.beta;
    if (n % 2 != 0 || !is_self_orthogonal(m)) return false;
    return span_z2z4(m, limit).size() == (std::size_t{1} << (n / 2));
}

Z2Z4Word theta(const MixedWord& w) { return {w.bin(), w.beta(), w.ring().a_bits(), w.ring().b_bits()}; }

MixedWord theta_inv(const Z2Z4Word& w) { return {w.bin(), RingVector(w.beta(), w.lo(), w.hi())}; }

Z2Z4Matrix to_z2z4(const GenMatrix& g, std::size_t limit) {
    const Code c = span(g, limit);
    std::vector<std::uint16_t> overlaps(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const MixedWord w = c.word(i);
        kernels::unit_overlaps(c.columns(), w, overlaps);
        for (std::size_t j = 0; j < c.size(); ++j)
            if (overlaps[j] % 4 != 0)
                throw HypothesisFailed("N11 = " + std::to_string(overlaps[j]) + " is not divisible by 4 for codewords " +
                                       std::to_string(i) + " and " + std::to_string(j));
    }
    Z2Z4Matrix out{g.alpha(), g.beta(), {}};
    for (const auto& r : g.rows()) out.rows.push_back(theta(r));
    return out;
}

GenMatrix from_z2z4(const Z2Z4Matrix& m, std::size_t limit) {
    const auto words = span_z2z4(m, limit);
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i; j < words.size(); ++j) {
            const int n11 = std::popcount(words[i].unit_mask() & words[j].unit_mask());
            if (n11 % 4 != 0)
                throw HypothesisFailed("N11 = " + std::to_string(n11) + " is not divisible by 4 for codewords " +
                                       std::to_string(i) + " and " + std::to_string(j));
        }
    GenMatrix out(m.alpha, m.beta);
    for (const auto& r : m.rows) out.add_row(theta_inv(r));
    return out;
}

std::vector<std::string> build_up_violations(const GenMatrix& g, const BuildUpInput& in) {
    std::vector<std::string> v;
    if (in.variant < 1 || in.variant > 3) return {"variant must be 1, 2 or 3"};
    const bool uses_e = in.variant == 3;
    const bool uses_a = in.variant == 3;
    const bool uses_t = in.variant != 1;
    if (in.x.length() != g.alpha()) v.push_back("x must have length alpha=" + std::to_string(g.alpha()));
    if (in.y.length() != g.beta()) v.push_back("y must have length beta=" + std::to_string(g.beta()));
    if (uses_e && in.e.length() != g.alpha()) v.push_back("e must have length alpha=" + std::to_string(g.alpha()));
    if (uses_a && in.a.length() != g.beta()) v.push_back("a must have length beta=" + std::to_string(g.beta()));
    if (!v.empty()) return v;
    if ((in.variant != 2 && g.alpha() + 2 > kMaxCoordinates) || (in.variant != 1 && g.beta() + 2 > kMaxCoordinates))
        return {"extended code exceeds " + std::to_string(kMaxCoordinates) + " coordinates"};

    if (!is_self_dual(g)) v.push_back("input matrix does not generate a self-dual code");
    auto all_rows = [&](auto pred) {
        return std::all_of(g.rows().begin(), g.rows().end(), pred);
    };

    if (in.variant == 1 || in.variant == 3) {
        if (in.x.weight() % 2 == 0) v.push_back("wt_H(x) must be odd");
    } else {
        if (in.x.weight() % 2 != 0) v.push_back("wt_H(x) must be even");
        if (!all_rows([&](const MixedWord& r) { return !dot(r.bin(), in.x); }))
            v.push_back("x must be orthogonal to every binary row part");
    }
    if (in.variant == 1) {
        if (!in.y.in_u_ideal()) v.push_back("y must lie in {0,u}^beta");
        if (!all_rows([&](const MixedWord& r) { return dot(r.ring(), in.y) == RingElem::zero(); }))
            v.push_back("y must be orthogonal to every ring row part");
    } else {
        if (in.y.lee_weight() % 2 == 0) v.push_back("wt_L(y) must be odd");
    }
    if (uses_e) {
        if (in.e.weight() % 2 != 0) v.push_back("wt_H(e) must be even");
        if (!all_rows([&](const MixedWord& r) { return !dot(r.bin(), in.e); }))
            v.push_back("e must be orthogonal to every binary row part");
    }
    if (uses_a) {
        if (!in.a.in_u_ideal()) v.push_back("a must lie in {0,u}^beta");
        if (!all_rows([&](const MixedWord& r) { return dot(r.ring(), in.a) == RingElem::zero(); }))
            v.push_back("a must be orthogonal to every ring row part");
        if (inner_product(MixedWord(in.x, in.a), MixedWord(in.e, in.y)) != RingElem::zero())
            v.push_back("<(x|a),(e|y)> must be 0");
    }
    if (uses_t && !is_unit(in.t)) v.push_back("t must be a unit");
    return v;
}

GenMatrix build_up(const GenMatrix& g, const BuildUpInput& in) {
    if (auto v = build_up_violations(g, in); !v.empty()) throw PreconditionFailed(std::move(v));
    const bool new_bin = in.variant != 2;
    const bool new_ring = in.variant != 1;
    GenMatrix out(g.alpha() + (new_bin ? 2 : 0), g.beta() + (new_ring ? 2 : 0));

    if (in.variant == 1) {
        out.add_row({prepend_pair(in.x, true, false), in.y});
    } else if (in.variant == 2) {
        out.add_row({in.x, prepend_pair(in.y, RingElem::one(), RingElem::zero())});
    } else {
        out.add_row({prepend_pair(in.x, true, false), prepend_pair(in.a, RingElem::zero(), RingElem::zero())});
        out.add_row({prepend_pair(in.e, false, false), prepend_pair(in.y, RingElem::one(), RingElem::zero())});
    }
    for (const auto& r : g.rows()) {
        BinaryVector bin = r.bin();
        RingVector ring = r.ring();
        if (new_bin) {
            const bool h = dot(r.bin(), in.x);
            bin = prepend_pair(bin, h, h);
        }
        if (new_ring) {
            const RingElem s = dot(r.ring(), in.y);
            ring = prepend_pair(ring, s, in.t * s);
        }
        out.add_row({bin, ring});
    }
    return out;
}

GenMatrix build_up_1(const GenMatrix& g, const BinaryVector& x, const RingVector& y) {
    return build_up(g, {1, x, y, BinaryVector(), RingVector(), RingElem::one()});
}

GenMatrix build_up_2(const GenMatrix& g, const RingVector& y, const BinaryVector& x, RingElem t) {
    return build_up(g, {2, x, y, BinaryVector(), RingVector(), t});
}

GenMatrix build_up_3(const GenMatrix& g, const BinaryVector& x, const RingVector& y, const BinaryVector& e,
                     const RingVector& a, RingElem t) {
    return build_up(g, {3, x, y, e, a, t});
}

}  // namespace z2r
