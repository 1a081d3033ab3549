#include "z2r/codes.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>

#include "f2_echelon.hpp"

namespace z2r {

using detail::Bits192;
using detail::Echelon;

namespace {

void check_shape(int alpha, int beta) {
    if (alpha < 0 || beta < 0 || alpha > kMaxCoordinates || beta > kMaxCoordinates)
        throw LengthMismatch("code shape (" + std::to_string(alpha) + "," + std::to_string(beta) +
                             ") outside supported range");
}

void check_row(const MixedWord& row, int alpha, int beta) {
    if (row.alpha() != alpha || row.beta() != beta)
        throw LengthMismatch("row of shape (" + std::to_string(row.alpha()) + "," + std::to_string(row.beta()) +
                             ") in a (" + std::to_string(alpha) + "," + std::to_string(beta) + ") matrix");
}

Echelon additive_echelon(std::span<const MixedWord> rows) {
    Echelon e;
    for (const auto& r : rows) {
        e.insert(detail::to_bits(r));
        e.insert(detail::to_bits(RingElem::u() * r));
    }
    return e;
}

constexpr std::size_t kNoLimit = std::numeric_limits<std::size_t>::max();

}  // namespace

std::string CodeType::to_string() const {
    return "(" + std::to_string(alpha) + "," + std::to_string(beta) + ";" + std::to_string(gamma) + "," +
           std::to_string(delta) + ";" + std::to_string(kappa) + ")";
}

GenMatrix::GenMatrix(int alpha, int beta) : alpha_(alpha), beta_(beta) { check_shape(alpha, beta); }

GenMatrix::GenMatrix(int alpha, int beta, std::vector<MixedWord> rows) : GenMatrix(alpha, beta) {
    for (const auto& r : rows) check_row(r, alpha, beta);
    rows_ = std::move(rows);
}

void GenMatrix::add_row(const MixedWord& row) {
    check_row(row, alpha_, beta_);
    rows_.push_back(row);
}

MixedWord permute(const MixedWord& w, std::span<const int> perm_x, std::span<const int> perm_y) {
    MixedWord out(w.alpha(), w.beta());
    for (int j = 0; j < w.alpha(); ++j) out.bin().set(j, w.bin()[perm_x[j]]);
    for (int j = 0; j < w.beta(); ++j) out.ring().set(j, w.ring()[perm_y[j]]);
    return out;
}

MixedWord unpermute(const MixedWord& w, std::span<const int> perm_x, std::span<const int> perm_y) {
    MixedWord out(w.alpha(), w.beta());
    for (int j = 0; j < w.alpha(); ++j) out.bin().set(perm_x[j], w.bin()[j]);
    for (int j = 0; j < w.beta(); ++j) out.ring().set(perm_y[j], w.ring()[j]);
    return out;
}

GenMatrix StandardForm::in_original_coordinates() const {
    GenMatrix out(matrix.alpha(), matrix.beta());
    for (const auto& r : matrix.rows()) out.add_row(unpermute(r, perm_x, perm_y));
    return out;
}

Code::Code(int alpha, int beta) : alpha_(alpha), beta_(beta), bin_{0}, ring_a_{0}, ring_b_{0} {
    check_shape(alpha, beta);
    type_ = {alpha, beta, 0, 0, 0};
}

Code Code::from_generators(int alpha, int beta, std::span<const MixedWord> rows, std::size_t limit) {
    Code c(alpha, beta);
    for (const auto& r : rows) check_row(r, alpha, beta);

    const Echelon e = additive_echelon(rows);
    const int k = e.rank();
    if (k >= 63 || (std::size_t{1} << k) > limit)
        throw SizeExceeded("span has 2^" + std::to_string(k) + " words, limit is " + std::to_string(limit));

    const auto& basis = e.rows();
    const std::size_t n = std::size_t{1} << k;
    std::vector<std::array<std::uint64_t, 3>> words(n);
    Bits192 cur;
    for (std::size_t i = 1; i < n; ++i) {
        cur ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
        words[i] = {cur.planes[2], cur.planes[0], cur.planes[1]};
    }
    std::sort(words.begin(), words.end());
    c.bin_.resize(n);
    c.ring_a_.resize(n);
    c.ring_b_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        c.bin_[i] = words[i][0];
        c.ring_a_[i] = words[i][1];
        c.ring_b_[i] = words[i][2];
    }

    int delta = 0;
    Echelon binary_of_b;
    for (const auto& r : basis) {
        const int lead = r.lead();
        const MixedWord w = detail::from_bits(r, alpha, beta);
        c.basis_.push_back(w);
        if (lead < 64) {
            ++delta;
            continue;
        }
        c.basis_b_.push_back(w);
        binary_of_b.insert(Bits192{{r.planes[2], 0, 0}});
        if (lead >= 128) c.basis_0_.push_back(w);
    }
    c.type_ = {alpha, beta, k - 2 * delta, delta, binary_of_b.rank()};
    return c;
}

MixedWord Code::word(std::size_t i) const {
    return {BinaryVector(alpha_, bin_[i]), RingVector(beta_, ring_a_[i], ring_b_[i])};
}

std::vector<MixedWord> Code::words() const {
    std::vector<MixedWord> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) out.push_back(word(i));
    return out;
}

bool Code::contains(const MixedWord& w) const {
    if (w.alpha() != alpha_ || w.beta() != beta_) return false;
    const std::array<std::uint64_t, 3> key{w.bin().bits(), w.ring().a_bits(), w.ring().b_bits()};
    std::size_t lo = 0;
    std::size_t hi = size();
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        const std::array<std::uint64_t, 3> m{bin_[mid], ring_a_[mid], ring_b_[mid]};
        if (m < key)
            lo = mid + 1;
        else
            hi = mid;
    }
    return lo < size() && bin_[lo] == key[0] && ring_a_[lo] == key[1] && ring_b_[lo] == key[2];
}

Code span(const GenMatrix& g, std::size_t limit) {
    return Code::from_generators(g.alpha(), g.beta(), g.rows(), limit);
}

GenMatrix dual(const GenMatrix& g) { return dual(standard_form(g)); }

CodeType dual_type(const CodeType& t) {
    CodeType d{t.alpha, t.beta, t.alpha + t.gamma - 2 * t.kappa, t.beta - t.gamma - t.delta + t.kappa,
               t.alpha - t.kappa};
    if (d.gamma < 0 || d.delta < 0 || d.kappa < 0 || t.kappa > t.gamma)
        throw PreconditionFailed("type " + t.to_string() + " is not the type of a code");
    return d;
}

Code punctured_x(const Code& c) {
    std::vector<MixedWord> gens;
    for (const auto& w : c.basis()) gens.emplace_back(w.bin(), RingVector(0));
    return Code::from_generators(c.alpha(), 0, gens, kNoLimit);
}

Code punctured_y(const Code& c) {
    std::vector<MixedWord> gens;
    for (const auto& w : c.basis()) gens.emplace_back(BinaryVector(0), w.ring());
    return Code::from_generators(0, c.beta(), gens, kNoLimit);
}

Code subcode_b(const Code& c) { return Code::from_generators(c.alpha(), c.beta(), c.basis_b(), kNoLimit); }

Code subcode_0(const Code& c) { return Code::from_generators(c.alpha(), c.beta(), c.basis_0(), kNoLimit); }

bool is_self_orthogonal(const GenMatrix& g) {
    const auto& rows = g.rows();
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i; j < rows.size(); ++j)
            if (inner_product(rows[i], rows[j]) != RingElem::zero()) return false;
    return true;
}

bool is_self_dual(const GenMatrix& g) {
    if (g.length() % 2 != 0) return false;
    return is_self_orthogonal(g) && 2 * additive_echelon(g.rows()).rank() == g.length();
}

bool is_self_orthogonal(const Code& c) {
    const auto& b = c.basis();
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i; j < b.size(); ++j)
            if (inner_product(b[i], b[j]) != RingElem::zero()) return false;
    return true;
}

bool is_self_dual(const Code& c) { return 2 * c.log2_size() == c.length() && is_self_orthogonal(c); }

bool is_separable(const Code& c) {
    // C is always contained in C_X x C_Y, so equal sizes mean equality.
    return punctured_x(c).log2_size() + punctured_y(c).log2_size() == c.log2_size();
}

std::vector<bool> SeparabilityReport::values() const {
    return {separable, x_self_orthogonal, x_self_dual, x_size_is_2_kappa, y_self_orthogonal, y_self_dual,
            y_size_is_2_beta};
}

bool SeparabilityReport::all_agree() const {
    const auto v = values();
    return std::all_of(v.begin(), v.end(), [&](bool b) { return b == v.front(); });
}

SeparabilityReport separability_report(const Code& c) {
    if (!is_self_dual(c)) throw PreconditionFailed("separability report requires a self-dual code");
    const Code x = punctured_x(c);
    const Code y = punctured_y(c);
    SeparabilityReport r;
    r.separable = is_separable(c);
    r.x_self_orthogonal = is_self_orthogonal(x);
    r.x_self_dual = is_self_dual(x);
    r.x_size_is_2_kappa = x.log2_size() == c.type().kappa;
    r.y_self_orthogonal = is_self_orthogonal(y);
    r.y_self_dual = is_self_dual(y);
    r.y_size_is_2_beta = y.log2_size() == c.beta();
    return r;
}

}  // namespace z2r
