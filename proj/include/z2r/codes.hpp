#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "z2r/kernels.hpp"
#include "z2r/words.hpp"

namespace z2r {

// (alpha, beta; gamma, delta; kappa). |C| = 2^(gamma + 2 delta); delta counts
// generators of order four, gamma those of order two, kappa = dim (C_b)_X.
struct CodeType {
    int alpha = 0;
    int beta = 0;
    int gamma = 0;
    int delta = 0;
    int kappa = 0;

    int log2_size() const { return gamma + 2 * delta; }
    std::string to_string() const;

    friend bool operator==(const CodeType&, const CodeType&) = default;
};

// Ordered generator rows sharing one (alpha, beta). Rows may be dependent.
class GenMatrix {
public:
    GenMatrix() = default;
    GenMatrix(int alpha, int beta);
    GenMatrix(int alpha, int beta, std::vector<MixedWord> rows);

    int alpha() const { return alpha_; }
    int beta() const { return beta_; }
    int length() const { return alpha_ + 2 * beta_; }

    const std::vector<MixedWord>& rows() const { return rows_; }
    std::size_t size() const { return rows_.size(); }
    bool empty() const { return rows_.empty(); }
    const MixedWord& operator[](std::size_t i) const { return rows_[i]; }

    void add_row(const MixedWord& row);

    friend bool operator==(const GenMatrix&, const GenMatrix&) = default;

private:
    int alpha_ = 0;
    int beta_ = 0;
    std::vector<MixedWord> rows_;
};

// Column permutations never mix the binary and ring blocks. Column j of a
// permuted word is column perm[j] of the original.
MixedWord permute(const MixedWord& w, std::span<const int> perm_x, std::span<const int> perm_y);
MixedWord unpermute(const MixedWord& w, std::span<const int> perm_x, std::span<const int> perm_y);

// Generator matrix in the block template
//
//   [ I_k   A1 | uT       0         0   ]   kappa rows
//   [ 0     0  | uD       uI_(g-k)  0   ]   gamma - kappa rows
//   [ 0     S  | B1+uB2   A         I_d ]   delta rows
//
// expressed in permuted coordinates.
struct StandardForm {
    GenMatrix matrix;
    CodeType type;
    std::vector<int> perm_x;
    std::vector<int> perm_y;

    // The rows mapped back to the caller's column order.
    GenMatrix in_original_coordinates() const;
};

// An R-submodule of Z2^alpha x R^beta with every word enumerated. Words are
// stored as sorted bit-plane columns so kernels can stream them.
class Code {
public:
    Code() = default;
    // The zero code.
    Code(int alpha, int beta);

    // Submodule generated by rows under the scalar action. Throws
    // SizeExceeded if it would hold more than limit words.
    static Code from_generators(int alpha, int beta, std::span<const MixedWord> rows, std::size_t limit);

    int alpha() const { return alpha_; }
    int beta() const { return beta_; }
    int length() const { return alpha_ + 2 * beta_; }
    std::size_t size() const { return bin_.size(); }
    int log2_size() const { return static_cast<int>(basis_.size()); }

    // Type computed from an additive basis, independent of standard_form.
    const CodeType& type() const { return type_; }

    MixedWord word(std::size_t i) const;
    std::vector<MixedWord> words() const;
    kernels::WordColumns columns() const { return {bin_, ring_a_, ring_b_}; }
    bool contains(const MixedWord& w) const;

    // Basis of the additive group (over F2).
    const std::vector<MixedWord>& basis() const { return basis_; }
    // Additive bases of C_b (ring part in {0,u}^beta) and C_0 (ring part zero).
    const std::vector<MixedWord>& basis_b() const { return basis_b_; }
    const std::vector<MixedWord>& basis_0() const { return basis_0_; }

    friend bool operator==(const Code& x, const Code& y) {
        return x.alpha_ == y.alpha_ && x.beta_ == y.beta_ && x.bin_ == y.bin_ && x.ring_a_ == y.ring_a_ &&
               x.ring_b_ == y.ring_b_;
    }

private:
    int alpha_ = 0;
    int beta_ = 0;
    std::vector<std::uint64_t> bin_;
    std::vector<std::uint64_t> ring_a_;
    std::vector<std::uint64_t> ring_b_;
    std::vector<MixedWord> basis_;
    std::vector<MixedWord> basis_b_;
    std::vector<MixedWord> basis_0_;
    CodeType type_;
};

inline constexpr std::size_t kDefaultSpanLimit = std::size_t{1} << 24;

Code span(const GenMatrix& g, std::size_t limit = kDefaultSpanLimit);

// Row reduction to the block template. Zero and dependent rows are dropped.
StandardForm standard_form(const GenMatrix& g);

// Generator matrix of the dual code, in the caller's original coordinates.
GenMatrix dual(const StandardForm& sf);
GenMatrix dual(const GenMatrix& g);

// Type of the dual code; throws PreconditionFailed if a parameter would be negative.
CodeType dual_type(const CodeType& t);

// Projections onto the binary block (as a code with beta = 0) and onto the
// ring block (as a code with alpha = 0).
Code punctured_x(const Code& c);
Code punctured_y(const Code& c);

// Subcodes C_b = {(v|w) : w in {0,u}^beta} and C_0 = {(v|0)}.
Code subcode_b(const Code& c);
Code subcode_0(const Code& c);

// Row-pairwise orthogonality suffices: the inner product is biadditive and
// <d x, y> = d <x, y>.
bool is_self_orthogonal(const GenMatrix& g);
// Self-orthogonal and |C| = 2^((alpha + 2 beta) / 2). Size comes from the
// rank, so no enumeration is needed.
bool is_self_dual(const GenMatrix& g);
bool is_self_orthogonal(const Code& c);
bool is_self_dual(const Code& c);

bool is_separable(const Code& c);

// The seven conditions that are equivalent for self-dual codes, each
// evaluated on its own.
struct SeparabilityReport {
    bool separable = false;
    bool x_self_orthogonal = false;
    bool x_self_dual = false;
    bool x_size_is_2_kappa = false;
    bool y_self_orthogonal = false;
    bool y_self_dual = false;
    bool y_size_is_2_beta = false;

    std::vector<bool> values() const;
    bool all_agree() const;
};

// Throws PreconditionFailed if c is not self-dual.
SeparabilityReport separability_report(const Code& c);

}  // namespace z2r
