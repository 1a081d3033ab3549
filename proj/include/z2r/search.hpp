#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "z2r/analysis.hpp"
#include "z2r/codes.hpp"

namespace z2r {

// Canonicalization is exhaustive over S_alpha x S_beta.
inline constexpr int kCanonicalMaxAlpha = 6;
inline constexpr int kCanonicalMaxBeta = 4;
// Exhaustive search covers ambient spaces of at most 2^12 words.
inline constexpr int kSearchMaxLength = 12;

// Each word is keyed by its symbols read left to right, binary coordinates
// first (one bit each), then ring coordinates (two bits each, 0 < 1 < u < v).
// The canonical form is the lexicographically least sorted key list over all
// permutations of the binary and of the ring coordinates.
struct CanonicalForm {
    int alpha = 0;
    int beta = 0;
    std::vector<std::uint32_t> keys;

    std::vector<MixedWord> words() const;
    // A generator matrix of the canonical representative.
    GenMatrix matrix() const;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

// Throws BoundExceeded unless alpha <= 6 and beta <= 4.
CanonicalForm canonical_form(const Code& c);

MixedWord word_from_key(std::uint32_t key, int alpha, int beta);
std::uint32_t word_key(const MixedWord& w);

struct SearchSpec {
    int alpha = 0;
    int beta = 0;
    std::optional<SelfDualType> type_tag;
    bool two_weight = false;
    std::optional<bool> separable;
    // Deduplicate up to coordinate permutation. When false, every
    // standard-form candidate is returned as its own entry.
    bool canonicalize = true;
    unsigned threads = 1;
};

struct SearchResult {
    GenMatrix matrix;
    CodeType type;
    SelfDualType selfdual_type = SelfDualType::TypeI;
    bool separable = false;
    WeightEnumerator enumerator;
    std::optional<CanonicalForm> canonical;
};

// All self-dual codes of the given shape passing the filters, one per
// permutation class, sorted by canonical form. Throws BoundExceeded when
// alpha + 2 beta > 12 or, with canonicalize, outside the canonical bounds.
std::vector<SearchResult> enumerate_self_dual(const SearchSpec& spec);

// Self-dual two-weight codes with alpha = n/2, beta = n/4, up to permutation.
// Throws PreconditionFailed unless 4 divides n.
std::vector<SearchResult> classify_two_weight(int n, unsigned threads = 1);

}  // namespace z2r
