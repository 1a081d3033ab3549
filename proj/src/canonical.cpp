#include <algorithm>
#include <numeric>

#include "z2r/search.hpp"

namespace z2r {

std::uint32_t word_key(const MixedWord& w) {
    const int alpha = w.alpha();
    const int beta = w.beta();
    std::uint32_t key = 0;
    for (int i = 0; i < alpha; ++i) key = (key << 1) | std::uint32_t(w.bin()[i]);
    for (int j = 0; j < beta; ++j) key = (key << 2) | w.ring()[j].code();
    return key;
}

MixedWord word_from_key(std::uint32_t key, int alpha, int beta) {
    MixedWord w(alpha, beta);
    for (int j = beta - 1; j >= 0; --j) {
        w.ring().set(j, RingElem::from_code(key & 3u));
        key >>= 2;
    }
    for (int i = alpha - 1; i >= 0; --i) {
        w.bin().set(i, key & 1u);
        key >>= 1;
    }
    return w;
}

std::vector<MixedWord> CanonicalForm::words() const {
    std::vector<MixedWord> out;
    out.reserve(keys.size());
    for (auto k : keys) out.push_back(word_from_key(k, alpha, beta));
    return out;
}

GenMatrix CanonicalForm::matrix() const {
    const auto ws = words();
    const Code c = Code::from_generators(alpha, beta, ws, kDefaultSpanLimit);
    return standard_form(GenMatrix(alpha, beta, c.basis())).in_original_coordinates();
}

CanonicalForm canonical_form(const Code& c) {
    const int alpha = c.alpha();
    const int beta = c.beta();
    if (alpha > kCanonicalMaxAlpha || beta > kCanonicalMaxBeta)
        throw BoundExceeded("canonical form needs alpha <= " + std::to_string(kCanonicalMaxAlpha) + " and beta <= " +
                            std::to_string(kCanonicalMaxBeta) + ", got (" + std::to_string(alpha) + "," +
                            std::to_string(beta) + ")");

    // Key fragments of every binary part under every X permutation, and of
    // every ring part under every Y permutation.
    std::vector<std::vector<std::uint32_t>> xkeys;
    std::vector<std::vector<std::uint32_t>> ykeys;
    std::vector<int> perm(static_cast<std::size_t>(alpha));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<std::uint32_t> t(std::size_t{1} << alpha);
        for (std::uint32_t v = 0; v < t.size(); ++v) {
            std::uint32_t k = 0;
            for (int i = 0; i < alpha; ++i) k = (k << 1) | ((v >> perm[i]) & 1u);
            t[v] = k << (2 * beta);
        }
        xkeys.push_back(std::move(t));
    } while (std::next_permutation(perm.begin(), perm.end()));
    perm.resize(static_cast<std::size_t>(beta));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<std::uint32_t> t(std::size_t{1} << (2 * beta));
        for (std::uint32_t v = 0; v < t.size(); ++v) {
            std::uint32_t k = 0;
            for (int j = 0; j < beta; ++j) {
                const std::uint32_t a = (v >> perm[j]) & 1u;
                const std::uint32_t b = (v >> (beta + perm[j])) & 1u;
                k = (k << 2) | a | (b << 1);
            }
            t[v] = k;
        }
        ykeys.push_back(std::move(t));
    } while (std::next_permutation(perm.begin(), perm.end()));

    const auto cols = c.columns();
    const std::size_t n = c.size();
    std::vector<std::uint32_t> ring_index(n);
    for (std::size_t i = 0; i < n; ++i)
        ring_index[i] = static_cast<std::uint32_t>(cols.ring_a[i] | (cols.ring_b[i] << beta));

    std::vector<std::uint32_t> best;
    std::vector<std::uint32_t> cur(n);
    for (const auto& xt : xkeys)
        for (const auto& yt : ykeys) {
            for (std::size_t i = 0; i < n; ++i) cur[i] = xt[cols.bin[i]] | yt[ring_index[i]];
            std::sort(cur.begin(), cur.end());
            if (best.empty() || cur < best) best = cur;
        }
    return {alpha, beta, std::move(best)};
}

}  // namespace z2r
