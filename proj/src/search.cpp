#include <algorithm>
#include <map>
#include <thread>

#include "z2r/search.hpp"

namespace z2r {

namespace {

enum class CellKind { bin, ring_a, ring_b };

struct Cell {
    CellKind kind;
    int col;
};

// One row of the standard-form template: fixed identity entries plus the
// free block entries.
struct RowSpec {
    MixedWord base;
    std::vector<Cell> cells;
};

MixedWord assign(const RowSpec& spec, std::uint32_t mask) {
    MixedWord w = spec.base;
    for (std::size_t k = 0; k < spec.cells.size(); ++k) {
        if (!((mask >> k) & 1u)) continue;
        const Cell& c = spec.cells[k];
        switch (c.kind) {
            case CellKind::bin: w.bin().set(c.col, true); break;
            case CellKind::ring_a: w.ring().set(c.col, w.ring()[c.col] + RingElem::one()); break;
            case CellKind::ring_b: w.ring().set(c.col, w.ring()[c.col] + RingElem::u()); break;
        }
    }
    return w;
}

// Template of a self-dual code with the given delta: alpha = 2 kappa,
// gamma - kappa = beta - 2 delta rows of the uI block, and delta leading ring
// columns. Rows of the uI block come first since they have the fewest cells.
std::vector<RowSpec> template_rows(int alpha, int beta, int delta) {
    const int kappa = alpha / 2;
    const int g = beta - 2 * delta;
    const int k0 = delta;
    std::vector<RowSpec> rows;
    for (int i = 0; i < g; ++i) {
        RowSpec r{MixedWord(alpha, beta), {}};
        r.base.ring().set(k0 + i, RingElem::u());
        for (int j = 0; j < k0; ++j) r.cells.push_back({CellKind::ring_b, j});
        rows.push_back(std::move(r));
    }
    for (int i = 0; i < kappa; ++i) {
        RowSpec r{MixedWord(alpha, beta), {}};
        r.base.bin().set(i, true);
        for (int j = kappa; j < alpha; ++j) r.cells.push_back({CellKind::bin, j});
        for (int j = 0; j < k0; ++j) r.cells.push_back({CellKind::ring_b, j});
        rows.push_back(std::move(r));
    }
    for (int i = 0; i < delta; ++i) {
        RowSpec r{MixedWord(alpha, beta), {}};
        r.base.ring().set(k0 + g + i, RingElem::one());
        for (int j = kappa; j < alpha; ++j) r.cells.push_back({CellKind::bin, j});
        for (int j = 0; j < k0; ++j) {
            r.cells.push_back({CellKind::ring_a, j});
            r.cells.push_back({CellKind::ring_b, j});
        }
        for (int j = k0; j < k0 + g; ++j) r.cells.push_back({CellKind::ring_a, j});
        rows.push_back(std::move(r));
    }
    return rows;
}

// Self-orthogonal fillings of each template row.
std::vector<std::vector<MixedWord>> row_options(const std::vector<RowSpec>& specs) {
    std::vector<std::vector<MixedWord>> out;
    for (const auto& s : specs) {
        std::vector<MixedWord> opts;
        for (std::uint32_t m = 0; m < (1u << s.cells.size()); ++m) {
            MixedWord w = assign(s, m);
            if (inner_product(w, w) == RingElem::zero()) opts.push_back(w);
        }
        out.push_back(std::move(opts));
    }
    return out;
}

void extend(const std::vector<std::vector<MixedWord>>& opts, std::vector<MixedWord>& chosen,
            std::vector<std::vector<MixedWord>>& found) {
    const std::size_t depth = chosen.size();
    if (depth == opts.size()) {
        found.push_back(chosen);
        return;
    }
    for (const auto& w : opts[depth]) {
        if (std::any_of(chosen.begin(), chosen.end(),
                        [&](const MixedWord& r) { return inner_product(r, w) != RingElem::zero(); }))
            continue;
        chosen.push_back(w);
        extend(opts, chosen, found);
        chosen.pop_back();
    }
}

std::optional<SearchResult> evaluate(const SearchSpec& spec, const GenMatrix& g) {
    const Code c = span(g);
    const WeightEnumerator w = weight_enumerator(c);
    if (spec.two_weight) {
        const auto r = two_weight_check(c);
        if (!r.preconditions_met() || !r.two_weight) return std::nullopt;
    }
    SearchResult res;
    res.selfdual_type = classify(c);
    if (spec.type_tag && *spec.type_tag != res.selfdual_type) return std::nullopt;
    res.separable = is_separable(c);
    if (spec.separable && *spec.separable != res.separable) return std::nullopt;
    res.type = c.type();
    res.enumerator = w;
    if (spec.canonicalize) {
        res.canonical = canonical_form(c);
        res.matrix = res.canonical->matrix();
    } else {
        res.matrix = g;
    }
    return res;
}

}  // namespace

std::vector<SearchResult> enumerate_self_dual(const SearchSpec& spec) {
    const int alpha = spec.alpha;
    const int beta = spec.beta;
    if (alpha < 0 || beta < 0 || alpha + 2 * beta > kSearchMaxLength)
        throw BoundExceeded("exhaustive search needs alpha + 2 beta <= " + std::to_string(kSearchMaxLength) +
                            ", got (" + std::to_string(alpha) + "," + std::to_string(beta) + ")");
    if (spec.canonicalize && (alpha > kCanonicalMaxAlpha || beta > kCanonicalMaxBeta))
        throw BoundExceeded("canonical dedup needs alpha <= " + std::to_string(kCanonicalMaxAlpha) +
                            " and beta <= " + std::to_string(kCanonicalMaxBeta));
    if (alpha % 2 != 0) return {};

    // Work units: (delta, index of the first row's filling).
    struct Unit {
        int delta;
        std::size_t first;
    };
    std::vector<std::vector<std::vector<MixedWord>>> options;
    std::vector<Unit> units;
    for (int delta = 0; 2 * delta <= beta; ++delta) {
        options.push_back(row_options(template_rows(alpha, beta, delta)));
        const auto& o = options.back();
        if (o.empty()) {
            units.push_back({delta, 0});
            continue;
        }
        for (std::size_t i = 0; i < o.front().size(); ++i) units.push_back({delta, i});
    }

    std::vector<std::vector<SearchResult>> per_unit(units.size());
    auto work = [&](std::size_t u) {
        const auto& o = options[static_cast<std::size_t>(units[u].delta)];
        std::vector<std::vector<MixedWord>> found;
        if (o.empty()) {
            found.emplace_back();
        } else {
            std::vector<MixedWord> chosen{o.front()[units[u].first]};
            extend(o, chosen, found);
        }
        for (auto& rows : found)
            if (auto r = evaluate(spec, GenMatrix(alpha, beta, std::move(rows)))) per_unit[u].push_back(std::move(*r));
    };

    const unsigned threads = std::max(1u, spec.threads);
    if (threads == 1) {
        for (std::size_t u = 0; u < units.size(); ++u) work(u);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                for (std::size_t u = t; u < units.size(); u += threads) work(u);
            });
        for (auto& th : pool) th.join();
    }

    std::vector<SearchResult> out;
    if (!spec.canonicalize) {
        for (auto& v : per_unit)
            for (auto& r : v) out.push_back(std::move(r));
        return out;
    }
    std::map<CanonicalForm, SearchResult> classes;
    for (auto& v : per_unit)
        for (auto& r : v) {
            const CanonicalForm key = *r.canonical;
            classes.try_emplace(key, std::move(r));
        }
    for (auto& [k, r] : classes) out.push_back(std::move(r));
    return out;
}

std::vector<SearchResult> classify_two_weight(int n, unsigned threads) {
    if (n <= 0 || n % 4 != 0)
        throw PreconditionFailed("two-weight self-dual codes need n divisible by 4, got " + std::to_string(n));
    SearchSpec spec;
    spec.alpha = n / 2;
    spec.beta = n / 4;
    spec.two_weight = true;
    spec.threads = threads;
    return enumerate_self_dual(spec);
}

}  // namespace z2r
