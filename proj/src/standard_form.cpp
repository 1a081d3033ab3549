#include <algorithm>
#include <optional>

#include "z2r/codes.hpp"

namespace z2r {

namespace {

struct Pivot {
    int column;
    std::size_t row;
};

// row[j] += e * row[p]
void add_multiple(std::vector<MixedWord>& rows, std::size_t j, RingElem e, std::size_t p) {
    if (e != RingElem::zero()) rows[j] += e * rows[p];
}

// front, then the remaining columns ascending, then back.
std::vector<int> order_columns(int n, const std::vector<int>& front, const std::vector<int>& back) {
    std::vector<int> out = front;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (int c : front) used[c] = true;
    for (int c : back) used[c] = true;
    for (int c = 0; c < n; ++c)
        if (!used[c]) out.push_back(c);
    out.insert(out.end(), back.begin(), back.end());
    return out;
}

std::vector<int> columns_of(const std::vector<Pivot>& pivots) {
    std::vector<int> out;
    for (const auto& p : pivots) out.push_back(p.column);
    return out;
}

void sort_by_column(std::vector<Pivot>& pivots) {
    std::sort(pivots.begin(), pivots.end(), [](const Pivot& x, const Pivot& y) { return x.column < y.column; });
}

}  // namespace

// Three elimination passes, one per block row of the template:
//  1. unit pivots in ring columns (scanning right to left) give the delta rows;
//  2. the remaining rows have ring parts in u R^beta; binary pivots (left to
//     right) give the kappa rows;
//  3. rows left have zero binary part and ring part u z; pivots on z (right
//     to left) give the gamma - kappa rows.
// Ties go to the topmost row. A matrix already in template order comes back
// unchanged with identity permutations.
StandardForm standard_form(const GenMatrix& g) {
    const int alpha = g.alpha();
    const int beta = g.beta();
    std::vector<MixedWord> rows = g.rows();
    std::vector<bool> free_row(rows.size(), true);

    // Phase 1.
    std::vector<Pivot> unit_pivots;
    for (;;) {
        std::optional<Pivot> pick;
        for (int c = beta - 1; c >= 0 && !pick; --c)
            for (std::size_t r = 0; r < rows.size(); ++r)
                if (free_row[r] && is_unit(rows[r].ring()[c])) {
                    pick = Pivot{c, r};
                    break;
                }
        if (!pick) break;
        const auto [c, p] = *pick;
        rows[p] = inverse(rows[p].ring()[c]) * rows[p];
        for (std::size_t j = 0; j < rows.size(); ++j)
            if (j != p) add_multiple(rows, j, rows[j].ring()[c], p);
        free_row[p] = false;
        unit_pivots.push_back(*pick);
    }

    // Phase 2.
    std::vector<Pivot> binary_pivots;
    for (;;) {
        std::optional<Pivot> pick;
        for (int c = 0; c < alpha && !pick; ++c)
            for (std::size_t r = 0; r < rows.size(); ++r)
                if (free_row[r] && rows[r].bin()[c]) {
                    pick = Pivot{c, r};
                    break;
                }
        if (!pick) break;
        const auto [c, p] = *pick;
        for (std::size_t j = 0; j < rows.size(); ++j) {
            const bool u_row = free_row[j] || std::any_of(binary_pivots.begin(), binary_pivots.end(),
                                                          [&](const Pivot& q) { return q.row == j; });
            if (j != p && u_row && rows[j].bin()[c]) rows[j] += rows[p];
        }
        free_row[p] = false;
        binary_pivots.push_back(*pick);
    }

    // Phase 3.
    std::vector<Pivot> u_pivots;
    for (;;) {
        std::optional<Pivot> pick;
        for (int c = beta - 1; c >= 0 && !pick; --c)
            for (std::size_t r = 0; r < rows.size(); ++r)
                if (free_row[r] && rows[r].ring()[c] == RingElem::u()) {
                    pick = Pivot{c, r};
                    break;
                }
        if (!pick) break;
        const auto [c, p] = *pick;
        for (std::size_t j = 0; j < rows.size(); ++j) {
            const bool in_block = free_row[j] || std::any_of(u_pivots.begin(), u_pivots.end(),
                                                             [&](const Pivot& q) { return q.row == j; });
            if (j != p && in_block && rows[j].ring()[c] == RingElem::u()) rows[j] += rows[p];
        }
        free_row[p] = false;
        u_pivots.push_back(*pick);
    }

    // Clear the blocks the template requires to be zero (or binary).
    for (const auto& kp : binary_pivots)
        for (const auto& up : u_pivots)
            if (rows[kp.row].ring()[up.column].b()) rows[kp.row] += rows[up.row];
    for (const auto& dp : unit_pivots) {
        for (const auto& kp : binary_pivots)
            if (rows[dp.row].bin()[kp.column]) rows[dp.row] += rows[kp.row];
        for (const auto& up : u_pivots)
            if (rows[dp.row].ring()[up.column].b()) rows[dp.row] += rows[up.row];
    }

    sort_by_column(unit_pivots);
    sort_by_column(binary_pivots);
    sort_by_column(u_pivots);

    StandardForm sf;
    sf.perm_x = order_columns(alpha, columns_of(binary_pivots), {});
    std::vector<int> back = columns_of(u_pivots);
    const std::vector<int> unit_cols = columns_of(unit_pivots);
    back.insert(back.end(), unit_cols.begin(), unit_cols.end());
    sf.perm_y = order_columns(beta, {}, back);

    sf.matrix = GenMatrix(alpha, beta);
    for (const auto* block : {&binary_pivots, &u_pivots, &unit_pivots})
        for (const auto& p : *block) sf.matrix.add_row(permute(rows[p.row], sf.perm_x, sf.perm_y));

    const int kappa = static_cast<int>(binary_pivots.size());
    const int delta = static_cast<int>(unit_pivots.size());
    sf.type = {alpha, beta, kappa + static_cast<int>(u_pivots.size()), delta, kappa};
    return sf;
}

GenMatrix dual(const StandardForm& sf) {
    const auto& m = sf.matrix;
    const int alpha = m.alpha();
    const int beta = m.beta();
    const int kappa = sf.type.kappa;
    const int delta = sf.type.delta;
    const int g = sf.type.gamma - kappa;  // rows of the uI block
    const int k0 = beta - g - delta;      // leading ring columns
    const int cols_a = k0;                // start of the uI block
    const int cols_d = k0 + g;            // start of the I_delta block

    auto krow = [&](int i) -> const MixedWord& { return m[static_cast<std::size_t>(i)]; };
    auto grow = [&](int i) -> const MixedWord& { return m[static_cast<std::size_t>(kappa + i)]; };
    auto drow = [&](int i) -> const MixedWord& { return m[static_cast<std::size_t>(kappa + g + i)]; };

    GenMatrix h(alpha, beta);

    // [A1^t  I_(alpha-kappa) | 0  0  uS^t]
    for (int j = 0; j < alpha - kappa; ++j) {
        MixedWord w(alpha, beta);
        for (int i = 0; i < kappa; ++i) w.bin().set(i, krow(i).bin()[kappa + j]);
        w.bin().set(kappa + j, true);
        for (int i = 0; i < delta; ++i)
            if (drow(i).bin()[kappa + j]) w.ring().set(cols_d + i, RingElem::u());
        h.add_row(w);
    }
    // [0  0 | 0  uI_(gamma-kappa)  uA^t]
    for (int j = 0; j < g; ++j) {
        MixedWord w(alpha, beta);
        w.ring().set(cols_a + j, RingElem::u());
        for (int i = 0; i < delta; ++i)
            if (drow(i).ring()[cols_a + j].a()) w.ring().set(cols_d + i, RingElem::u());
        h.add_row(w);
    }
    // [T^t  0 | I  D^t  (B1+uB2)^t + D^t A^t]
    for (int j = 0; j < k0; ++j) {
        MixedWord w(alpha, beta);
        for (int i = 0; i < kappa; ++i) w.bin().set(i, krow(i).ring()[j].b());
        w.ring().set(j, RingElem::one());
        for (int i = 0; i < g; ++i)
            if (grow(i).ring()[j].b()) w.ring().set(cols_a + i, RingElem::one());
        for (int i = 0; i < delta; ++i) {
            RingElem e = drow(i).ring()[j];
            bool da = false;
            for (int t = 0; t < g; ++t) da ^= grow(t).ring()[j].b() && drow(i).ring()[cols_a + t].a();
            if (da) e = e + RingElem::one();
            w.ring().set(cols_d + i, e);
        }
        h.add_row(w);
    }

    GenMatrix out(alpha, beta);
    for (const auto& r : h.rows()) out.add_row(unpermute(r, sf.perm_x, sf.perm_y));
    return out;
}

}  // namespace z2r
