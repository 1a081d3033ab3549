#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "oracles.hpp"
#include "z2r/search.hpp"

using namespace z2r;

namespace {

// Permutation class of a word set, by brute force over S_alpha x S_beta.
std::vector<oracle::Word> class_key(int alpha, int beta, const oracle::WordSet& c) {
    std::vector<int> px(static_cast<std::size_t>(alpha)), py(static_cast<std::size_t>(beta));
    std::vector<oracle::Word> best;
    std::iota(px.begin(), px.end(), 0);
    do {
        std::iota(py.begin(), py.end(), 0);
        do {
            std::vector<oracle::Word> img;
            for (const auto& w : c) {
                oracle::Word p;
                for (int i : px) p.x.push_back(w.x[static_cast<std::size_t>(i)]);
                for (int j : py) p.y.push_back(w.y[static_cast<std::size_t>(j)]);
                img.push_back(std::move(p));
            }
            std::sort(img.begin(), img.end());
            if (best.empty() || img < best) best = std::move(img);
        } while (std::next_permutation(py.begin(), py.end()));
    } while (std::next_permutation(px.begin(), px.end()));
    return best;
}

std::set<std::vector<oracle::Word>> oracle_classes(int alpha, int beta) {
    std::set<std::vector<oracle::Word>> out;
    for (const auto& c : oracle::all_self_dual_codes(alpha, beta)) out.insert(class_key(alpha, beta, c));
    return out;
}

std::set<std::vector<oracle::Word>> search_classes(const std::vector<SearchResult>& rs, int alpha, int beta) {
    std::set<std::vector<oracle::Word>> out;
    for (const auto& r : rs) out.insert(class_key(alpha, beta, oracle::span(r.matrix)));
    return out;
}

}  // namespace

TEST_CASE("search agrees with the brute-force subgroup enumeration") {
    const std::vector<std::pair<int, int>> shapes{{2, 0}, {0, 1}, {2, 1}, {0, 2}, {4, 0}, {2, 2},
                                                  {4, 1}, {0, 3}, {4, 2}, {2, 3}, {6, 1}, {0, 4},
                                                  {4, 3}, {6, 2}, {2, 4}};
    for (auto [alpha, beta] : shapes) {
        CAPTURE(alpha);
        CAPTURE(beta);
        const auto expected = oracle_classes(alpha, beta);
        const auto rs = enumerate_self_dual({alpha, beta});
        CHECK(rs.size() == expected.size());
        CHECK(search_classes(rs, alpha, beta) == expected);

        SearchSpec raw{alpha, beta};
        raw.canonicalize = false;
        const auto all = enumerate_self_dual(raw);
        CHECK(search_classes(all, alpha, beta) == expected);
        for (const auto& r : all) CHECK(oracle::self_dual(alpha, beta, oracle::span(r.matrix)));
    }
}

TEST_CASE("search results carry consistent metadata") {
    for (auto [alpha, beta] : std::vector<std::pair<int, int>>{{4, 2}, {2, 3}, {4, 3}}) {
        const auto rs = enumerate_self_dual({alpha, beta});
        REQUIRE_FALSE(rs.empty());
        for (std::size_t i = 0; i < rs.size(); ++i) {
            const auto& r = rs[i];
            const Code c = span(r.matrix);
            CHECK(is_self_dual(c));
            CHECK(r.type == c.type());
            CHECK(r.selfdual_type == classify(c));
            CHECK(r.separable == is_separable(c));
            CHECK(r.enumerator == weight_enumerator(c));
            REQUIRE(r.canonical.has_value());
            CHECK(*r.canonical == canonical_form(c));
            if (i > 0) CHECK(*rs[i - 1].canonical < *r.canonical);
        }
    }
}

TEST_CASE("filters select subsets") {
    const auto all = enumerate_self_dual({4, 3});
    for (auto t : {SelfDualType::Type0, SelfDualType::TypeI, SelfDualType::TypeII}) {
        SearchSpec s{4, 3};
        s.type_tag = t;
        const auto sub = enumerate_self_dual(s);
        const auto n = std::count_if(all.begin(), all.end(), [&](const auto& r) { return r.selfdual_type == t; });
        CHECK(sub.size() == static_cast<std::size_t>(n));
        for (const auto& r : sub) CHECK(r.selfdual_type == t);
    }
    SearchSpec s{4, 3};
    s.separable = false;
    for (const auto& r : enumerate_self_dual(s)) CHECK_FALSE(r.separable);
}

TEST_CASE("threads do not change the result") {
    SearchSpec one{4, 4};
    SearchSpec many{4, 4};
    many.threads = 4;
    const auto a = enumerate_self_dual(one);
    const auto b = enumerate_self_dual(many);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].canonical == b[i].canonical);
}

TEST_CASE("canonical form is a permutation invariant") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int alpha = static_cast<int>(rng() % 5), beta = static_cast<int>(rng() % 4);
        const GenMatrix g = oracle::random_matrix(rng, alpha, beta, 2);
        std::vector<int> px(static_cast<std::size_t>(alpha)), py(static_cast<std::size_t>(beta));
        std::iota(px.begin(), px.end(), 0);
        std::iota(py.begin(), py.end(), 0);
        std::shuffle(px.begin(), px.end(), rng);
        std::shuffle(py.begin(), py.end(), rng);
        GenMatrix h(alpha, beta);
        for (const auto& r : g.rows()) h.add_row(permute(r, px, py));
        const CanonicalForm cf = canonical_form(span(g));
        CHECK(cf == canonical_form(span(h)));
        CHECK(cf == canonical_form(span(cf.matrix())));
        CHECK(span(cf.matrix()).size() == span(g).size());
    }
    for (std::uint32_t k = 0; k < 64; ++k) CHECK(word_key(word_from_key(k, 2, 2)) == k);
}

TEST_CASE("bounds") {
    CHECK_THROWS_AS(enumerate_self_dual({4, 5}), BoundExceeded);
    CHECK_THROWS_AS(enumerate_self_dual({8, 2}), BoundExceeded);
    CHECK_THROWS_AS(enumerate_self_dual({0, 7}), BoundExceeded);
    CHECK(enumerate_self_dual({3, 1}).empty());
    CHECK_THROWS_AS(canonical_form(Code(7, 0)), BoundExceeded);
    SearchSpec raw{8, 2};
    raw.canonicalize = false;
    CHECK_FALSE(enumerate_self_dual(raw).empty());
    CHECK_THROWS_AS(classify_two_weight(6), PreconditionFailed);
}

TEST_CASE("two-weight classification") {
    for (int n : {4, 8}) {
        CAPTURE(n);
        const auto rs = classify_two_weight(n);
        REQUIRE_FALSE(rs.empty());
        for (const auto& r : rs) {
            CHECK(r.type.alpha == n / 2);
            CHECK(r.type.beta == n / 4);
            CHECK(r.enumerator.nonzero_weights().size() == 2);
        }
        // Brute force over every self-dual code of the shape.
        std::set<std::vector<oracle::Word>> expected;
        for (const auto& c : oracle::all_self_dual_codes(n / 2, n / 4)) {
            std::set<int> ws;
            for (const auto& w : c)
                if (oracle::lee(w) > 0) ws.insert(oracle::lee(w));
            if (ws.size() == 2) expected.insert(class_key(n / 2, n / 4, c));
        }
        CHECK(search_classes(rs, n / 2, n / 4) == expected);
    }
}
