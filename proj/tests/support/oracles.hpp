#pragma once

// Brute-force reference implementations used only by tests. They work on
// plain integer vectors straight from the definitions and share no code with
// the bit-packed library paths.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "z2r/codes.hpp"
#include "z2r/constructions.hpp"

namespace oracle {

// Ring elements are ints 0..3 meaning a + b u with value a + 2 b.
int radd(int x, int y);
int rmul(int x, int y);
int rlee(int x);

struct Word {
    std::vector<int> x;  // 0/1
    std::vector<int> y;  // ring codes

    friend auto operator<=>(const Word&, const Word&) = default;
    friend bool operator==(const Word&, const Word&) = default;
};

using WordSet = std::set<Word>;

Word from(const z2r::MixedWord& w);
z2r::MixedWord to(const Word& w);

Word add(const Word& v, const Word& w);
Word scale(int d, const Word& v);
int inner(const Word& v, const Word& w);
int lee(const Word& w);

std::vector<Word> ambient(int alpha, int beta);

// Closure of the rows under addition and the scalar action.
WordSet span(int alpha, int beta, const std::vector<z2r::MixedWord>& rows);
WordSet span(const z2r::GenMatrix& g);
WordSet words_of(const z2r::Code& c);

// Every ambient word orthogonal to all of c.
WordSet dual(int alpha, int beta, const WordSet& c);

// (gamma, delta, kappa) from the definitions: |uC| = 2^delta,
// |C| = 2^(gamma + 2 delta), kappa = dim (C_b)_X.
z2r::CodeType type_of(int alpha, int beta, const WordSet& c);

std::vector<std::uint64_t> enumerator(int alpha, int beta, const WordSet& c);

bool self_orthogonal(const WordSet& c);
bool self_dual(int alpha, int beta, const WordSet& c);
bool separable(int alpha, int beta, const WordSet& c);

// All self-dual submodules of Z2^alpha x R^beta, found by growing
// self-orthogonal submodules one word at a time and deduplicating by their
// membership bitset over the ambient space.
std::vector<WordSet> all_self_dual_codes(int alpha, int beta);

// Z4 side: quaternary coordinates are ints 0..3.
struct Z4Word {
    std::vector<int> x;
    std::vector<int> q;

    friend auto operator<=>(const Z4Word&, const Z4Word&) = default;
    friend bool operator==(const Z4Word&, const Z4Word&) = default;
};

Z4Word from(const z2r::Z2Z4Word& w);
std::set<Z4Word> span_z4(const z2r::Z2Z4Matrix& m);
// Closed span of size 2^(n/2) with every pair orthogonal under
// 2 (x.x' mod 2) + q.q' mod 4.
bool self_dual_z4(const z2r::Z2Z4Matrix& m);

z2r::MixedWord random_word(std::mt19937_64& rng, int alpha, int beta);
z2r::GenMatrix random_matrix(std::mt19937_64& rng, int alpha, int beta, int rows);

}  // namespace oracle

namespace corpus {

z2r::GenMatrix load(const std::string& name);
std::string path(const std::string& name);

}  // namespace corpus
