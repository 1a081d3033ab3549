#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "z2r/analysis.hpp"
#include "z2r/codes.hpp"
#include "z2r/constructions.hpp"
#include "z2r/search.hpp"

namespace z2r {

// Code file format:
//
//   alpha=4 beta=2
//   1 0 1 0 | u 0
//   0 0 1 1 | 1 v
//
// Binary symbols 0/1, then `|`, then ring symbols 0/1/u/v (v = 1+u). Symbols
// are single characters; whitespace between them is optional. Blank lines are
// ignored. Errors carry the 1-based line and column of the offending symbol.
GenMatrix parse_code_file(std::string_view text);
std::string emit_code_file(const GenMatrix& g);

// Same layout for Z2 x Z4 matrices, quaternary symbols 0..3.
Z2Z4Matrix parse_z2z4_file(std::string_view text);
std::string emit_z2z4_file(const Z2Z4Matrix& m);

// One word literal such as "1 1 | u 0", checked against (alpha, beta).
MixedWord parse_word(std::string_view text, int alpha, int beta);
// "1 0 | u v"; "| u" when alpha = 0, "1 1 |" when beta = 0.
std::string format_word(const MixedWord& w);

// Vectors without a separator, e.g. "1 0 1" or "u1v".
BinaryVector parse_binary(std::string_view text);
RingVector parse_ring(std::string_view text);
RingElem parse_ring_elem(std::string_view text);

nlohmann::ordered_json to_json(const CodeType& t);
nlohmann::ordered_json to_json(const WeightEnumerator& w);
nlohmann::ordered_json to_json(const GenMatrix& g);
// {alpha, beta, type: [gamma, delta, kappa], selfdual_type, separable,
//  enumerator: {n, coeffs}, matrix: [rows]}
nlohmann::ordered_json to_json(const SearchResult& r);
// Compact single-line form, as written to JSON-lines streams.
std::string emit_json(const SearchResult& r);

}  // namespace z2r
