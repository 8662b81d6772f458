#pragma once

#include <string>
#include <string_view>

#include "leibniz/algebra.hpp"

namespace leib::io {

// Algebra files:
//   {"field": {"kind": "Q"} | {"kind": "Fp", "p": 5},
//    "dim": n,
//    "labels": ["e1", ...],                      (optional)
//    "brackets": [{"left": i, "right": j,
//                  "value": [{"index": k, "coeff": "c"}]}]}
// Indices are 1-based. Coefficients are strings: "a" or "a/b" in lowest
// terms over Q, residues in [0, p) over F_p. Unlisted brackets are zero.
//
// Map files: {"matrix": [["c", ...], ...]}, column j the image of e_j.
//
// Parse errors are ParseError (InvalidField for p = 2) and name the line
// and column for syntax errors, the JSON path for content errors.

Algebra parse_algebra(std::string_view text);
/// Canonical form: brackets sorted by (left, right), entries by index,
/// zeros omitted, two-space indentation, trailing newline.
std::string emit_algebra(const Algebra& L);

Matrix parse_map(std::string_view text, const FieldDesc& field);
std::string emit_map(const Matrix& f);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

Algebra load_algebra(const std::string& path);
Matrix load_map(const std::string& path, const FieldDesc& field);

}  // namespace leib::io
