#pragma once

// Algebra file formats.
//
// JSON object: "size" (int), "unit" (int), "prod" (array of arrays),
// optional "rimp", "limp", "leq" (boolean matrix), "zero" (int),
// "name" (string).  At least one of rimp/limp/leq must be present so
// the order is determined.
//
// Plain text: header line `hoop <size> <unit> [zero]`, then three
// size x size blocks of whitespace-separated indices: prod, rimp, limp.

#include <iosfwd>
#include <string>

#include "hoops/finite_hoop.hpp"

namespace hoops {

// Parses and validates; a validation failure is reported as an
// InputError whose message carries the violation list.  Format is
// sniffed from the content (a leading '{' means JSON).
FiniteHoop load_algebra(std::string const& path);
FiniteHoop parse_algebra(std::string const& text, std::string const& origin = "<input>");

// Parse without validating (used by `check`, which wants the violation
// report rather than an exception).
HoopInput parse_algebra_input(std::string const& text, std::string const& origin = "<input>");

std::string to_json(FiniteHoop const& M);
std::string to_text(FiniteHoop const& M);

void save_algebra(FiniteHoop const& M, std::string const& path);  // by extension: .json or text

std::string read_file(std::string const& path);
void write_file(std::string const& path, std::string const& content);

}  // namespace hoops
