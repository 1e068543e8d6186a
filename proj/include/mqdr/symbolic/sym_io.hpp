#pragma once

#include <filesystem>
#include <iosfwd>

#include "mqdr/symbolic/sym_tensor.hpp"

// .st3 documents are JSON:
//
//   {"dims": [m, n, p],
//    "entries": [[["1", "1"], ["1"]], ...]}
//
// Each entry is [numerator, denominator] with coefficients in ascending
// degree; a coefficient is an integer or "a/b" string (JSON integers are
// accepted too). Entries are slice-major, row-major within a slice. The
// writer clears denominators so every written coefficient is an integer.
//
// A rational transform is a .mat file whose header kind is `rational`
// (`mat <p> rational`); `real` files are also accepted when every token is
// an exact decimal.

namespace mqdr::sym {

SymTensor3 read_st3(std::istream& in);
SymTensor3 read_st3_file(const std::filesystem::path& path);
void write_st3(std::ostream& out, const SymTensor3& a);
void write_st3_file(const std::filesystem::path& path, const SymTensor3& a);

QMatrix read_rational_mat(std::istream& in);
QMatrix read_rational_mat_file(const std::filesystem::path& path);
void write_rational_mat(std::ostream& out, const QMatrix& m);

}  // namespace mqdr::sym
