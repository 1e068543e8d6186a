#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "mqdr/tensor.hpp"

// Text formats.
//
//   .t3   header `t3 <m> <n> <p> <real|complex>`, then m*n*p entries in
//         slice-major, row-major order; a real entry is one number, a
//         complex entry is two (`re im`).
//   .mat  header `mat <p> <real|complex|rational>`, then p*p entries
//         row-major; rational entries are `a` or `a/b`.
//
// Numbers are parsed and printed locale-independently with a `.` radix;
// output uses 17 significant digits.

namespace mqdr {

Tensor3 read_t3(std::istream& in);
Tensor3 read_t3_file(const std::filesystem::path& path);
/// Writes `real` when every imaginary part is zero, else `complex`.
void write_t3(std::ostream& out, const Tensor3& a);
void write_t3_file(const std::filesystem::path& path, const Tensor3& a);

Matrix read_mat(std::istream& in);
Matrix read_mat_file(const std::filesystem::path& path);
void write_mat(std::ostream& out, const Matrix& m);
void write_mat_file(const std::filesystem::path& path, const Matrix& m);

/// 17 significant digits; non-finite values print as inf, -inf or nan.
std::string format_double(double v);
/// Locale-independent parse of a complete token; throws FormatError.
double parse_double(const std::string& token);

/// Flat key-value report: one `key value` pair per line, in order.
using KeyValues = std::vector<std::pair<std::string, std::string>>;
void write_key_values(std::ostream& out, const KeyValues& kv);
void write_key_values_file(const std::filesystem::path& path,
                           const KeyValues& kv);
KeyValues read_key_values(std::istream& in);

}  // namespace mqdr
