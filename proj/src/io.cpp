#include "mqdr/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "mqdr/errors.hpp"

namespace mqdr {

namespace {

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("FileNotFound", "cannot open " + path.string());
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("FileNotWritable", "cannot write " + path.string());
  return out;
}

std::string next_token(std::istream& in, const char* what) {
  std::string token;
  if (!(in >> token)) {
    throw FormatError(std::string("unexpected end of input while reading ") +
                      what);
  }
  return token;
}

Index parse_dim(const std::string& token) {
  Index v = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size() || v < 0) {
    throw FormatError("invalid dimension '" + token + "'");
  }
  return v;
}

bool parse_kind(const std::string& token) {
  if (token == "real") return false;
  if (token == "complex") return true;
  throw FormatError("expected 'real' or 'complex', got '" + token + "'");
}

Complex read_entry(std::istream& in, bool complex) {
  const double re = parse_double(next_token(in, "entries"));
  const double im = complex ? parse_double(next_token(in, "entries")) : 0.0;
  return {re, im};
}

/// "a" or "a/b" evaluated in double precision.
double parse_fraction(const std::string& token) {
  const auto slash = token.find('/');
  if (slash == std::string::npos) return parse_double(token);
  const double den = parse_double(token.substr(slash + 1));
  if (den == 0.0) throw FormatError("zero denominator in '" + token + "'");
  return parse_double(token.substr(0, slash)) / den;
}

void write_entry(std::ostream& out, Complex v, bool complex) {
  out << format_double(v.real());
  if (complex) out << ' ' << format_double(v.imag());
}

void expect_end(std::istream& in) {
  std::string extra;
  if (in >> extra) throw FormatError("trailing data after entries: '" + extra + "'");
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  (void)ec;
  return std::string(buf, ptr);
}

double parse_double(const std::string& token) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) {
    throw FormatError("invalid number '" + token + "'");
  }
  return v;
}

Tensor3 read_t3(std::istream& in) {
  if (next_token(in, "header") != "t3") throw FormatError("missing 't3' header");
  const Index m = parse_dim(next_token(in, "header"));
  const Index n = parse_dim(next_token(in, "header"));
  const Index p = parse_dim(next_token(in, "header"));
  const bool complex = parse_kind(next_token(in, "header"));
  Tensor3 a(m, n, p);
  for (Complex& v : a.data()) v = read_entry(in, complex);
  expect_end(in);
  return a;
}

Tensor3 read_t3_file(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_t3(in);
}

void write_t3(std::ostream& out, const Tensor3& a) {
  const bool complex = !a.is_real();
  out << "t3 " << a.rows() << ' ' << a.cols() << ' ' << a.depth() << ' '
      << (complex ? "complex" : "real") << '\n';
  for (Index k = 0; k < a.depth(); ++k) {
    for (Index i = 0; i < a.rows(); ++i) {
      for (Index j = 0; j < a.cols(); ++j) {
        if (j > 0) out << ' ';
        write_entry(out, a(i, j, k), complex);
      }
      out << '\n';
    }
  }
}

void write_t3_file(const std::filesystem::path& path, const Tensor3& a) {
  auto out = open_out(path);
  write_t3(out, a);
}

Matrix read_mat(std::istream& in) {
  if (next_token(in, "header") != "mat") throw FormatError("missing 'mat' header");
  const Index p = parse_dim(next_token(in, "header"));
  const std::string kind = next_token(in, "header");
  Matrix m(p, p);
  if (kind == "rational") {
    for (Index i = 0; i < p; ++i) {
      for (Index j = 0; j < p; ++j) m(i, j) = parse_fraction(next_token(in, "entries"));
    }
  } else {
    const bool complex = parse_kind(kind);
    for (Index i = 0; i < p; ++i) {
      for (Index j = 0; j < p; ++j) m(i, j) = read_entry(in, complex);
    }
  }
  expect_end(in);
  return m;
}

Matrix read_mat_file(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_mat(in);
}

void write_mat(std::ostream& out, const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("transform must be square");
  const bool complex = (m.imag().array() != 0.0).any();
  out << "mat " << m.rows() << ' ' << (complex ? "complex" : "real") << '\n';
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out << ' ';
      write_entry(out, m(i, j), complex);
    }
    out << '\n';
  }
}

void write_mat_file(const std::filesystem::path& path, const Matrix& m) {
  auto out = open_out(path);
  write_mat(out, m);
}

void write_key_values(std::ostream& out, const KeyValues& kv) {
  for (const auto& [key, value] : kv) out << key << ' ' << value << '\n';
}

void write_key_values_file(const std::filesystem::path& path,
                           const KeyValues& kv) {
  auto out = open_out(path);
  write_key_values(out, kv);
}

KeyValues read_key_values(std::istream& in) {
  KeyValues kv;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string key, value;
    if (!(ls >> key)) continue;
    if (!(ls >> value)) throw FormatError("report line without value: " + line);
    kv.emplace_back(key, value);
  }
  return kv;
}

}  // namespace mqdr
