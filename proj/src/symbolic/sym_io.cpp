#include "mqdr/symbolic/sym_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "json.hpp"

#include "mqdr/errors.hpp"

namespace mqdr::sym {
namespace {

using nlohmann::json;

BigRational coefficient(const json& c) {
  if (c.is_string()) return parse_rational(c.get<std::string>());
  if (c.is_number_integer()) return BigRational(std::to_string(c.get<long long>()));
  throw FormatError("coefficient must be an integer or a string");
}

Poly polynomial(const json& j) {
  if (!j.is_array()) throw FormatError("polynomial must be a coefficient list");
  std::vector<BigRational> c;
  c.reserve(j.size());
  for (const auto& e : j) c.push_back(coefficient(e));
  return Poly(std::move(c));
}

json integer_list(const Poly& p, const BigInteger& scale) {
  json out = json::array();
  if (p.is_zero()) {
    out.push_back("0");
    return out;
  }
  for (const auto& c : p.coeffs()) {
    BigRational v = c * BigRational(scale);
    out.push_back(to_string(v));
  }
  return out;
}

BigInteger denominator_lcm(const Poly& p, BigInteger acc) {
  for (const auto& c : p.coeffs()) {
    mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), c.get_den_mpz_t());
  }
  return acc;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("FileNotFound", "cannot open " + path.string());
  return in;
}

}  // namespace

SymTensor3 read_st3(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw FormatError(std::string("invalid .st3 document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dims") || !doc.contains("entries")) {
    throw FormatError(".st3 document needs 'dims' and 'entries'");
  }
  const json& dims = doc["dims"];
  if (!dims.is_array() || dims.size() != 3) {
    throw FormatError("'dims' must be [m, n, p]");
  }
  Size d[3];
  for (int i = 0; i < 3; ++i) {
    if (!dims[static_cast<std::size_t>(i)].is_number_integer() ||
        dims[static_cast<std::size_t>(i)].get<long long>() < 0) {
      throw FormatError("dimensions must be non-negative integers");
    }
    d[i] = dims[static_cast<std::size_t>(i)].get<Size>();
  }
  const json& entries = doc["entries"];
  if (!entries.is_array() ||
      static_cast<Size>(entries.size()) != d[0] * d[1] * d[2]) {
    throw FormatError("'entries' must list m*n*p entries");
  }
  SymTensor3 a(d[0], d[1], d[2]);
  std::size_t idx = 0;
  for (Size k = 0; k < d[2]; ++k)
    for (Size i = 0; i < d[0]; ++i)
      for (Size j = 0; j < d[1]; ++j) {
        const json& e = entries[idx++];
        if (!e.is_array() || e.size() != 2) {
          throw FormatError("each entry must be [numerator, denominator]");
        }
        const Poly den = polynomial(e[1]);
        if (den.is_zero()) throw FormatError("zero denominator polynomial");
        a(i, j, k) = RatFun(polynomial(e[0]), den);
      }
  return a;
}

SymTensor3 read_st3_file(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_st3(in);
}

void write_st3(std::ostream& out, const SymTensor3& a) {
  out << "{\"dims\": [" << a.rows() << ", " << a.cols() << ", " << a.depth()
      << "],\n \"entries\": [";
  bool first = true;
  for (const RatFun& f : a.entries()) {
    const BigInteger scale = denominator_lcm(f.den(), denominator_lcm(f.num(), 1));
    const json entry = json::array({integer_list(f.num(), scale),
                                    integer_list(f.den(), scale)});
    out << (first ? "\n  " : ",\n  ") << entry.dump();
    first = false;
  }
  out << "\n]}\n";
}

void write_st3_file(const std::filesystem::path& path, const SymTensor3& a) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("FileNotWritable", "cannot write " + path.string());
  write_st3(out, a);
}

QMatrix read_rational_mat(std::istream& in) {
  std::string tag, kind;
  Size p = -1;
  if (!(in >> tag) || tag != "mat") throw FormatError("missing 'mat' header");
  if (!(in >> p) || p <= 0) throw FormatError("invalid transform size");
  if (!(in >> kind) || (kind != "rational" && kind != "real")) {
    throw FormatError("symbolic transforms must be 'rational' or 'real'");
  }
  QMatrix m(p, p);
  for (Size i = 0; i < p; ++i)
    for (Size j = 0; j < p; ++j) {
      std::string token;
      if (!(in >> token)) throw FormatError("unexpected end of transform entries");
      m(i, j) = parse_rational(token);
    }
  std::string extra;
  if (in >> extra) throw FormatError("trailing data after entries: '" + extra + "'");
  return m;
}

QMatrix read_rational_mat_file(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_rational_mat(in);
}

void write_rational_mat(std::ostream& out, const QMatrix& m) {
  out << "mat " << m.rows() << " rational\n";
  for (Size i = 0; i < m.rows(); ++i) {
    for (Size j = 0; j < m.cols(); ++j) {
      if (j > 0) out << ' ';
      out << to_string(m(i, j));
    }
    out << '\n';
  }
}

}  // namespace mqdr::sym
