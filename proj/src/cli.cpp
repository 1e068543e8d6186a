#include "mqdr/cli.hpp"

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mqdr/decomp.hpp"
#include "mqdr/errors.hpp"
#include "mqdr/geninv.hpp"
#include "mqdr/imaging.hpp"
#include "mqdr/io.hpp"
#include "mqdr/symbolic/sym_io.hpp"
#include "mqdr/symbolic/sym_tensor.hpp"

namespace mqdr::cli {
namespace {

namespace fs = std::filesystem;

struct Options {
  std::string transform = "identity";
  std::uint64_t seed = 0;
  ToleranceConfig tol;
  std::string report;

  std::string a;
  std::string w;
  std::string b;
  std::string method = "frd";
  Index k = 0;

  std::string out_s, out_t;
  std::string out_q, out_d, out_r;
  std::string out_x;
  std::string out_image;
};

Transform make_transform(const Options& o, Index p) {
  if (o.transform == "identity") return Transform::identity(p);
  if (o.transform == "dct") return Transform::dct(p);
  if (o.transform == "dft") return Transform::dft(p);
  if (o.transform == "random") return Transform::seeded_random(p, o.seed);
  Transform t(read_mat_file(o.transform));
  if (t.size() != p) {
    throw DimensionMismatch("transform is " + std::to_string(t.size()) + "x" +
                            std::to_string(t.size()) + " but the tensor depth is " +
                            std::to_string(p));
  }
  return t;
}

sym::SymTransform make_sym_transform(const Options& o, Index p) {
  if (o.transform == "identity") {
    return sym::SymTransform(sym::QMatrix::identity(p));
  }
  if (o.transform == "dct" || o.transform == "dft" || o.transform == "random") {
    throw InvalidArgument("symbolic commands need 'identity' or a rational .mat file");
  }
  sym::SymTransform t(sym::read_rational_mat_file(o.transform));
  if (t.size() != p) throw DimensionMismatch("transform size does not match tensor depth");
  return t;
}

void maybe_write(const std::string& path, const Tensor3& a) {
  if (!path.empty()) write_t3_file(path, a);
}

void emit(const Options& o, const KeyValues& kv, std::ostream& out) {
  write_key_values(out, kv);
  if (!o.report.empty()) write_key_values_file(o.report, kv);
}

std::string ranks_string(const std::vector<Index>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

void add_residuals(KeyValues& kv, const ResidualMap& r) {
  for (const auto& [name, value] : r) kv.emplace_back(name, format_double(value));
}

void cmd_frd(const Options& o, std::ostream& out) {
  const Tensor3 a = read_t3_file(o.a);
  const Transform t = make_transform(o, a.depth());
  const TensorFRD f = tensor_frd(a, t, o.tol);
  maybe_write(o.out_s, f.S);
  maybe_write(o.out_t, f.T);
  const double res = fro_norm(a - reconstruct(f, t));
  emit(o,
       {{"tubal_rank", std::to_string(f.rank)},
        {"multirank", ranks_string(multirank(a, t, o.tol).ranks)},
        {"reconstruction_residual", format_double(res)}},
       out);
}

void cmd_qdr(const Options& o, std::ostream& out) {
  const Tensor3 a = read_t3_file(o.a);
  const Transform t = make_transform(o, a.depth());
  const TensorQDR f = tensor_qdr(a, t, o.tol);
  maybe_write(o.out_q, f.Q);
  maybe_write(o.out_d, f.D);
  maybe_write(o.out_r, f.R);
  const double res = fro_norm(a - reconstruct(f, t));
  emit(o,
       {{"tubal_rank", std::to_string(f.rank)},
        {"multirank", ranks_string(multirank(a, t, o.tol).ranks)},
        {"reconstruction_residual", format_double(res)}},
       out);
}

void cmd_inverse(const Options& o, bool drazin, std::ostream& out) {
  const Tensor3 a = read_t3_file(o.a);
  const Transform t = make_transform(o, a.depth());
  GinvReport r;
  if (o.method == "frd") {
    r = drazin ? drazin_frd(a, t, o.tol) : pinv_frd(a, t, o.tol);
  } else {
    r = drazin ? drazin_qdr(a, t, o.tol) : pinv_qdr(a, t, o.tol);
  }
  maybe_write(o.out_x, r.X);
  KeyValues kv{{"method", o.method}};
  if (drazin) {
    kv.emplace_back("tubal_index", std::to_string(multi_index(a, t, o.tol).tubal_index));
  } else {
    kv.emplace_back("tubal_rank", std::to_string(multirank(a, t, o.tol).tubal_rank));
  }
  add_residuals(kv, r.residuals);
  emit(o, kv, out);
}

void cmd_outer(const Options& o, std::ostream& out) {
  const Tensor3 a = read_t3_file(o.a);
  const Tensor3 w = read_t3_file(o.w);
  const Transform t = make_transform(o, a.depth());
  const GinvReport r = outer_inverse_qdr(a, w, t, o.tol);
  maybe_write(o.out_x, r.X);
  KeyValues kv;
  add_residuals(kv, r.residuals);
  kv.emplace_back("subspaces_match",
                  check_subspaces(r.X, w, t, o.tol).all() ? "true" : "false");
  emit(o, kv, out);
}

KeyValues sym_summary(const sym::SymTensor3& x) {
  std::size_t nonzero = 0;
  int degree = 0;
  for (const auto& e : x.entries()) {
    if (e.is_zero()) continue;
    ++nonzero;
    degree = std::max({degree, e.num().degree(), e.den().degree()});
  }
  return {{"dims", std::to_string(x.rows()) + "," + std::to_string(x.cols()) +
                       "," + std::to_string(x.depth())},
          {"nonzero_entries", std::to_string(nonzero)},
          {"max_degree", std::to_string(degree)}};
}

void cmd_sym(const Options& o, bool outer, std::ostream& out) {
  const sym::SymTensor3 a = sym::read_st3_file(o.a);
  const sym::SymTransform t = make_sym_transform(o, a.depth());
  sym::SymTensor3 x;
  KeyValues kv;
  if (outer) {
    const sym::SymTensor3 w = sym::read_st3_file(o.w);
    x = sym::sym_outer_inverse(a, w, t);
    const bool idem = (sym::sym_m_product(sym::sym_m_product(x, a, t), x, t) - x).is_zero();
    kv = sym_summary(x);
    kv.emplace_back("XAX_equals_X", idem ? "true" : "false");
  } else {
    x = sym::sym_pinv(a, t);
    const sym::SymTensor3 ax = sym::sym_m_product(a, x, t);
    const bool e1 = (sym::sym_m_product(ax, a, t) - a).is_zero();
    const bool e3 = (ax - sym::sym_transpose(ax)).is_zero();
    kv = sym_summary(x);
    kv.emplace_back("AXA_equals_A", e1 ? "true" : "false");
    kv.emplace_back("AX_symmetric", e3 ? "true" : "false");
  }
  if (!o.out_x.empty()) sym::write_st3_file(o.out_x, x);
  emit(o, kv, out);
}

void cmd_compress(const Options& o, std::ostream& out) {
  const ImageRGB img = read_ppm_file(o.a);
  const Transform t = make_transform(o, 3);
  const CompressionResult r = compress(img, o.k, t, o.tol);
  if (!o.out_image.empty()) write_ppm_file(o.out_image, r.reconstructed);
  emit(o,
       {{"k", std::to_string(r.k)},
        {"psnr_db", format_double(r.psnr_db)},
        {"ssim", r.ssim ? format_double(*r.ssim) : "nan"},
        {"storage_ratio", format_double(r.storage_ratio)}},
       out);
}

void cmd_metrics(const Options& o, std::ostream& out) {
  const ImageRGB a = read_ppm_file(o.a);
  const ImageRGB b = read_ppm_file(o.b);
  KeyValues kv{{"psnr_db", format_double(psnr(a, b))}};
  kv.emplace_back("ssim", a.width >= 8 && a.height >= 8 ? format_double(ssim(a, b))
                                                        : std::string("nan"));
  emit(o, kv, out);
}

void add_common(CLI::App* sub, Options& o, bool numeric) {
  sub->add_option("--transform", o.transform,
                  numeric ? "identity, dct, dft, random, or a .mat file"
                          : "identity or a rational .mat file");
  if (numeric) {
    sub->add_option("--seed", o.seed, "seed for --transform random");
    sub->add_option("--rank-rel-tol", o.tol.rank_rel_tol);
    sub->add_option("--residual-tol", o.tol.residual_tol);
    sub->add_option("--zero-column-tol", o.tol.zero_column_tol);
  }
  sub->add_option("--report", o.report, "also write the report to this file");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"M-product tensor decompositions and generalized inverses", "mqdr"};
  app.require_subcommand(1, 1);

  auto* frd = app.add_subcommand("frd", "full-rank decomposition A = S * T");
  frd->add_option("--A,A", o.a, "input .t3")->required()->check(CLI::ExistingFile);
  frd->add_option("--out-S", o.out_s);
  frd->add_option("--out-T", o.out_t);
  add_common(frd, o, true);

  auto* qdr = app.add_subcommand("qdr", "QDR decomposition A = Q * D * R");
  qdr->add_option("--A,A", o.a, "input .t3")->required()->check(CLI::ExistingFile);
  qdr->add_option("--out-Q", o.out_q);
  qdr->add_option("--out-D", o.out_d);
  qdr->add_option("--out-R", o.out_r);
  add_common(qdr, o, true);

  auto* pinv = app.add_subcommand("pinv", "Moore-Penrose inverse");
  auto* drazin = app.add_subcommand("drazin", "Drazin inverse");
  for (auto* sub : {pinv, drazin}) {
    sub->add_option("--A,A", o.a, "input .t3")->required()->check(CLI::ExistingFile);
    sub->add_option("--method", o.method)->check(CLI::IsMember({"frd", "qdr"}));
    sub->add_option("--out-X", o.out_x);
    add_common(sub, o, true);
  }

  auto* outer = app.add_subcommand("outer", "outer inverse with range R(W), null space N(W)");
  outer->add_option("--A,A", o.a, "input .t3")->required()->check(CLI::ExistingFile);
  outer->add_option("--W", o.w, "n x m x p .t3")->required()->check(CLI::ExistingFile);
  outer->add_option("--out-X", o.out_x);
  add_common(outer, o, true);

  auto* spinv = app.add_subcommand("sym-pinv", "exact Moore-Penrose inverse over Q(x)");
  auto* souter = app.add_subcommand("sym-outer", "exact outer inverse over Q(x)");
  for (auto* sub : {spinv, souter}) {
    sub->add_option("--A,A", o.a, "input .st3")->required()->check(CLI::ExistingFile);
    sub->add_option("--out-X", o.out_x, "output .st3");
    add_common(sub, o, false);
  }
  souter->add_option("--W", o.w, "n x m x p .st3")->required()->check(CLI::ExistingFile);

  auto* comp = app.add_subcommand("compress", "truncated QDR image compression");
  comp->add_option("--image", o.a, "P6 PPM")->required()->check(CLI::ExistingFile);
  comp->add_option("--k", o.k, "truncation rank")->required();
  comp->add_option("--out-image", o.out_image);
  add_common(comp, o, true);

  auto* metrics = app.add_subcommand("metrics", "PSNR and SSIM between two images");
  metrics->add_option("--a", o.a)->required()->check(CLI::ExistingFile);
  metrics->add_option("--b", o.b)->required()->check(CLI::ExistingFile);
  metrics->add_option("--report", o.report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    const int code = app.exit(e, out, msg);
    err << msg.str();
    return code == 0 ? kOk : kUsage;
  }

  try {
    o.tol.validate();
    if (*frd) cmd_frd(o, out);
    else if (*qdr) cmd_qdr(o, out);
    else if (*pinv) cmd_inverse(o, false, out);
    else if (*drazin) cmd_inverse(o, true, out);
    else if (*outer) cmd_outer(o, out);
    else if (*spinv) cmd_sym(o, false, out);
    else if (*souter) cmd_sym(o, true, out);
    else if (*comp) cmd_compress(o, out);
    else if (*metrics) cmd_metrics(o, out);
  } catch (const MathError& e) {
    err << e.name() << ": " << e.what() << '\n';
    return kMath;
  } catch (const Error& e) {
    err << e.name() << ": " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

}  // namespace mqdr::cli
