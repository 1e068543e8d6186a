#include "mqdr/imaging.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <string>

#include "mqdr/decomp.hpp"
#include "mqdr/errors.hpp"

namespace mqdr {
namespace {

constexpr int kWindow = 8;

[[noreturn]] void malformed(const std::string& what) {
  throw FormatError("MalformedHeader", what);
}

void skip_space_and_comments(std::istream& in) {
  for (;;) {
    const int c = in.peek();
    if (c == '#') {
      std::string discard;
      std::getline(in, discard);
    } else if (c != EOF && std::isspace(c)) {
      in.get();
    } else {
      return;
    }
  }
}

long header_number(std::istream& in, const char* field) {
  skip_space_and_comments(in);
  std::string digits;
  while (std::isdigit(in.peek())) digits.push_back(static_cast<char>(in.get()));
  if (digits.empty() || digits.size() > 9) {
    malformed(std::string("bad PPM ") + field);
  }
  return std::stol(digits);
}

void check_same_shape(const ImageRGB& a, const ImageRGB& b) {
  if (a.width != b.width || a.height != b.height) {
    throw DimensionMismatch("images differ in size");
  }
}

double channel_ssim(const ImageRGB& a, const ImageRGB& b, int ch) {
  constexpr double c1 = (0.01 * 255) * (0.01 * 255);
  constexpr double c2 = (0.03 * 255) * (0.03 * 255);
  constexpr double n = kWindow * kWindow;
  double total = 0.0;
  Index windows = 0;
  for (Index r = 0; r + kWindow <= a.height; ++r) {
    for (Index c = 0; c + kWindow <= a.width; ++c) {
      double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
      for (Index u = r; u < r + kWindow; ++u) {
        for (Index v = c; v < c + kWindow; ++v) {
          const double x = a.at(u, v, ch);
          const double y = b.at(u, v, ch);
          sx += x;
          sy += y;
          sxx += x * x;
          syy += y * y;
          sxy += x * y;
        }
      }
      const double mx = sx / n;
      const double my = sy / n;
      const double vx = sxx / n - mx * mx;
      const double vy = syy / n - my * my;
      const double cov = sxy / n - mx * my;
      total += ((2 * mx * my + c1) * (2 * cov + c2)) /
               ((mx * mx + my * my + c1) * (vx + vy + c2));
      ++windows;
    }
  }
  return total / static_cast<double>(windows);
}

}  // namespace

ImageRGB read_ppm(std::istream& in) {
  char magic[2] = {};
  if (!in.read(magic, 2) || magic[0] != 'P' || magic[1] != '6') {
    malformed("expected P6 magic number");
  }
  const long width = header_number(in, "width");
  const long height = header_number(in, "height");
  const long maxval = header_number(in, "maxval");
  if (width <= 0 || height <= 0) malformed("image dimensions must be positive");
  if (maxval != 255) {
    throw FormatError("UnsupportedMaxval",
                      "only maxval 255 is supported, got " + std::to_string(maxval));
  }
  if (!std::isspace(in.get())) malformed("missing whitespace after maxval");
  ImageRGB img(width, height);
  in.read(reinterpret_cast<char*>(img.pixels.data()),
          static_cast<std::streamsize>(img.pixels.size()));
  if (in.gcount() != static_cast<std::streamsize>(img.pixels.size())) {
    throw FormatError("TruncatedPayload",
                      "expected " + std::to_string(img.pixels.size()) +
                          " payload bytes, got " + std::to_string(in.gcount()));
  }
  return img;
}

ImageRGB read_ppm_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("FileNotFound", "cannot open " + path.string());
  return read_ppm(in);
}

void write_ppm(std::ostream& out, const ImageRGB& img) {
  out << "P6\n" << img.width << ' ' << img.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.pixels.data()),
            static_cast<std::streamsize>(img.pixels.size()));
}

void write_ppm_file(const std::filesystem::path& path, const ImageRGB& img) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("FileNotWritable", "cannot write " + path.string());
  write_ppm(out, img);
}

Tensor3 image_to_tensor(const ImageRGB& img) {
  Tensor3 a(img.height, img.width, 3);
  for (Index r = 0; r < img.height; ++r)
    for (Index c = 0; c < img.width; ++c)
      for (int ch = 0; ch < 3; ++ch) a(r, c, ch) = img.at(r, c, ch);
  return a;
}

ImageRGB tensor_to_image(const Tensor3& a) {
  if (a.depth() != 3) throw DimensionMismatch("image tensors need 3 slices");
  ImageRGB img(a.cols(), a.rows());
  for (Index r = 0; r < a.rows(); ++r)
    for (Index c = 0; c < a.cols(); ++c)
      for (int ch = 0; ch < 3; ++ch) {
        const double v = std::round(a(r, c, ch).real());
        img.at(r, c, ch) = static_cast<std::uint8_t>(std::clamp(v, 0.0, 255.0));
      }
  return img;
}

double psnr(const ImageRGB& a, const ImageRGB& b) {
  check_same_shape(a, b);
  double sse = 0.0;
  for (std::size_t i = 0; i < a.pixels.size(); ++i) {
    const double d = static_cast<double>(a.pixels[i]) - b.pixels[i];
    sse += d * d;
  }
  if (sse == 0.0) return std::numeric_limits<double>::infinity();
  const double mse = sse / static_cast<double>(a.pixels.size());
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

double ssim(const ImageRGB& a, const ImageRGB& b) {
  check_same_shape(a, b);
  if (a.width < kWindow || a.height < kWindow) {
    throw TooSmall("SSIM needs images of at least 8x8 pixels");
  }
  double sum = 0.0;
  for (int ch = 0; ch < 3; ++ch) sum += channel_ssim(a, b, ch);
  return sum / 3.0;
}

CompressionResult compress(const ImageRGB& img, Index k, const Transform& t,
                           const ToleranceConfig& tol) {
  if (t.size() != 3) throw DimensionMismatch("image transforms must be 3x3");
  const TensorQDR f = truncated_qdr(image_to_tensor(img), t, k, tol);
  CompressionResult res;
  res.k = k;
  res.reconstructed = tensor_to_image(reconstruct(f, t));
  res.psnr_db = psnr(img, res.reconstructed);
  if (img.width >= kWindow && img.height >= kWindow) {
    res.ssim = ssim(img, res.reconstructed);
  }
  const double m = static_cast<double>(img.height);
  const double n = static_cast<double>(img.width);
  const double kk = static_cast<double>(k);
  res.storage_ratio = kk * (m + n + kk) / (m * n);
  return res;
}

}  // namespace mqdr
