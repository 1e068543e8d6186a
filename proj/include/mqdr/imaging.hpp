#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "mqdr/tensor.hpp"

namespace mqdr {

/// 8-bit RGB image, row-major with interleaved channels.
struct ImageRGB {
  Index width = 0;
  Index height = 0;
  std::vector<std::uint8_t> pixels;

  ImageRGB() = default;
  ImageRGB(Index w, Index h)
      : width(w), height(h), pixels(static_cast<std::size_t>(w * h * 3)) {}

  std::uint8_t& at(Index row, Index col, int channel) {
    return pixels[static_cast<std::size_t>((row * width + col) * 3 + channel)];
  }
  std::uint8_t at(Index row, Index col, int channel) const {
    return pixels[static_cast<std::size_t>((row * width + col) * 3 + channel)];
  }
  friend bool operator==(const ImageRGB&, const ImageRGB&) = default;
};

/// Binary P6 with maxval 255. Comments (`#` to end of line) are allowed
/// between header fields. Errors are FormatError named MalformedHeader,
/// UnsupportedMaxval or TruncatedPayload.
ImageRGB read_ppm(std::istream& in);
ImageRGB read_ppm_file(const std::filesystem::path& path);
void write_ppm(std::ostream& out, const ImageRGB& img);
void write_ppm_file(const std::filesystem::path& path, const ImageRGB& img);

/// height x width x 3 real tensor of channel values.
Tensor3 image_to_tensor(const ImageRGB& img);
/// Real parts rounded half away from zero, then clamped to [0, 255].
ImageRGB tensor_to_image(const Tensor3& a);

/// Returns +infinity for identical images.
double psnr(const ImageRGB& a, const ImageRGB& b);
/// Mean SSIM over 8x8 windows at stride 1, averaged over the channels.
/// Throws TooSmall when either side is below 8.
double ssim(const ImageRGB& a, const ImageRGB& b);

struct CompressionResult {
  Index k = 0;
  ImageRGB reconstructed;
  double psnr_db = 0.0;
  /// Empty when the image is too small for the SSIM window.
  std::optional<double> ssim;
  /// k (m + n + k) / (m n): stored factor entries per channel slice relative
  /// to the raw slice.
  double storage_ratio = 0.0;
};

/// Truncated QDR at rank k (1 <= k <= min(height, width)), reconstructed and
/// scored against the input.
CompressionResult compress(const ImageRGB& img, Index k, const Transform& t,
                           const ToleranceConfig& tol = {});

}  // namespace mqdr
