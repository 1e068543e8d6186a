#include <cmath>
#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>

#include "image_support.hpp"
#include "mqdr/errors.hpp"
#include "mqdr/imaging.hpp"

namespace mqdr {
namespace {

std::string named_error(const std::string& bytes) {
  std::istringstream in(bytes);
  try {
    read_ppm(in);
  } catch (const FormatError& e) {
    return std::string(e.name());
  }
  return "none";
}

TEST(Ppm, SingleWhitePixel) {
  std::istringstream in(std::string("P6\n1 1\n255\n") + "\xff\xff\xff");
  const ImageRGB img = read_ppm(in);
  EXPECT_EQ(img.width, 1);
  EXPECT_EQ(img.height, 1);
  EXPECT_EQ(img.pixels, (std::vector<std::uint8_t>{255, 255, 255}));
}

TEST(Ppm, CommentsAndRoundTrip) {
  const ImageRGB img = testing::natural_like_image(5, 7, 3);
  std::ostringstream out;
  write_ppm(out, img);
  std::string bytes = out.str();
  EXPECT_EQ(bytes.substr(0, 11), "P6\n7 5\n255\n");
  bytes.insert(3, "# made by hand\n");
  std::istringstream in(bytes);
  EXPECT_EQ(read_ppm(in), img);
}

TEST(Ppm, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "mqdr_imaging_test.ppm";
  const ImageRGB img = testing::rank_one_image(4, 6);
  write_ppm_file(path, img);
  EXPECT_EQ(read_ppm_file(path), img);
  std::filesystem::remove(path);
}

TEST(Ppm, NamedErrors) {
  EXPECT_EQ(named_error("P3\n1 1\n255\n000"), "MalformedHeader");
  EXPECT_EQ(named_error("P6\n1\n"), "MalformedHeader");
  EXPECT_EQ(named_error("P6\n0 1\n255\n"), "MalformedHeader");
  EXPECT_EQ(named_error("P6\n1 1\n65535\n012345"), "UnsupportedMaxval");
  EXPECT_EQ(named_error("P6\n1 1\n15\n012"), "UnsupportedMaxval");
  EXPECT_EQ(named_error("P6\n2 1\n255\n01234"), "TruncatedPayload");
  try {
    read_ppm_file("/nonexistent/x.ppm");
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_EQ(e.name(), "FileNotFound");
  }
}

TEST(Conversion, TensorLayout) {
  const ImageRGB img = testing::natural_like_image(3, 4, 5);
  const Tensor3 a = image_to_tensor(img);
  EXPECT_EQ(a.rows(), 3);
  EXPECT_EQ(a.cols(), 4);
  EXPECT_EQ(a.depth(), 3);
  EXPECT_EQ(a(2, 1, 2).real(), img.at(2, 1, 2));
  EXPECT_EQ(tensor_to_image(a), img);
}

TEST(Conversion, RoundingAndClamping) {
  Tensor3 a(1, 5, 3);
  const double values[] = {255.7, -3.2, 2.5, 0.49, 127.5};
  for (Index j = 0; j < 5; ++j)
    for (Index k = 0; k < 3; ++k) a(0, j, k) = values[j];
  const ImageRGB img = tensor_to_image(a);
  EXPECT_EQ(img.at(0, 0, 0), 255);
  EXPECT_EQ(img.at(0, 1, 0), 0);
  EXPECT_EQ(img.at(0, 2, 1), 3);
  EXPECT_EQ(img.at(0, 3, 2), 0);
  EXPECT_EQ(img.at(0, 4, 0), 128);
}

TEST(Psnr, ClosedForms) {
  const ImageRGB black = testing::constant_image(3, 3, 0);
  const ImageRGB white = testing::constant_image(3, 3, 255);
  EXPECT_TRUE(std::isinf(psnr(black, black)));
  EXPECT_NEAR(psnr(black, white), 0.0, 1e-12);
  ImageRGB a(1, 1), b(1, 1);
  b.at(0, 0, 1) = 16;
  const double want = 10.0 * std::log10(255.0 * 255.0 / (256.0 / 3.0));
  EXPECT_NEAR(psnr(a, b), want, 1e-12);
  EXPECT_NEAR(psnr(a, b), 28.82, 5e-3);
  EXPECT_THROW(psnr(a, black), DimensionMismatch);
}

TEST(Psnr, Symmetric) {
  const ImageRGB a = testing::natural_like_image(9, 10, 1);
  const ImageRGB b = testing::natural_like_image(9, 10, 2);
  EXPECT_EQ(psnr(a, b), psnr(b, a));
  EXPECT_GE(psnr(a, b), 0.0);
}

TEST(Ssim, ConstantImagesClosedForm) {
  const double c1 = (0.01 * 255) * (0.01 * 255);
  for (auto [l1, l2] : {std::pair{0, 255}, std::pair{40, 200}, std::pair{90, 90}}) {
    const ImageRGB a = testing::constant_image(9, 11, static_cast<std::uint8_t>(l1));
    const ImageRGB b = testing::constant_image(9, 11, static_cast<std::uint8_t>(l2));
    const double want = (2.0 * l1 * l2 + c1) / (double(l1) * l1 + double(l2) * l2 + c1);
    EXPECT_NEAR(ssim(a, b), want, 1e-12) << l1 << ' ' << l2;
  }
}

TEST(Ssim, RangeSymmetryAndIdentity) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const ImageRGB a = testing::natural_like_image(12, 14, seed);
    const ImageRGB b = testing::noisy_blob_image(12, 14, seed + 100);
    const double s = ssim(a, b);
    EXPECT_GE(s, -1.0);
    EXPECT_LE(s, 1.0);
    EXPECT_NEAR(s, ssim(b, a), 1e-14);
    EXPECT_NEAR(ssim(a, a), 1.0, 1e-14);
  }
}

TEST(Ssim, InvertedImageIsAnticorrelated) {
  ImageRGB a = testing::natural_like_image(16, 16, 9);
  ImageRGB b = a;
  for (auto& v : b.pixels) v = static_cast<std::uint8_t>(255 - v);
  EXPECT_LT(ssim(a, b), 0.0);
}

TEST(Ssim, TooSmall) {
  const ImageRGB a = testing::constant_image(7, 20, 3);
  EXPECT_THROW(ssim(a, a), TooSmall);
}

TEST(Compress, RankOneImageAtRankOne) {
  const ImageRGB img = testing::rank_one_image(16, 20);
  const CompressionResult r = compress(img, 1, Transform::identity(3));
  EXPECT_GE(r.psnr_db, 45.0);
  EXPECT_EQ(r.k, 1);
  EXPECT_NEAR(r.storage_ratio, 1.0 * (16 + 20 + 1) / (16.0 * 20.0), 1e-15);
}

TEST(Compress, FullRankIsNearExact) {
  for (const Transform& t : {Transform::identity(3), Transform::dct(3), Transform::seeded_random(3, 5)}) {
    const ImageRGB img = testing::natural_like_image(24, 18, 4);
    const CompressionResult r = compress(img, 18, t);
    EXPECT_GE(r.psnr_db, 45.0);
    ASSERT_TRUE(r.ssim.has_value());
    EXPECT_GE(*r.ssim, 0.99);
  }
}

TEST(Compress, SweepIsMonotone) {
  const ImageRGB img = testing::natural_like_image(32, 40, 6);
  double last_psnr = 0.0;
  double last_ssim = -1.0;
  for (Index k : {1, 2, 4, 8, 16, 32}) {
    const CompressionResult r = compress(img, k, Transform::dct(3));
    EXPECT_GE(r.psnr_db, last_psnr - 0.1) << k;
    EXPECT_GE(*r.ssim, last_ssim - 1e-3) << k;
    last_psnr = r.psnr_db;
    last_ssim = *r.ssim;
  }
  EXPECT_GE(last_psnr, 45.0);
}

TEST(Compress, PsnrMonotoneOnNoisyImages) {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const ImageRGB img = testing::noisy_blob_image(24, 30, seed);
    double last = 0.0;
    for (Index k : {1, 2, 4, 8, 16, 24}) {
      const CompressionResult r = compress(img, k, Transform::identity(3));
      EXPECT_GE(r.psnr_db, last - 0.1) << seed << ' ' << k;
      last = r.psnr_db;
    }
  }
}

TEST(Compress, SmallImageHasNoSsim) {
  const CompressionResult r = compress(testing::rank_one_image(4, 5), 2, Transform::identity(3));
  EXPECT_FALSE(r.ssim.has_value());
}

TEST(Compress, ArgumentChecks) {
  const ImageRGB img = testing::rank_one_image(4, 5);
  EXPECT_THROW(compress(img, 0, Transform::identity(3)), InvalidArgument);
  EXPECT_THROW(compress(img, 5, Transform::identity(3)), InvalidArgument);
  EXPECT_THROW(compress(img, 1, Transform::identity(2)), DimensionMismatch);
}

}  // namespace
}  // namespace mqdr
