#include "blpr/image.hpp"

#include <algorithm>

#include "blpr/error.hpp"
#include "blpr/kernels.hpp"

namespace blpr {
namespace {

// Half-pixel-center source coordinate for bilinear sampling.
struct Sample {
  int i0, i1;
  double frac;
};

Sample sample_coord(int out_idx, int out_n, int in_n) {
  const double src = (out_idx + 0.5) * static_cast<double>(in_n) / out_n - 0.5;
  double fl = std::floor(src);
  int i0 = static_cast<int>(fl);
  double frac = src - fl;
  if (i0 < 0) {
    i0 = 0;
    frac = 0.0;
  }
  int i1 = i0 + 1;
  if (i1 > in_n - 1) {
    i1 = in_n - 1;
    if (i0 > i1) i0 = i1;
    if (i0 == i1) frac = 0.0;
  }
  return {i0, i1, frac};
}

template <int Channels>
void resize_plane(const std::uint8_t* src, int in_w, int in_h, std::uint8_t* dst, int out_w,
                  int out_h) {
  std::vector<Sample> xs(static_cast<std::size_t>(out_w));
  for (int x = 0; x < out_w; ++x) xs[static_cast<std::size_t>(x)] = sample_coord(x, out_w, in_w);
  for (int y = 0; y < out_h; ++y) {
    const Sample sy = sample_coord(y, out_h, in_h);
    const std::uint8_t* row0 = src + static_cast<std::size_t>(sy.i0) * in_w * Channels;
    const std::uint8_t* row1 = src + static_cast<std::size_t>(sy.i1) * in_w * Channels;
    std::uint8_t* out_row = dst + static_cast<std::size_t>(y) * out_w * Channels;
    for (int x = 0; x < out_w; ++x) {
      const Sample& sx = xs[static_cast<std::size_t>(x)];
      for (int c = 0; c < Channels; ++c) {
        const double p00 = row0[sx.i0 * Channels + c];
        const double p10 = row0[sx.i1 * Channels + c];
        const double p01 = row1[sx.i0 * Channels + c];
        const double p11 = row1[sx.i1 * Channels + c];
        const double top = (1.0 - sx.frac) * p00 + sx.frac * p10;
        const double bot = (1.0 - sx.frac) * p01 + sx.frac * p11;
        const double v = (1.0 - sy.frac) * top + sy.frac * bot;
        out_row[x * Channels + c] = clamp_u8(round_half_away(v));
      }
    }
  }
}

}  // namespace

RgbImage resize(const RgbImage& img, int out_w, int out_h) {
  if (out_w < 1 || out_h < 1) fail(Errc::ZeroDimension, "resize target must be at least 1x1");
  RgbImage out(out_w, out_h);
  resize_plane<3>(img.data.data(), img.width, img.height, out.data.data(), out_w, out_h);
  return out;
}

GrayImage resize(const GrayImage& img, int out_w, int out_h) {
  if (out_w < 1 || out_h < 1) fail(Errc::ZeroDimension, "resize target must be at least 1x1");
  GrayImage out(out_w, out_h);
  resize_plane<1>(img.data.data(), img.width, img.height, out.data.data(), out_w, out_h);
  return out;
}

GrayImage to_grayscale(const RgbImage& img) {
  GrayImage out(img.width, img.height);
  kernels::ops().luma_row(img.data.data(), out.data.data(),
                          static_cast<std::size_t>(img.width) * img.height);
  return out;
}

RgbImage gray_to_rgb(const GrayImage& img) {
  RgbImage out(img.width, img.height);
  for (std::size_t i = 0; i < img.data.size(); ++i) {
    out.data[3 * i + 0] = img.data[i];
    out.data[3 * i + 1] = img.data[i];
    out.data[3 * i + 2] = img.data[i];
  }
  return out;
}

RgbImage binary_to_rgb(const BinaryImage& img) { return gray_to_rgb(binary_to_gray(img)); }

GrayImage binary_to_gray(const BinaryImage& img) {
  GrayImage out(img.width, img.height);
  for (std::size_t i = 0; i < img.data.size(); ++i) out.data[i] = img.data[i] ? 255 : 0;
  return out;
}

}  // namespace blpr
