#include "blpr/preprocess.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "blpr/error.hpp"
#include "blpr/kernels.hpp"

namespace blpr {

StructuringElement StructuringElement::full(int w, int h) {
  if (w < 1 || h < 1 || w % 2 == 0 || h % 2 == 0)
    fail(Errc::ShapeMismatch, "structuring element dimensions must be odd and >= 1");
  StructuringElement se;
  se.width = w;
  se.height = h;
  se.mask.assign(static_cast<std::size_t>(w) * h, 1);
  return se;
}

double otsu_score(std::uint64_t count0, std::uint64_t sum0, std::uint64_t count1,
                  std::uint64_t sum1, std::uint64_t total) {
  if (count0 == 0 || count1 == 0) return 0.0;
  const double w0 = static_cast<double>(count0) / static_cast<double>(total);
  const double w1 = static_cast<double>(count1) / static_cast<double>(total);
  const double mu0 = static_cast<double>(sum0) / static_cast<double>(count0);
  const double mu1 = static_cast<double>(sum1) / static_cast<double>(count1);
  const double d = mu0 - mu1;
  return ((w0 * w1) * d) * d;
}

int otsu_threshold(const GrayImage& img) {
  std::array<std::uint64_t, 256> hist{};
  for (std::uint8_t v : img.data) ++hist[v];

  int distinct = 0;
  for (const auto c : hist)
    if (c > 0) ++distinct;
  if (distinct < 2) fail(Errc::ConstantImage, "otsu needs at least two distinct intensities");

  const auto total = static_cast<std::uint64_t>(img.data.size());
  std::uint64_t total_sum = 0;
  for (int v = 0; v < 256; ++v) total_sum += hist[static_cast<std::size_t>(v)] * static_cast<std::uint64_t>(v);

  int best_t = 0;
  double best_score = -1.0;
  std::uint64_t c0 = 0, s0 = 0;
  for (int t = 0; t <= 254; ++t) {
    c0 += hist[static_cast<std::size_t>(t)];
    s0 += hist[static_cast<std::size_t>(t)] * static_cast<std::uint64_t>(t);
    const double score = otsu_score(c0, s0, total - c0, total_sum - s0, total);
    if (score > best_score) {
      best_score = score;
      best_t = t;
    }
  }
  return best_t;
}

BinaryImage binarize(const GrayImage& img, int t) {
  BinaryImage out(img.width, img.height);
  if (t < 0) {
    std::fill(out.data.begin(), out.data.end(), 1);
    return out;
  }
  const std::uint8_t tu = t > 255 ? 255 : static_cast<std::uint8_t>(t);
  kernels::ops().threshold_row(img.data.data(), out.data.data(), img.data.size(), tu);
  return out;
}

GrayImage stretch_contrast(const GrayImage& img, double low_pct, double high_pct) {
  if (!(low_pct >= 0.0 && low_pct < high_pct && high_pct <= 100.0))
    fail(Errc::InvalidPercentiles, "need 0 <= low < high <= 100");
  if (img.data.empty()) return img;

  std::array<std::uint64_t, 256> hist{};
  for (std::uint8_t v : img.data) ++hist[v];
  const auto total = static_cast<std::uint64_t>(img.data.size());

  // Nearest-rank percentile over the intensity histogram.
  const auto percentile = [&](double p) -> int {
    auto rank = static_cast<std::uint64_t>(std::ceil(p * static_cast<double>(total) / 100.0));
    if (rank < 1) rank = 1;
    std::uint64_t cum = 0;
    for (int v = 0; v < 256; ++v) {
      cum += hist[static_cast<std::size_t>(v)];
      if (cum >= rank) return v;
    }
    return 255;
  };

  const int lo = percentile(low_pct);
  const int hi = percentile(high_pct);
  if (hi == lo) return img;

  std::array<std::uint8_t, 256> lut{};
  for (int v = 0; v < 256; ++v) {
    const double mapped = 255.0 * (static_cast<double>(v) - lo) / (static_cast<double>(hi) - lo);
    lut[static_cast<std::size_t>(v)] = clamp_u8(round_half_away(mapped));
  }
  GrayImage out(img.width, img.height);
  for (std::size_t i = 0; i < img.data.size(); ++i) out.data[i] = lut[img.data[i]];
  return out;
}

BinaryImage dilate(const BinaryImage& img, const StructuringElement& se) {
  BinaryImage out(img.width, img.height);
  const int w = img.width;
  const int h = img.height;
  const auto& k = kernels::ops();
  // out |= img translated by each true cell's offset from the anchor.
  for (int cy = 0; cy < se.height; ++cy) {
    for (int cx = 0; cx < se.width; ++cx) {
      if (!se.cell(cx, cy)) continue;
      const int ox = cx - se.anchor_x();
      const int oy = cy - se.anchor_y();
      const int x_start = std::max(0, ox);
      const int x_end = std::min(w - 1, w - 1 + ox);
      if (x_start > x_end) continue;
      const int len = x_end - x_start + 1;
      for (int y = 0; y < h; ++y) {
        const int sy = y - oy;
        if (sy < 0 || sy >= h) continue;
        k.or_row(out.data.data() + static_cast<std::size_t>(y) * w + x_start,
                 img.data.data() + static_cast<std::size_t>(sy) * w + (x_start - ox),
                 static_cast<std::size_t>(len));
      }
    }
  }
  return out;
}

GrayImage mask_multiply(const BinaryImage& mask, const GrayImage& img) {
  if (mask.width != img.width || mask.height != img.height)
    fail(Errc::DimensionMismatch, "mask and image dimensions differ");
  GrayImage out(img.width, img.height);
  kernels::ops().select_row(mask.data.data(), img.data.data(), out.data.data(), img.data.size());
  return out;
}

}  // namespace blpr
