#pragma once

#include <cstdint>
#include <vector>

#include "blpr/image.hpp"

namespace blpr {

// Boolean morphology kernel. Odd dimensions, anchor at the center cell.
struct StructuringElement {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> mask;  // row-major, 0/1

  static StructuringElement full(int w, int h);

  int anchor_x() const { return (width - 1) / 2; }
  int anchor_y() const { return (height - 1) / 2; }
  bool cell(int x, int y) const { return mask[static_cast<std::size_t>(y) * width + x] != 0; }
};

// Global threshold maximizing between-class variance over t in [0,254]
// (class 0: pixels <= t, class 1: pixels > t); smallest t wins ties.
// Throws ConstantImage when the image has a single distinct intensity.
int otsu_threshold(const GrayImage& img);

// Between-class variance for a given split, computed from exact integer
// class counts/sums. Exposed so the exhaustive test oracle and the
// incremental implementation share one canonical formula shape.
double otsu_score(std::uint64_t count0, std::uint64_t sum0, std::uint64_t count1,
                  std::uint64_t sum1, std::uint64_t total);

// foreground(x,y) = pixel(x,y) > t
BinaryImage binarize(const GrayImage& img, int t);

// Percentile contrast stretch (nearest-rank percentiles). Returns the input
// unchanged when the two percentile intensities coincide.
GrayImage stretch_contrast(const GrayImage& img, double low_pct, double high_pct);

// Binary dilation with border-as-background semantics.
BinaryImage dilate(const BinaryImage& img, const StructuringElement& se);

// out = img where mask is foreground, 0 elsewhere. Throws DimensionMismatch.
GrayImage mask_multiply(const BinaryImage& mask, const GrayImage& img);

}  // namespace blpr
