#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace blpr {

// Row-major 8-bit rasters. BinaryImage stores 0/1 per pixel in memory and is
// encoded as 0/255 grayscale on disk.

struct RgbImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;  // width*height*3, interleaved R,G,B

  RgbImage() = default;
  RgbImage(int w, int h, std::uint8_t fill = 0)
      : width(w), height(h), data(static_cast<std::size_t>(w) * h * 3, fill) {}

  std::uint8_t* pixel(int x, int y) { return data.data() + (static_cast<std::size_t>(y) * width + x) * 3; }
  const std::uint8_t* pixel(int x, int y) const {
    return data.data() + (static_cast<std::size_t>(y) * width + x) * 3;
  }

  bool operator==(const RgbImage&) const = default;
};

struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;  // width*height intensities

  GrayImage() = default;
  GrayImage(int w, int h, std::uint8_t fill = 0)
      : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {}

  std::uint8_t& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
  std::uint8_t at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }

  bool operator==(const GrayImage&) const = default;
};

struct BinaryImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;  // width*height, 0 = background, 1 = foreground

  BinaryImage() = default;
  BinaryImage(int w, int h, std::uint8_t fill = 0)
      : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill ? 1 : 0) {}

  std::uint8_t& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
  std::uint8_t at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }

  bool operator==(const BinaryImage&) const = default;
};

// Bilinear resize with half-pixel centers; intensities produced by
// round-half-away-from-zero. Throws ZeroDimension when out_w/out_h < 1.
RgbImage resize(const RgbImage& img, int out_w, int out_h);
GrayImage resize(const GrayImage& img, int out_w, int out_h);

// ITU-R BT.601 luma: round(0.299 R + 0.587 G + 0.114 B).
GrayImage to_grayscale(const RgbImage& img);

// Channel replication, the inverse direction of to_grayscale.
RgbImage gray_to_rgb(const GrayImage& img);

RgbImage binary_to_rgb(const BinaryImage& img);
GrayImage binary_to_gray(const BinaryImage& img);

// Round half away from zero, shared by every stage that produces intensities.
inline double round_half_away(double v) {
  return v < 0.0 ? std::ceil(v - 0.5) : std::floor(v + 0.5);
}

inline std::uint8_t clamp_u8(double v) {
  if (v < 0.0) return 0;
  if (v > 255.0) return 255;
  return static_cast<std::uint8_t>(v);
}

}  // namespace blpr
