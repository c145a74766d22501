#pragma once

#include <string>

#include "blpr/image.hpp"

namespace blpr {

// Codecs: PNG (8-bit gray/RGB/palette/alpha variants, no interlace) and
// binary PPM (P6) / PGM (P5). Format is picked by file extension on save and
// by magic bytes on load. Grayscale sources expand to RGB by replication;
// alpha channels are dropped.
//
// Errors: FileNotFound, UnsupportedFormat, CorruptData on load; IoError on
// save.

RgbImage load_image(const std::string& path);

void save_image(const RgbImage& img, const std::string& path);
void save_image(const GrayImage& img, const std::string& path);
// Foreground encodes as 255, background as 0.
void save_image(const BinaryImage& img, const std::string& path);

// In-memory PNG codec, used by the file API and by tests.
std::string encode_png_rgb(const RgbImage& img);
std::string encode_png_gray(const GrayImage& img);
RgbImage decode_png(const std::string& bytes);

}  // namespace blpr
