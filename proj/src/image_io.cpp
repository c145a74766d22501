#include "blpr/image_io.hpp"

#include <zlib.h>

#include <cctype>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <vector>

#include "blpr/error.hpp"

namespace blpr {
namespace {

constexpr unsigned char kPngSig[8] = {137, 80, 78, 71, 13, 10, 26, 10};

std::uint32_t be32(const unsigned char* p) {
  return (static_cast<std::uint32_t>(p[0]) << 24) | (static_cast<std::uint32_t>(p[1]) << 16) |
         (static_cast<std::uint32_t>(p[2]) << 8) | static_cast<std::uint32_t>(p[3]);
}

void put_be32(std::string& out, std::uint32_t v) {
  out.push_back(static_cast<char>((v >> 24) & 0xff));
  out.push_back(static_cast<char>((v >> 16) & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>(v & 0xff));
}

void append_chunk(std::string& out, const char type[4], const std::string& data) {
  put_be32(out, static_cast<std::uint32_t>(data.size()));
  const std::size_t start = out.size();
  out.append(type, 4);
  out.append(data);
  const auto* p = reinterpret_cast<const unsigned char*>(out.data() + start);
  const auto crc = static_cast<std::uint32_t>(
      ::crc32(0L, p, static_cast<uInt>(out.size() - start)));
  put_be32(out, crc);
}

std::string zlib_deflate(const unsigned char* data, std::size_t n) {
  uLongf bound = ::compressBound(static_cast<uLong>(n));
  std::string out(bound, '\0');
  if (::compress2(reinterpret_cast<Bytef*>(out.data()), &bound, data, static_cast<uLong>(n),
                  Z_DEFAULT_COMPRESSION) != Z_OK) {
    fail(Errc::IoError, "zlib compression failed");
  }
  out.resize(bound);
  return out;
}

std::vector<unsigned char> zlib_inflate(const unsigned char* data, std::size_t n,
                                        std::size_t expected) {
  std::vector<unsigned char> out(expected);
  uLongf dst_len = static_cast<uLongf>(expected);
  const int rc = ::uncompress(out.data(), &dst_len, data, static_cast<uLong>(n));
  if (rc != Z_OK || dst_len != expected) fail(Errc::CorruptData, "png: bad compressed stream");
  return out;
}

int paeth(int a, int b, int c) {
  const int p = a + b - c;
  const int pa = std::abs(p - a);
  const int pb = std::abs(p - b);
  const int pc = std::abs(p - c);
  if (pa <= pb && pa <= pc) return a;
  if (pb <= pc) return b;
  return c;
}

void unfilter(std::vector<unsigned char>& raw, int h, std::size_t row_bytes, int bpp) {
  for (int y = 0; y < h; ++y) {
    unsigned char* row = raw.data() + static_cast<std::size_t>(y) * (row_bytes + 1);
    const unsigned char filter = row[0];
    unsigned char* cur = row + 1;
    const unsigned char* prev =
        y > 0 ? raw.data() + static_cast<std::size_t>(y - 1) * (row_bytes + 1) + 1 : nullptr;
    switch (filter) {
      case 0:
        break;
      case 1:
        for (std::size_t i = bpp; i < row_bytes; ++i) cur[i] = static_cast<unsigned char>(cur[i] + cur[i - bpp]);
        break;
      case 2:
        if (prev != nullptr)
          for (std::size_t i = 0; i < row_bytes; ++i) cur[i] = static_cast<unsigned char>(cur[i] + prev[i]);
        break;
      case 3:
        for (std::size_t i = 0; i < row_bytes; ++i) {
          const int left = i >= static_cast<std::size_t>(bpp) ? cur[i - bpp] : 0;
          const int up = prev != nullptr ? prev[i] : 0;
          cur[i] = static_cast<unsigned char>(cur[i] + (left + up) / 2);
        }
        break;
      case 4:
        for (std::size_t i = 0; i < row_bytes; ++i) {
          const int left = i >= static_cast<std::size_t>(bpp) ? cur[i - bpp] : 0;
          const int up = prev != nullptr ? prev[i] : 0;
          const int ul = (prev != nullptr && i >= static_cast<std::size_t>(bpp)) ? prev[i - bpp] : 0;
          cur[i] = static_cast<unsigned char>(cur[i] + paeth(left, up, ul));
        }
        break;
      default:
        fail(Errc::CorruptData, "png: unknown filter type");
    }
  }
}

std::string encode_png(const unsigned char* pixels, int w, int h, int channels) {
  std::string out(reinterpret_cast<const char*>(kPngSig), 8);
  std::string ihdr;
  put_be32(ihdr, static_cast<std::uint32_t>(w));
  put_be32(ihdr, static_cast<std::uint32_t>(h));
  ihdr.push_back(8);                              // bit depth
  ihdr.push_back(channels == 3 ? 2 : 0);          // color type
  ihdr.push_back(0);                              // compression
  ihdr.push_back(0);                              // filter
  ihdr.push_back(0);                              // interlace
  append_chunk(out, "IHDR", ihdr);

  const std::size_t row_bytes = static_cast<std::size_t>(w) * channels;
  std::vector<unsigned char> raw((row_bytes + 1) * static_cast<std::size_t>(h));
  for (int y = 0; y < h; ++y) {
    unsigned char* row = raw.data() + static_cast<std::size_t>(y) * (row_bytes + 1);
    row[0] = 0;  // filter: none
    std::memcpy(row + 1, pixels + static_cast<std::size_t>(y) * row_bytes, row_bytes);
  }
  append_chunk(out, "IDAT", zlib_deflate(raw.data(), raw.size()));
  append_chunk(out, "IEND", "");
  return out;
}

std::string read_file(const std::string& path) {
  if (!std::filesystem::exists(path)) fail(Errc::FileNotFound, path);
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::FileNotFound, path);
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (!in.good() && !in.eof()) fail(Errc::IoError, "read failed: " + path);
  return bytes;
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(Errc::IoError, "cannot open for write: " + path);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out.good()) fail(Errc::IoError, "write failed: " + path);
}

// --- Netpbm ---------------------------------------------------------------

// Reads the next token, skipping whitespace and '#' comments.
std::string pnm_token(const std::string& s, std::size_t& pos) {
  while (pos < s.size()) {
    const char c = s[pos];
    if (c == '#') {
      while (pos < s.size() && s[pos] != '\n') ++pos;
    } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f') {
      ++pos;
    } else {
      break;
    }
  }
  const std::size_t start = pos;
  while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  if (start == pos) fail(Errc::CorruptData, "pnm: truncated header");
  return s.substr(start, pos - start);
}

int pnm_int(const std::string& s, std::size_t& pos) {
  const std::string tok = pnm_token(s, pos);
  int v = 0;
  for (char c : tok) {
    if (c < '0' || c > '9') fail(Errc::CorruptData, "pnm: non-numeric header field");
    v = v * 10 + (c - '0');
    if (v > 1 << 30) fail(Errc::CorruptData, "pnm: header field out of range");
  }
  return v;
}

RgbImage decode_pnm(const std::string& bytes) {
  const bool is_p6 = bytes.compare(0, 2, "P6") == 0;
  const bool is_p5 = bytes.compare(0, 2, "P5") == 0;
  if (!is_p5 && !is_p6) fail(Errc::UnsupportedFormat, "pnm: only binary P5/P6 supported");
  std::size_t pos = 2;
  const int w = pnm_int(bytes, pos);
  const int h = pnm_int(bytes, pos);
  const int maxval = pnm_int(bytes, pos);
  if (w < 1 || h < 1) fail(Errc::CorruptData, "pnm: bad dimensions");
  if (maxval < 1 || maxval > 255) fail(Errc::UnsupportedFormat, "pnm: maxval must be in [1,255]");
  ++pos;  // single whitespace byte after maxval
  const int channels = is_p6 ? 3 : 1;
  const std::size_t need = static_cast<std::size_t>(w) * h * channels;
  if (bytes.size() < pos + need) fail(Errc::CorruptData, "pnm: truncated pixel data");
  RgbImage out(w, h);
  const auto* src = reinterpret_cast<const unsigned char*>(bytes.data() + pos);
  for (std::size_t i = 0; i < static_cast<std::size_t>(w) * h; ++i) {
    std::uint8_t rgb[3];
    for (int c = 0; c < 3; ++c) {
      unsigned v = src[i * channels + (is_p6 ? c : 0)];
      if (maxval != 255) v = static_cast<unsigned>((v * 255 + maxval / 2) / maxval);
      rgb[c] = static_cast<std::uint8_t>(v);
    }
    out.data[3 * i + 0] = rgb[0];
    out.data[3 * i + 1] = rgb[1];
    out.data[3 * i + 2] = rgb[2];
  }
  return out;
}

std::string encode_pnm(const unsigned char* pixels, int w, int h, int channels) {
  std::string out = channels == 3 ? "P6\n" : "P5\n";
  out += std::to_string(w) + " " + std::to_string(h) + "\n255\n";
  out.append(reinterpret_cast<const char*>(pixels), static_cast<std::size_t>(w) * h * channels);
  return out;
}

enum class Format { kPng, kPpm, kPgm };

Format format_for_path(const std::string& path) {
  const auto ext = std::filesystem::path(path).extension().string();
  if (ext == ".png" || ext == ".PNG") return Format::kPng;
  if (ext == ".ppm" || ext == ".PPM") return Format::kPpm;
  if (ext == ".pgm" || ext == ".PGM") return Format::kPgm;
  fail(Errc::UnsupportedFormat, "unknown image extension: " + path);
}

}  // namespace

RgbImage decode_png(const std::string& bytes) {
  if (bytes.size() < 8 || std::memcmp(bytes.data(), kPngSig, 8) != 0)
    fail(Errc::CorruptData, "png: bad signature");
  const auto* p = reinterpret_cast<const unsigned char*>(bytes.data());
  std::size_t pos = 8;
  int w = 0, h = 0, depth = 0, color = 0;
  std::string idat;
  std::vector<unsigned char> palette;
  bool seen_ihdr = false, seen_iend = false;
  while (pos + 12 <= bytes.size() && !seen_iend) {
    const std::uint32_t len = be32(p + pos);
    if (pos + 12 + len > bytes.size()) fail(Errc::CorruptData, "png: truncated chunk");
    const char* type = bytes.data() + pos + 4;
    const unsigned char* data = p + pos + 8;
    const std::uint32_t want_crc = be32(p + pos + 8 + len);
    const auto got_crc =
        static_cast<std::uint32_t>(::crc32(0L, p + pos + 4, static_cast<uInt>(len + 4)));
    if (want_crc != got_crc) fail(Errc::CorruptData, "png: chunk crc mismatch");
    if (std::memcmp(type, "IHDR", 4) == 0) {
      if (len != 13) fail(Errc::CorruptData, "png: bad IHDR");
      w = static_cast<int>(be32(data));
      h = static_cast<int>(be32(data + 4));
      depth = data[8];
      color = data[9];
      if (data[10] != 0 || data[11] != 0) fail(Errc::CorruptData, "png: bad IHDR methods");
      if (data[12] != 0) fail(Errc::UnsupportedFormat, "png: interlaced images unsupported");
      if (depth != 8) fail(Errc::UnsupportedFormat, "png: only 8-bit depth supported");
      if (color != 0 && color != 2 && color != 3 && color != 4 && color != 6)
        fail(Errc::UnsupportedFormat, "png: unsupported color type");
      if (w < 1 || h < 1) fail(Errc::CorruptData, "png: bad dimensions");
      seen_ihdr = true;
    } else if (std::memcmp(type, "PLTE", 4) == 0) {
      palette.assign(data, data + len);
    } else if (std::memcmp(type, "IDAT", 4) == 0) {
      idat.append(reinterpret_cast<const char*>(data), len);
    } else if (std::memcmp(type, "IEND", 4) == 0) {
      seen_iend = true;
    }
    pos += 12 + len;
  }
  if (!seen_ihdr || !seen_iend) fail(Errc::CorruptData, "png: missing IHDR/IEND");

  const int channels = color == 0 ? 1 : color == 2 ? 3 : color == 3 ? 1 : color == 4 ? 2 : 4;
  const std::size_t row_bytes = static_cast<std::size_t>(w) * channels;
  auto raw = zlib_inflate(reinterpret_cast<const unsigned char*>(idat.data()), idat.size(),
                          (row_bytes + 1) * static_cast<std::size_t>(h));
  unfilter(raw, h, row_bytes, channels);

  RgbImage out(w, h);
  for (int y = 0; y < h; ++y) {
    const unsigned char* row = raw.data() + static_cast<std::size_t>(y) * (row_bytes + 1) + 1;
    for (int x = 0; x < w; ++x) {
      std::uint8_t r, g, b;
      switch (color) {
        case 0:
          r = g = b = row[x];
          break;
        case 2:
          r = row[3 * x];
          g = row[3 * x + 1];
          b = row[3 * x + 2];
          break;
        case 3: {
          const std::size_t idx = static_cast<std::size_t>(row[x]) * 3;
          if (idx + 2 >= palette.size()) fail(Errc::CorruptData, "png: palette index out of range");
          r = palette[idx];
          g = palette[idx + 1];
          b = palette[idx + 2];
          break;
        }
        case 4:
          r = g = b = row[2 * x];
          break;
        default:  // 6
          r = row[4 * x];
          g = row[4 * x + 1];
          b = row[4 * x + 2];
          break;
      }
      auto* dst = out.pixel(x, y);
      dst[0] = r;
      dst[1] = g;
      dst[2] = b;
    }
  }
  return out;
}

std::string encode_png_rgb(const RgbImage& img) {
  return encode_png(img.data.data(), img.width, img.height, 3);
}

std::string encode_png_gray(const GrayImage& img) {
  return encode_png(img.data.data(), img.width, img.height, 1);
}

RgbImage load_image(const std::string& path) {
  const std::string bytes = read_file(path);
  if (bytes.size() >= 8 && std::memcmp(bytes.data(), kPngSig, 8) == 0) return decode_png(bytes);
  if (bytes.size() >= 2 && bytes[0] == 'P' && (bytes[1] == '5' || bytes[1] == '6'))
    return decode_pnm(bytes);
  fail(Errc::UnsupportedFormat, "unrecognized image format: " + path);
}

void save_image(const RgbImage& img, const std::string& path) {
  switch (format_for_path(path)) {
    case Format::kPng:
      write_file(path, encode_png_rgb(img));
      break;
    case Format::kPpm:
      write_file(path, encode_pnm(img.data.data(), img.width, img.height, 3));
      break;
    case Format::kPgm:
      fail(Errc::UnsupportedFormat, "refusing lossy RGB->PGM write: " + path);
  }
}

void save_image(const GrayImage& img, const std::string& path) {
  switch (format_for_path(path)) {
    case Format::kPng:
      write_file(path, encode_png_gray(img));
      break;
    case Format::kPgm:
      write_file(path, encode_pnm(img.data.data(), img.width, img.height, 1));
      break;
    case Format::kPpm: {
      const RgbImage rgb = gray_to_rgb(img);
      write_file(path, encode_pnm(rgb.data.data(), rgb.width, rgb.height, 3));
      break;
    }
  }
}

void save_image(const BinaryImage& img, const std::string& path) {
  save_image(binary_to_gray(img), path);
}

}  // namespace blpr
