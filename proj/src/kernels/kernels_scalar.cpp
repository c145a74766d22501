#include "blpr/kernels.hpp"

#include <cmath>

// Scalar reference kernels. These define the semantics; the AVX2 variants in
// kernels_avx2.cpp must match them bit for bit.

namespace blpr::kernels {
namespace {

void luma_row_scalar(const std::uint8_t* rgb, std::uint8_t* gray, std::size_t npix) {
  for (std::size_t i = 0; i < npix; ++i) {
    const double r = static_cast<double>(rgb[3 * i + 0]);
    const double g = static_cast<double>(rgb[3 * i + 1]);
    const double b = static_cast<double>(rgb[3 * i + 2]);
    const double l = (0.299 * r + 0.587 * g) + 0.114 * b;
    double v = std::floor(l + 0.5);
    if (v > 255.0) v = 255.0;
    gray[i] = static_cast<std::uint8_t>(v);
  }
}

void threshold_row_scalar(const std::uint8_t* src, std::uint8_t* dst, std::size_t n,
                          std::uint8_t t) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = src[i] > t ? 1 : 0;
}

void select_row_scalar(const std::uint8_t* mask, const std::uint8_t* src, std::uint8_t* dst,
                       std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = mask[i] ? src[i] : 0;
}

void or_row_scalar(std::uint8_t* dst, const std::uint8_t* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] |= src[i];
}

void relu_row_scalar(const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = x[i] > 0.0 ? x[i] : 0.0;
}

void relu_grad_row_scalar(const double* x, const double* dy, double* dx, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dx[i] = x[i] > 0.0 ? dy[i] : 0.0;
}

void add_row_scalar(double* acc, const double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] += x[i];
}

void axpy_row_scalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = y[i] + a * x[i];
}

void sharpen_row_scalar(const double* in, const double* blur, double* out, double amount,
                        std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = in[i] + amount * (in[i] - blur[i]);
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    s0 = s0 + a[i + 0] * b[i + 0];
    s1 = s1 + a[i + 1] * b[i + 1];
    s2 = s2 + a[i + 2] * b[i + 2];
    s3 = s3 + a[i + 3] * b[i + 3];
  }
  double sum = (s0 + s1) + (s2 + s3);
  for (; i < n; ++i) sum = sum + a[i] * b[i];
  return sum;
}

void correlate_valid_row_scalar(const double* padded, double* out, std::size_t n,
                                const double* taps, std::size_t ntaps) {
  for (std::size_t x = 0; x < n; ++x) {
    double s = 0.0;
    for (std::size_t t = 0; t < ntaps; ++t) s = s + taps[t] * padded[x + t];
    out[x] = s;
  }
}

void conv3x3_acc_scalar(const double* in, const double* k9, double* out, std::size_t h,
                        std::size_t w) {
  for (std::size_t oy = 0; oy < h; ++oy) {
    for (std::size_t ox = 0; ox < w; ++ox) {
      double s = out[oy * w + ox];
      for (int ky = 0; ky < 3; ++ky) {
        const std::ptrdiff_t iy = static_cast<std::ptrdiff_t>(oy) + ky - 1;
        if (iy < 0 || iy >= static_cast<std::ptrdiff_t>(h)) continue;
        for (int kx = 0; kx < 3; ++kx) {
          const std::ptrdiff_t ix = static_cast<std::ptrdiff_t>(ox) + kx - 1;
          if (ix < 0 || ix >= static_cast<std::ptrdiff_t>(w)) continue;
          s = s + k9[ky * 3 + kx] * in[iy * w + ix];
        }
      }
      out[oy * w + ox] = s;
    }
  }
}

void adam_row_scalar(double* w, double* m, double* v, const double* g, std::size_t n, double lr,
                     double beta1, double beta2, double eps, double bc1, double bc2) {
  const double one_m_b1 = 1.0 - beta1;
  const double one_m_b2 = 1.0 - beta2;
  for (std::size_t i = 0; i < n; ++i) {
    const double gi = g[i];
    const double mi = beta1 * m[i] + one_m_b1 * gi;
    const double vi = beta2 * v[i] + one_m_b2 * (gi * gi);
    m[i] = mi;
    v[i] = vi;
    const double mhat = mi / bc1;
    const double vhat = vi / bc2;
    w[i] = w[i] - (lr * mhat) / (std::sqrt(vhat) + eps);
  }
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops table = {
      "scalar",
      luma_row_scalar,
      threshold_row_scalar,
      select_row_scalar,
      or_row_scalar,
      relu_row_scalar,
      relu_grad_row_scalar,
      add_row_scalar,
      axpy_row_scalar,
      sharpen_row_scalar,
      dot_scalar,
      correlate_valid_row_scalar,
      conv3x3_acc_scalar,
      adam_row_scalar,
  };
  return table;
}

}  // namespace blpr::kernels
