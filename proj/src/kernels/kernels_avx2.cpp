#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>

#include "blpr/kernels.hpp"

// AVX2 kernel variants. Bit-exact with the scalar references: vector lanes
// carry independent outputs, reductions replicate the 4-lane blocked order,
// and mul/add stay separate (no fma).

namespace blpr::kernels {
namespace {

void luma_row_avx2(const std::uint8_t* rgb, std::uint8_t* gray, std::size_t npix) {
  const __m256d cr = _mm256_set1_pd(0.299);
  const __m256d cg = _mm256_set1_pd(0.587);
  const __m256d cb = _mm256_set1_pd(0.114);
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d hi = _mm256_set1_pd(255.0);
  std::size_t i = 0;
  for (; i + 4 <= npix; i += 4) {
    const std::uint8_t* p = rgb + 3 * i;
    const __m256d r = _mm256_set_pd(p[9], p[6], p[3], p[0]);
    const __m256d g = _mm256_set_pd(p[10], p[7], p[4], p[1]);
    const __m256d b = _mm256_set_pd(p[11], p[8], p[5], p[2]);
    const __m256d l =
        _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(cr, r), _mm256_mul_pd(cg, g)),
                      _mm256_mul_pd(cb, b));
    __m256d v = _mm256_floor_pd(_mm256_add_pd(l, half));
    v = _mm256_min_pd(v, hi);
    const __m128i iv = _mm256_cvttpd_epi32(v);
    gray[i + 0] = static_cast<std::uint8_t>(_mm_extract_epi32(iv, 0));
    gray[i + 1] = static_cast<std::uint8_t>(_mm_extract_epi32(iv, 1));
    gray[i + 2] = static_cast<std::uint8_t>(_mm_extract_epi32(iv, 2));
    gray[i + 3] = static_cast<std::uint8_t>(_mm_extract_epi32(iv, 3));
  }
  for (; i < npix; ++i) {
    const double r = static_cast<double>(rgb[3 * i + 0]);
    const double g = static_cast<double>(rgb[3 * i + 1]);
    const double b = static_cast<double>(rgb[3 * i + 2]);
    const double l = (0.299 * r + 0.587 * g) + 0.114 * b;
    double v = std::floor(l + 0.5);
    if (v > 255.0) v = 255.0;
    gray[i] = static_cast<std::uint8_t>(v);
  }
}

void threshold_row_avx2(const std::uint8_t* src, std::uint8_t* dst, std::size_t n,
                        std::uint8_t t) {
  const __m256i bias = _mm256_set1_epi8(static_cast<char>(0x80));
  const __m256i tv = _mm256_xor_si256(_mm256_set1_epi8(static_cast<char>(t)), bias);
  const __m256i one = _mm256_set1_epi8(1);
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    const __m256i cmp = _mm256_cmpgt_epi8(_mm256_xor_si256(s, bias), tv);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_and_si256(cmp, one));
  }
  for (; i < n; ++i) dst[i] = src[i] > t ? 1 : 0;
}

void select_row_avx2(const std::uint8_t* mask, const std::uint8_t* src, std::uint8_t* dst,
                     std::size_t n) {
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i m = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(mask + i));
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    const __m256i is_zero = _mm256_cmpeq_epi8(m, zero);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_andnot_si256(is_zero, s));
  }
  for (; i < n; ++i) dst[i] = mask[i] ? src[i] : 0;
}

void or_row_avx2(std::uint8_t* dst, const std::uint8_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_or_si256(d, s));
  }
  for (; i < n; ++i) dst[i] |= src[i];
}

void relu_row_avx2(const double* x, double* y, std::size_t n) {
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(y + i, _mm256_max_pd(_mm256_loadu_pd(x + i), zero));
  }
  for (; i < n; ++i) y[i] = x[i] > 0.0 ? x[i] : 0.0;
}

void relu_grad_row_avx2(const double* x, const double* dy, double* dx, std::size_t n) {
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d m = _mm256_cmp_pd(_mm256_loadu_pd(x + i), zero, _CMP_GT_OQ);
    _mm256_storeu_pd(dx + i, _mm256_and_pd(m, _mm256_loadu_pd(dy + i)));
  }
  for (; i < n; ++i) dx[i] = x[i] > 0.0 ? dy[i] : 0.0;
}

void add_row_avx2(double* acc, const double* x, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(acc + i, _mm256_add_pd(_mm256_loadu_pd(acc + i), _mm256_loadu_pd(x + i)));
  }
  for (; i < n; ++i) acc[i] += x[i];
}

void axpy_row_avx2(double a, const double* x, double* y, std::size_t n) {
  const __m256d av = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d prod = _mm256_mul_pd(av, _mm256_loadu_pd(x + i));
    _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_loadu_pd(y + i), prod));
  }
  for (; i < n; ++i) y[i] = y[i] + a * x[i];
}

void sharpen_row_avx2(const double* in, const double* blur, double* out, double amount,
                      std::size_t n) {
  const __m256d av = _mm256_set1_pd(amount);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d iv = _mm256_loadu_pd(in + i);
    const __m256d diff = _mm256_sub_pd(iv, _mm256_loadu_pd(blur + i));
    _mm256_storeu_pd(out + i, _mm256_add_pd(iv, _mm256_mul_pd(av, diff)));
  }
  for (; i < n; ++i) out[i] = in[i] + amount * (in[i] - blur[i]);
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double sum = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) sum = sum + a[i] * b[i];
  return sum;
}

void correlate_valid_row_avx2(const double* padded, double* out, std::size_t n,
                              const double* taps, std::size_t ntaps) {
  std::size_t x = 0;
  for (; x + 4 <= n; x += 4) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t t = 0; t < ntaps; ++t) {
      const __m256d tap = _mm256_set1_pd(taps[t]);
      acc = _mm256_add_pd(acc, _mm256_mul_pd(tap, _mm256_loadu_pd(padded + x + t)));
    }
    _mm256_storeu_pd(out + x, acc);
  }
  for (; x < n; ++x) {
    double s = 0.0;
    for (std::size_t t = 0; t < ntaps; ++t) s = s + taps[t] * padded[x + t];
    out[x] = s;
  }
}

// Scalar per-pixel path for plane borders; mirrors the reference exactly.
inline double conv3x3_one(const double* in, const double* k9, std::size_t h, std::size_t w,
                          std::size_t oy, std::size_t ox, double s) {
  for (int ky = 0; ky < 3; ++ky) {
    const std::ptrdiff_t iy = static_cast<std::ptrdiff_t>(oy) + ky - 1;
    if (iy < 0 || iy >= static_cast<std::ptrdiff_t>(h)) continue;
    for (int kx = 0; kx < 3; ++kx) {
      const std::ptrdiff_t ix = static_cast<std::ptrdiff_t>(ox) + kx - 1;
      if (ix < 0 || ix >= static_cast<std::ptrdiff_t>(w)) continue;
      s = s + k9[ky * 3 + kx] * in[iy * w + ix];
    }
  }
  return s;
}

void conv3x3_acc_avx2(const double* in, const double* k9, double* out, std::size_t h,
                      std::size_t w) {
  __m256d kv[9];
  for (int t = 0; t < 9; ++t) kv[t] = _mm256_set1_pd(k9[t]);
  for (std::size_t oy = 0; oy < h; ++oy) {
    const bool interior_row = oy >= 1 && oy + 1 < h;
    std::size_t ox = 0;
    if (!interior_row || w < 6) {
      for (; ox < w; ++ox) {
        out[oy * w + ox] = conv3x3_one(in, k9, h, w, oy, ox, out[oy * w + ox]);
      }
      continue;
    }
    out[oy * w] = conv3x3_one(in, k9, h, w, oy, 0, out[oy * w]);
    ox = 1;
    // All nine taps are in bounds for ox in [1, w-2]; vector tail ends at w-5.
    for (; ox + 4 <= w - 1; ox += 4) {
      __m256d acc = _mm256_loadu_pd(out + oy * w + ox);
      for (int ky = 0; ky < 3; ++ky) {
        const double* row = in + (oy + static_cast<std::size_t>(ky) - 1) * w + ox - 1;
        for (int kx = 0; kx < 3; ++kx) {
          acc = _mm256_add_pd(acc, _mm256_mul_pd(kv[ky * 3 + kx], _mm256_loadu_pd(row + kx)));
        }
      }
      _mm256_storeu_pd(out + oy * w + ox, acc);
    }
    for (; ox < w; ++ox) {
      out[oy * w + ox] = conv3x3_one(in, k9, h, w, oy, ox, out[oy * w + ox]);
    }
  }
}

void adam_row_avx2(double* w, double* m, double* v, const double* g, std::size_t n, double lr,
                   double beta1, double beta2, double eps, double bc1, double bc2) {
  const __m256d b1 = _mm256_set1_pd(beta1);
  const __m256d b2 = _mm256_set1_pd(beta2);
  const __m256d omb1 = _mm256_set1_pd(1.0 - beta1);
  const __m256d omb2 = _mm256_set1_pd(1.0 - beta2);
  const __m256d lrv = _mm256_set1_pd(lr);
  const __m256d epsv = _mm256_set1_pd(eps);
  const __m256d bc1v = _mm256_set1_pd(bc1);
  const __m256d bc2v = _mm256_set1_pd(bc2);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d gi = _mm256_loadu_pd(g + i);
    const __m256d mi =
        _mm256_add_pd(_mm256_mul_pd(b1, _mm256_loadu_pd(m + i)), _mm256_mul_pd(omb1, gi));
    const __m256d g2 = _mm256_mul_pd(gi, gi);
    const __m256d vi =
        _mm256_add_pd(_mm256_mul_pd(b2, _mm256_loadu_pd(v + i)), _mm256_mul_pd(omb2, g2));
    _mm256_storeu_pd(m + i, mi);
    _mm256_storeu_pd(v + i, vi);
    const __m256d mhat = _mm256_div_pd(mi, bc1v);
    const __m256d vhat = _mm256_div_pd(vi, bc2v);
    const __m256d denom = _mm256_add_pd(_mm256_sqrt_pd(vhat), epsv);
    const __m256d upd = _mm256_div_pd(_mm256_mul_pd(lrv, mhat), denom);
    _mm256_storeu_pd(w + i, _mm256_sub_pd(_mm256_loadu_pd(w + i), upd));
  }
  const double one_m_b1 = 1.0 - beta1;
  const double one_m_b2 = 1.0 - beta2;
  for (; i < n; ++i) {
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

const Ops& avx2_ops() {
  static const Ops table = {
      "avx2",
      luma_row_avx2,
      threshold_row_avx2,
      select_row_avx2,
      or_row_avx2,
      relu_row_avx2,
      relu_grad_row_avx2,
      add_row_avx2,
      axpy_row_avx2,
      sharpen_row_avx2,
      dot_avx2,
      correlate_valid_row_avx2,
      conv3x3_acc_avx2,
      adam_row_avx2,
  };
  return table;
}

}  // namespace blpr::kernels

#endif  // x86-64
