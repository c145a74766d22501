#pragma once

#include <cstddef>
#include <cstdint>

// Data-parallel inner loops used by the image stages and the network trainer.
//
// Every kernel has a scalar reference implementation and (on x86-64) an AVX2
// variant selected at runtime. The SIMD variants are required to produce
// bit-identical results to the scalar references: vectorization only runs
// across independent outputs, reductions keep the reference's 4-lane blocked
// summation order, and fma contraction is disabled project-wide. The test
// suite asserts scalar/AVX2 equivalence with memcmp.

namespace blpr::kernels {

enum class Mode { kAuto, kScalar, kAvx2 };

struct Ops {
  const char* name;

  // 8-bit raster rows.
  // gray[i] = round_half_away(0.299*r + 0.587*g + 0.114*b), clamped to [0,255]
  void (*luma_row)(const std::uint8_t* rgb, std::uint8_t* gray, std::size_t npix);
  // dst[i] = src[i] > t ? 1 : 0
  void (*threshold_row)(const std::uint8_t* src, std::uint8_t* dst, std::size_t n, std::uint8_t t);
  // dst[i] = mask[i] ? src[i] : 0
  void (*select_row)(const std::uint8_t* mask, const std::uint8_t* src, std::uint8_t* dst,
                     std::size_t n);
  // dst[i] |= src[i]  (0/1 masks)
  void (*or_row)(std::uint8_t* dst, const std::uint8_t* src, std::size_t n);

  // Double-precision rows.
  // y[i] = max(x[i], 0)
  void (*relu_row)(const double* x, double* y, std::size_t n);
  // dx[i] = x[i] > 0 ? dy[i] : 0
  void (*relu_grad_row)(const double* x, const double* dy, double* dx, std::size_t n);
  // acc[i] += x[i]
  void (*add_row)(double* acc, const double* x, std::size_t n);
  // y[i] += a * x[i]
  void (*axpy_row)(double a, const double* x, double* y, std::size_t n);
  // out[i] = in[i] + amount * (in[i] - blur[i])
  void (*sharpen_row)(const double* in, const double* blur, double* out, double amount,
                      std::size_t n);
  // Blocked dot product: four interleaved partial sums combined as
  // (s0+s1)+(s2+s3), then a sequential tail. This order is the canonical
  // reduction order for the whole project.
  double (*dot)(const double* a, const double* b, std::size_t n);
  // out[x] = sum_t taps[t] * padded[x + t]   (valid correlation, no edges)
  void (*correlate_valid_row)(const double* padded, double* out, std::size_t n,
                              const double* taps, std::size_t ntaps);
  // out += cross-correlation of a h*w plane with a 3x3 kernel, zero padding,
  // stride 1. Out-of-bounds taps are skipped (not added as zeros).
  void (*conv3x3_acc)(const double* in, const double* k9, double* out, std::size_t h,
                      std::size_t w);
  // Adam step, elementwise over a parameter row. bc1/bc2 are the bias
  // corrections 1-beta1^t / 1-beta2^t, precomputed by the caller.
  void (*adam_row)(double* w, double* m, double* v, const double* g, std::size_t n, double lr,
                   double beta1, double beta2, double eps, double bc1, double bc2);
};

const Ops& scalar_ops();
#if defined(__x86_64__) || defined(_M_X64)
const Ops& avx2_ops();
#endif

bool cpu_has_avx2();

// Active dispatch table. Defaults to kAuto (AVX2 when the CPU supports it);
// overridable via set_mode or the BLPR_KERNELS env var (scalar|avx2|auto).
const Ops& ops();
void set_mode(Mode m);
Mode mode();

}  // namespace blpr::kernels
