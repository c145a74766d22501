#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "blpr/kernels.hpp"

namespace blpr::kernels {
namespace {

Mode g_mode = Mode::kAuto;
const Ops* g_active = nullptr;

const Ops* resolve(Mode m) {
#if defined(__x86_64__) || defined(_M_X64)
  switch (m) {
    case Mode::kScalar:
      return &scalar_ops();
    case Mode::kAvx2:
      if (!cpu_has_avx2()) throw std::runtime_error("avx2 kernels requested but CPU lacks AVX2");
      return &avx2_ops();
    case Mode::kAuto:
      return cpu_has_avx2() ? &avx2_ops() : &scalar_ops();
  }
#else
  if (m == Mode::kAvx2) throw std::runtime_error("avx2 kernels unavailable on this architecture");
#endif
  return &scalar_ops();
}

Mode env_mode() {
  const char* e = std::getenv("BLPR_KERNELS");
  if (e == nullptr) return Mode::kAuto;
  if (std::strcmp(e, "scalar") == 0) return Mode::kScalar;
  if (std::strcmp(e, "avx2") == 0) return Mode::kAvx2;
  return Mode::kAuto;
}

}  // namespace

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

const Ops& ops() {
  if (g_active == nullptr) {
    g_mode = env_mode();
    g_active = resolve(g_mode);
  }
  return *g_active;
}

void set_mode(Mode m) {
  g_active = resolve(m);
  g_mode = m;
}

Mode mode() {
  ops();
  return g_mode;
}

}  // namespace blpr::kernels
