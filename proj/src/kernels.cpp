#include "halfdom/kernels.hpp"

#include <atomic>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define HALFDOM_X86 1
#endif

namespace halfdom::kernels {

namespace {

using EliminateFn = void (*)(double*, const double*, double, std::size_t);

bool cpu_has_avx2() {
#ifdef HALFDOM_X86
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

EliminateFn pick(Isa isa) { return isa == Isa::avx2 ? &eliminate_avx2 : &eliminate_scalar; }

std::atomic<Isa> g_isa{detected_isa()};
std::atomic<EliminateFn> g_eliminate{pick(detected_isa())};

}  // namespace

std::string_view to_string(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

Isa detected_isa() { return cpu_has_avx2() ? Isa::avx2 : Isa::scalar; }

Isa active_isa() { return g_isa.load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (isa == Isa::avx2 && !cpu_has_avx2()) isa = Isa::scalar;
  g_isa.store(isa, std::memory_order_relaxed);
  g_eliminate.store(pick(isa), std::memory_order_relaxed);
}

void eliminate_scalar(double* dst, const double* src, double f, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    const double prod = f * src[k];
    dst[k] = dst[k] - prod;
  }
}

#ifdef HALFDOM_X86
__attribute__((target("avx2"))) void eliminate_avx2(double* dst, const double* src, double f, std::size_t n) {
  const __m256d factor = _mm256_set1_pd(f);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d s = _mm256_loadu_pd(src + k);
    const __m256d d = _mm256_loadu_pd(dst + k);
    _mm256_storeu_pd(dst + k, _mm256_sub_pd(d, _mm256_mul_pd(factor, s)));
  }
  for (; k < n; ++k) {
    const double prod = f * src[k];
    dst[k] = dst[k] - prod;
  }
}
#else
void eliminate_avx2(double* dst, const double* src, double f, std::size_t n) { eliminate_scalar(dst, src, f, n); }
#endif

void eliminate(double* dst, const double* src, double f, std::size_t n) {
  g_eliminate.load(std::memory_order_relaxed)(dst, src, f, n);
}

}  // namespace halfdom::kernels
