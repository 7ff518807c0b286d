#include "anc/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace anc::kern {

namespace {

Backend detect() {
#if defined(__aarch64__)
  return Backend::neon;
#elif defined(__x86_64__) || defined(_M_X64)
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
    return Backend::avx2;
  }
  return Backend::scalar;
#else
  return Backend::scalar;
#endif
}

Backend initial_backend() {
  Backend b = detect();
  if (const char* env = std::getenv("ANC_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) b = Backend::scalar;
    if (std::strcmp(env, "avx2") == 0 && detect() == Backend::avx2)
      b = Backend::avx2;
    if (std::strcmp(env, "neon") == 0 && detect() == Backend::neon)
      b = Backend::neon;
  }
  return b;
}

std::atomic<Backend>& backend_slot() {
  static std::atomic<Backend> slot{initial_backend()};
  return slot;
}

}  // namespace

Backend detected_backend() { return detect(); }

Backend active_backend() { return backend_slot().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  if (b != Backend::scalar && b != detect()) {
    throw std::invalid_argument("kernel backend not supported on this CPU");
  }
  backend_slot().store(b, std::memory_order_relaxed);
}

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::avx2: return "avx2";
    case Backend::neon: return "neon";
    case Backend::scalar: break;
  }
  return "scalar";
}

#if defined(__x86_64__) || defined(_M_X64)
#define ANC_DISPATCH(call)                                        \
  if (active_backend() == Backend::avx2) return avx2::call;       \
  return scalar::call
#elif defined(__aarch64__)
#define ANC_DISPATCH(call)                                        \
  if (active_backend() == Backend::neon) return neon::call;       \
  return scalar::call
#else
#define ANC_DISPATCH(call) return scalar::call
#endif

double dot(const double* a, const double* b, std::size_t n) {
  ANC_DISPATCH(dot(a, b, n));
}

double sum(const double* x, std::size_t n) { ANC_DISPATCH(sum(x, n)); }

double sum_sq(const double* x, std::size_t n) { ANC_DISPATCH(sum_sq(x, n)); }

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  ANC_DISPATCH(axpy(alpha, x, y, n));
}

void scale(double alpha, double* x, std::size_t n) {
  ANC_DISPATCH(scale(alpha, x, n));
}

void scale_add(const double* a, const double* b, double s, double* out,
               std::size_t n) {
  ANC_DISPATCH(scale_add(a, b, s, out, n));
}

void matvec(const double* m, const double* x, double* y, std::size_t rows,
            std::size_t cols) {
  ANC_DISPATCH(matvec(m, x, y, rows, cols));
}

void rank1_sub_scale(double* m, const double* a, const double* b, double s,
                     std::size_t n) {
  ANC_DISPATCH(rank1_sub_scale(m, a, b, s, n));
}

}  // namespace anc::kern
