#include "anc/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace anc::kern::neon {

double dot(const double* a, const double* b, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
    acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
  }
  for (; i + 2 <= n; i += 2) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
  }
  double r = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) r += a[i] * b[i];
  return r;
}

double sum(const double* x, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) acc = vaddq_f64(acc, vld1q_f64(x + i));
  double r = vaddvq_f64(acc);
  for (; i < n; ++i) r += x[i];
  return r;
}

double sum_sq(const double* x, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t v = vld1q_f64(x + i);
    acc = vfmaq_f64(acc, v, v);
  }
  double r = vaddvq_f64(acc);
  for (; i < n; ++i) r += x[i] * x[i];
  return r;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(x + i)));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void scale(double alpha, double* x, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(x + i, vmulq_f64(va, vld1q_f64(x + i)));
  for (; i < n; ++i) x[i] *= alpha;
}

void scale_add(const double* a, const double* b, double s, double* out,
               std::size_t n) {
  const float64x2_t vs = vdupq_n_f64(s);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(out + i, vfmaq_f64(vld1q_f64(a + i), vs, vld1q_f64(b + i)));
  }
  for (; i < n; ++i) out[i] = a[i] + s * b[i];
}

void matvec(const double* m, const double* x, double* y, std::size_t rows,
            std::size_t cols) {
  for (std::size_t r = 0; r < rows; ++r) y[r] = dot(m + r * cols, x, cols);
}

void rank1_sub_scale(double* m, const double* a, const double* b, double s,
                     std::size_t n) {
  const float64x2_t vs = vdupq_n_f64(s);
  for (std::size_t r = 0; r < n; ++r) {
    double* row = m + r * n;
    const double ar = a[r];
    const float64x2_t var = vdupq_n_f64(ar);
    std::size_t c = 0;
    for (; c + 2 <= n; c += 2) {
      float64x2_t v = vfmsq_f64(vld1q_f64(row + c), var, vld1q_f64(b + c));
      vst1q_f64(row + c, vmulq_f64(vs, v));
    }
    for (; c < n; ++c) row[c] = s * (row[c] - ar * b[c]);
  }
}

}  // namespace anc::kern::neon

#endif  // __aarch64__
