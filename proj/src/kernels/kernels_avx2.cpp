#include "anc/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace anc::kern::avx2 {

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d shuf = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, shuf));
}

}  // namespace

double dot(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4),
                           acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  }
  double r = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) r += a[i] * b[i];
  return r;
}

double sum(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
  double r = hsum(acc);
  for (; i < n; ++i) r += x[i];
  return r;
}

double sum_sq(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d v = _mm256_loadu_pd(x + i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  double r = hsum(acc);
  for (; i < n; ++i) r += x[i] * x[i];
  return r;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d v = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
    _mm256_storeu_pd(y + i, v);
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void scale(double alpha, double* x, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(x + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
  }
  for (; i < n; ++i) x[i] *= alpha;
}

void scale_add(const double* a, const double* b, double s, double* out,
               std::size_t n) {
  const __m256d vs = _mm256_set1_pd(s);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d v = _mm256_fmadd_pd(vs, _mm256_loadu_pd(b + i), _mm256_loadu_pd(a + i));
    _mm256_storeu_pd(out + i, v);
  }
  for (; i < n; ++i) out[i] = a[i] + s * b[i];
}

void matvec(const double* m, const double* x, double* y, std::size_t rows,
            std::size_t cols) {
  for (std::size_t r = 0; r < rows; ++r) y[r] = dot(m + r * cols, x, cols);
}

void rank1_sub_scale(double* m, const double* a, const double* b, double s,
                     std::size_t n) {
  const __m256d vs = _mm256_set1_pd(s);
  for (std::size_t r = 0; r < n; ++r) {
    double* row = m + r * n;
    const double ar = a[r];
    const __m256d var = _mm256_set1_pd(ar);
    std::size_t c = 0;
    for (; c + 4 <= n; c += 4) {
      __m256d v = _mm256_fnmadd_pd(var, _mm256_loadu_pd(b + c),
                                   _mm256_loadu_pd(row + c));
      _mm256_storeu_pd(row + c, _mm256_mul_pd(vs, v));
    }
    for (; c < n; ++c) row[c] = s * (row[c] - ar * b[c]);
  }
}

}  // namespace anc::kern::avx2

#endif  // x86_64
