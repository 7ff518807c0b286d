#include "anc/kernels.hpp"

namespace anc::kern::scalar {

double dot(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double sum(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i];
  return acc;
}

double sum_sq(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * x[i];
  return acc;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scale(double alpha, double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

void scale_add(const double* a, const double* b, double s, double* out,
               std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] + s * b[i];
}

void matvec(const double* m, const double* x, double* y, std::size_t rows,
            std::size_t cols) {
  for (std::size_t r = 0; r < rows; ++r) y[r] = dot(m + r * cols, x, cols);
}

void rank1_sub_scale(double* m, const double* a, const double* b, double s,
                     std::size_t n) {
  for (std::size_t r = 0; r < n; ++r) {
    double* row = m + r * n;
    const double ar = a[r];
    for (std::size_t c = 0; c < n; ++c) row[c] = s * (row[c] - ar * b[c]);
  }
}

}  // namespace anc::kern::scalar
