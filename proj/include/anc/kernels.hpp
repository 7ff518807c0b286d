#pragma once

#include <cstddef>

// Double-precision kernels behind the arithmetic inner loops (regressor dot
// products, tap updates, inverse-correlation updates, power sums).  Scalar
// reference implementations define the semantics; AVX2 and NEON variants are
// selected at runtime and must agree with the scalar ones up to floating-point
// reassociation (see tests/test_kernels.cpp).

namespace anc::kern {

enum class Backend { scalar, avx2, neon };

// Best backend the running CPU supports.
Backend detected_backend();

// Backend currently used by the dispatched entry points below.
Backend active_backend();

// Force a backend (tests, troubleshooting).  Throws std::invalid_argument if
// the CPU cannot run it.  Setting ANC_KERNELS=scalar|avx2|neon in the
// environment has the same effect at startup.
void set_backend(Backend b);

const char* backend_name(Backend b);

// sum_i a[i] * b[i]
double dot(const double* a, const double* b, std::size_t n);
// sum_i x[i]
double sum(const double* x, std::size_t n);
// sum_i x[i]^2
double sum_sq(const double* x, std::size_t n);
// y[i] += alpha * x[i]
void axpy(double alpha, const double* x, double* y, std::size_t n);
// x[i] *= alpha
void scale(double alpha, double* x, std::size_t n);
// out[i] = a[i] + s * b[i]; out may alias a
void scale_add(const double* a, const double* b, double s, double* out,
               std::size_t n);
// y = M x with M row-major (rows x cols); y must not alias x
void matvec(const double* m, const double* x, double* y, std::size_t rows,
            std::size_t cols);
// M = s * (M - a b^T) with M square n x n row-major
void rank1_sub_scale(double* m, const double* a, const double* b, double s,
                     std::size_t n);

// Reference backend, callable directly (equivalence tests compare the
// dispatched path against these).
namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
double sum(const double* x, std::size_t n);
double sum_sq(const double* x, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void scale(double alpha, double* x, std::size_t n);
void scale_add(const double* a, const double* b, double s, double* out,
               std::size_t n);
void matvec(const double* m, const double* x, double* y, std::size_t rows,
            std::size_t cols);
void rank1_sub_scale(double* m, const double* a, const double* b, double s,
                     std::size_t n);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
// Compiled with AVX2+FMA code generation; call only when detected_backend()
// reports avx2 (the dispatcher takes care of that).
namespace avx2 {
double dot(const double* a, const double* b, std::size_t n);
double sum(const double* x, std::size_t n);
double sum_sq(const double* x, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void scale(double alpha, double* x, std::size_t n);
void scale_add(const double* a, const double* b, double s, double* out,
               std::size_t n);
void matvec(const double* m, const double* x, double* y, std::size_t rows,
            std::size_t cols);
void rank1_sub_scale(double* m, const double* a, const double* b, double s,
                     std::size_t n);
}  // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {
double dot(const double* a, const double* b, std::size_t n);
double sum(const double* x, std::size_t n);
double sum_sq(const double* x, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void scale(double alpha, double* x, std::size_t n);
void scale_add(const double* a, const double* b, double s, double* out,
               std::size_t n);
void matvec(const double* m, const double* x, double* y, std::size_t rows,
            std::size_t cols);
void rank1_sub_scale(double* m, const double* a, const double* b, double s,
                     std::size_t n);
}  // namespace neon
#endif

}  // namespace anc::kern
