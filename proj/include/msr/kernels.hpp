#pragma once

#include <cstddef>

// Dense f64 compute kernels. Every kernel has a scalar reference
// implementation; hot ones also have an AVX2 variant. The backend is picked
// once per process at first use (override with set_backend or MSR_KERNELS).
namespace msr::k {

enum class Backend { Scalar, Avx2 };

Backend active_backend();
void set_backend(Backend b);
const char* backend_name(Backend b);
bool avx2_supported();

// ---- elementwise ----------------------------------------------------------
void add(const double* a, const double* b, double* y, size_t n);
void sub(const double* a, const double* b, double* y, size_t n);
void mul(const double* a, const double* b, double* y, size_t n);
void fmadd(const double* a, const double* b, double* y, size_t n);  // y += a*b
void axpy(double alpha, const double* x, double* y, size_t n);      // y += alpha*x
void scale(const double* x, double alpha, double* y, size_t n);     // y = alpha*x

// ---- reductions -----------------------------------------------------------
double dot(const double* a, const double* b, size_t n);
double sum(const double* x, size_t n);
double sum_abs_diff(const double* a, const double* b, size_t n);

// ---- GEMM (row-major) ------------------------------------------------------
// C (+)= A[m x k] * B[k x n]
void gemm_nn(size_t m, size_t n, size_t k, const double* a, const double* b,
             double* c, bool accumulate);
// C (+)= A[m x k] * B[n x k]^T
void gemm_nt(size_t m, size_t n, size_t k, const double* a, const double* b,
             double* c, bool accumulate);

// ---- linear recurrence -----------------------------------------------------
// Time-major layout: abar, x, h are len rows of s contiguous doubles.
// h_t = abar_t (.) h_{t-1} + x_t with h_{-1} = 0.
void ssm_scan_seq(size_t len, size_t s, const double* abar, const double* x,
                  double* h);
// Same contract evaluated as a work-efficient associative tree scan
// (Brent-Kung over pairs (a1,b1)o(a2,b2) = (a2*a1, a2*b1 + b2)).
// scratch must hold len*s doubles.
void ssm_scan_tree(size_t len, size_t s, const double* abar, const double* x,
                   double* h, double* scratch);

}  // namespace msr::k
