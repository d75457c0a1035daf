#pragma once

#include <cstddef>

// Per-backend entry points; dispatch.cpp wires them into the public API.
namespace msr::k::scalar {
void add(const double* a, const double* b, double* y, size_t n);
void sub(const double* a, const double* b, double* y, size_t n);
void mul(const double* a, const double* b, double* y, size_t n);
void fmadd(const double* a, const double* b, double* y, size_t n);
void axpy(double alpha, const double* x, double* y, size_t n);
void scale(const double* x, double alpha, double* y, size_t n);
double dot(const double* a, const double* b, size_t n);
double sum(const double* x, size_t n);
double sum_abs_diff(const double* a, const double* b, size_t n);
void gemm_nn(size_t m, size_t n, size_t k, const double* a, const double* b,
             double* c, bool accumulate);
void gemm_nt(size_t m, size_t n, size_t k, const double* a, const double* b,
             double* c, bool accumulate);
void ssm_scan_seq(size_t len, size_t s, const double* abar, const double* x,
                  double* h);
void ssm_scan_tree(size_t len, size_t s, const double* abar, const double* x,
                   double* h, double* scratch);
}  // namespace msr::k::scalar

#if defined(MSR_HAVE_AVX2)
namespace msr::k::avx2 {
void add(const double* a, const double* b, double* y, size_t n);
void sub(const double* a, const double* b, double* y, size_t n);
void mul(const double* a, const double* b, double* y, size_t n);
void fmadd(const double* a, const double* b, double* y, size_t n);
void axpy(double alpha, const double* x, double* y, size_t n);
void scale(const double* x, double alpha, double* y, size_t n);
double dot(const double* a, const double* b, size_t n);
double sum(const double* x, size_t n);
double sum_abs_diff(const double* a, const double* b, size_t n);
void gemm_nn(size_t m, size_t n, size_t k, const double* a, const double* b,
             double* c, bool accumulate);
void gemm_nt(size_t m, size_t n, size_t k, const double* a, const double* b,
             double* c, bool accumulate);
void ssm_scan_seq(size_t len, size_t s, const double* abar, const double* x,
                  double* h);
void ssm_scan_tree(size_t len, size_t s, const double* abar, const double* x,
                   double* h, double* scratch);
}  // namespace msr::k::avx2
#endif
