#include "msr/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

#include "kernels_impl.hpp"

namespace msr::k {

namespace {

Backend detect() {
#if defined(MSR_HAVE_AVX2)
    if (const char* env = std::getenv("MSR_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) return Backend::Scalar;
        if (std::strcmp(env, "avx2") == 0) return Backend::Avx2;
    }
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
        return Backend::Avx2;
#endif
    return Backend::Scalar;
}

std::atomic<Backend> g_backend{detect()};

}  // namespace

Backend active_backend() { return g_backend.load(std::memory_order_relaxed); }

void set_backend(Backend b) {
#if !defined(MSR_HAVE_AVX2)
    b = Backend::Scalar;
#endif
    g_backend.store(b, std::memory_order_relaxed);
}

const char* backend_name(Backend b) {
    return b == Backend::Avx2 ? "avx2" : "scalar";
}

bool avx2_supported() {
#if defined(MSR_HAVE_AVX2)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

#if defined(MSR_HAVE_AVX2)
#define MSR_DISPATCH(fn, ...)                                       \
    if (g_backend.load(std::memory_order_relaxed) == Backend::Avx2) \
        return avx2::fn(__VA_ARGS__);                               \
    return scalar::fn(__VA_ARGS__)
#else
#define MSR_DISPATCH(fn, ...) return scalar::fn(__VA_ARGS__)
#endif

void add(const double* a, const double* b, double* y, size_t n) { MSR_DISPATCH(add, a, b, y, n); }
void sub(const double* a, const double* b, double* y, size_t n) { MSR_DISPATCH(sub, a, b, y, n); }
void mul(const double* a, const double* b, double* y, size_t n) { MSR_DISPATCH(mul, a, b, y, n); }
void fmadd(const double* a, const double* b, double* y, size_t n) { MSR_DISPATCH(fmadd, a, b, y, n); }
void axpy(double alpha, const double* x, double* y, size_t n) { MSR_DISPATCH(axpy, alpha, x, y, n); }
void scale(const double* x, double alpha, double* y, size_t n) { MSR_DISPATCH(scale, x, alpha, y, n); }
double dot(const double* a, const double* b, size_t n) { MSR_DISPATCH(dot, a, b, n); }
double sum(const double* x, size_t n) { MSR_DISPATCH(sum, x, n); }
double sum_abs_diff(const double* a, const double* b, size_t n) { MSR_DISPATCH(sum_abs_diff, a, b, n); }

void gemm_nn(size_t m, size_t n, size_t k, const double* a, const double* b,
             double* c, bool accumulate) {
    MSR_DISPATCH(gemm_nn, m, n, k, a, b, c, accumulate);
}

void gemm_nt(size_t m, size_t n, size_t k, const double* a, const double* b,
             double* c, bool accumulate) {
    MSR_DISPATCH(gemm_nt, m, n, k, a, b, c, accumulate);
}

void ssm_scan_seq(size_t len, size_t s, const double* abar, const double* x,
                  double* h) {
    MSR_DISPATCH(ssm_scan_seq, len, s, abar, x, h);
}

void ssm_scan_tree(size_t len, size_t s, const double* abar, const double* x,
                   double* h, double* scratch) {
    MSR_DISPATCH(ssm_scan_tree, len, s, abar, x, h, scratch);
}

#undef MSR_DISPATCH

}  // namespace msr::k
