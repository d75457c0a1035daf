#include "kernels_impl.hpp"

#include <cmath>
#include <cstring>

// Reference kernels. Plain loops, no reassociation tricks: these define the
// semantics the SIMD variants are checked against.
namespace msr::k::scalar {

void add(const double* a, const double* b, double* y, size_t n) {
    for (size_t i = 0; i < n; ++i) y[i] = a[i] + b[i];
}

void sub(const double* a, const double* b, double* y, size_t n) {
    for (size_t i = 0; i < n; ++i) y[i] = a[i] - b[i];
}

void mul(const double* a, const double* b, double* y, size_t n) {
    for (size_t i = 0; i < n; ++i) y[i] = a[i] * b[i];
}

void fmadd(const double* a, const double* b, double* y, size_t n) {
    for (size_t i = 0; i < n; ++i) y[i] += a[i] * b[i];
}

void axpy(double alpha, const double* x, double* y, size_t n) {
    for (size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scale(const double* x, double alpha, double* y, size_t n) {
    for (size_t i = 0; i < n; ++i) y[i] = alpha * x[i];
}

double dot(const double* a, const double* b, size_t n) {
    double acc = 0.0;
    for (size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

double sum(const double* x, size_t n) {
    double acc = 0.0;
    for (size_t i = 0; i < n; ++i) acc += x[i];
    return acc;
}

double sum_abs_diff(const double* a, const double* b, size_t n) {
    double acc = 0.0;
    for (size_t i = 0; i < n; ++i) acc += std::fabs(a[i] - b[i]);
    return acc;
}

void gemm_nn(size_t m, size_t n, size_t k, const double* a, const double* b,
             double* c, bool accumulate) {
    if (!accumulate) std::memset(c, 0, m * n * sizeof(double));
    for (size_t i = 0; i < m; ++i) {
        const double* arow = a + i * k;
        double* crow = c + i * n;
        for (size_t p = 0; p < k; ++p) {
            const double av = arow[p];
            const double* brow = b + p * n;
            for (size_t j = 0; j < n; ++j) crow[j] += av * brow[j];
        }
    }
}

void gemm_nt(size_t m, size_t n, size_t k, const double* a, const double* b,
             double* c, bool accumulate) {
    for (size_t i = 0; i < m; ++i) {
        const double* arow = a + i * k;
        double* crow = c + i * n;
        for (size_t j = 0; j < n; ++j) {
            const double* brow = b + j * k;
            double acc = 0.0;
            for (size_t p = 0; p < k; ++p) acc += arow[p] * brow[p];
            crow[j] = accumulate ? crow[j] + acc : acc;
        }
    }
}

void ssm_scan_seq(size_t len, size_t s, const double* abar, const double* x,
                  double* h) {
    if (len == 0) return;
    std::memcpy(h, x, s * sizeof(double));
    for (size_t t = 1; t < len; ++t) {
        const double* at = abar + t * s;
        const double* xt = x + t * s;
        const double* hp = h + (t - 1) * s;
        double* ht = h + t * s;
        for (size_t i = 0; i < s; ++i) ht[i] = at[i] * hp[i] + xt[i];
    }
}

void ssm_scan_tree(size_t len, size_t s, const double* abar, const double* x,
                   double* h, double* scratch) {
    if (len == 0) return;
    // In-place Brent-Kung inclusive scan over pairs (A,b); h holds b, scratch holds A.
    std::memcpy(h, x, len * s * sizeof(double));
    std::memcpy(scratch, abar, len * s * sizeof(double));
    size_t stride = 1;
    for (; stride < len; stride *= 2) {
        for (size_t i = 2 * stride - 1; i < len; i += 2 * stride) {
            const size_t e = i - stride;  // earlier node, combined into i
            double* ai = scratch + i * s;
            double* bi = h + i * s;
            const double* ae = scratch + e * s;
            const double* be = h + e * s;
            for (size_t j = 0; j < s; ++j) {
                bi[j] = ai[j] * be[j] + bi[j];
                ai[j] = ai[j] * ae[j];
            }
        }
    }
    for (stride /= 2; stride >= 1; stride /= 2) {
        for (size_t i = 2 * stride - 1; i + stride < len; i += 2 * stride) {
            const size_t l = i + stride;
            double* al = scratch + l * s;
            double* bl = h + l * s;
            const double* ai = scratch + i * s;
            const double* bi = h + i * s;
            for (size_t j = 0; j < s; ++j) {
                bl[j] = al[j] * bi[j] + bl[j];
                al[j] = al[j] * ai[j];
            }
        }
    }
}

}  // namespace msr::k::scalar
