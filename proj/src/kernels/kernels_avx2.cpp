#include "kernels_impl.hpp"

#if defined(MSR_HAVE_AVX2)

#include <immintrin.h>

#include <cmath>
#include <cstring>

namespace msr::k::avx2 {

namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(lo) + _mm_cvtsd_f64(_mm_unpackhi_pd(lo, lo));
}

}  // namespace

void add(const double* a, const double* b, double* y, size_t n) {
    size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    for (; i < n; ++i) y[i] = a[i] + b[i];
}

void sub(const double* a, const double* b, double* y, size_t n) {
    size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(y + i, _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    for (; i < n; ++i) y[i] = a[i] - b[i];
}

void mul(const double* a, const double* b, double* y, size_t n) {
    size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(y + i, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    for (; i < n; ++i) y[i] = a[i] * b[i];
}

void fmadd(const double* a, const double* b, double* y, size_t n) {
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d acc = _mm256_loadu_pd(y + i);
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
        _mm256_storeu_pd(y + i, acc);
    }
    for (; i < n; ++i) y[i] += a[i] * b[i];
}

void axpy(double alpha, const double* x, double* y, size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d acc = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
        _mm256_storeu_pd(y + i, acc);
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

void scale(const double* x, double alpha, double* y, size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(y + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
    for (; i < n; ++i) y[i] = alpha * x[i];
}

double dot(const double* a, const double* b, size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4)
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

double sum(const double* x, size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    size_t i = 0;
    for (; i + 4 <= n; i += 4) acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(x + i));
    double acc = hsum(acc0);
    for (; i < n; ++i) acc += x[i];
    return acc;
}

double sum_abs_diff(const double* a, const double* b, size_t n) {
    const __m256d mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffll));
    __m256d acc0 = _mm256_setzero_pd();
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        acc0 = _mm256_add_pd(acc0, _mm256_and_pd(mask, d));
    }
    double acc = hsum(acc0);
    for (; i < n; ++i) acc += std::fabs(a[i] - b[i]);
    return acc;
}

// Broadcast-A / stream-B kernel: 4-row x 8-column register tile, column
// blocks outermost so B and C are each streamed once per call.
void gemm_nn(size_t m, size_t n, size_t k, const double* a, const double* b,
             double* c, bool accumulate) {
    if (!accumulate) std::memset(c, 0, m * n * sizeof(double));
    size_t j0 = 0;
    for (; j0 + 8 <= n; j0 += 8) {
        size_t i0 = 0;
        for (; i0 + 4 <= m; i0 += 4) {
            __m256d c00 = _mm256_loadu_pd(c + (i0 + 0) * n + j0);
            __m256d c01 = _mm256_loadu_pd(c + (i0 + 0) * n + j0 + 4);
            __m256d c10 = _mm256_loadu_pd(c + (i0 + 1) * n + j0);
            __m256d c11 = _mm256_loadu_pd(c + (i0 + 1) * n + j0 + 4);
            __m256d c20 = _mm256_loadu_pd(c + (i0 + 2) * n + j0);
            __m256d c21 = _mm256_loadu_pd(c + (i0 + 2) * n + j0 + 4);
            __m256d c30 = _mm256_loadu_pd(c + (i0 + 3) * n + j0);
            __m256d c31 = _mm256_loadu_pd(c + (i0 + 3) * n + j0 + 4);
            for (size_t p = 0; p < k; ++p) {
                const __m256d b0 = _mm256_loadu_pd(b + p * n + j0);
                const __m256d b1 = _mm256_loadu_pd(b + p * n + j0 + 4);
                __m256d av;
                av = _mm256_set1_pd(a[(i0 + 0) * k + p]);
                c00 = _mm256_fmadd_pd(av, b0, c00);
                c01 = _mm256_fmadd_pd(av, b1, c01);
                av = _mm256_set1_pd(a[(i0 + 1) * k + p]);
                c10 = _mm256_fmadd_pd(av, b0, c10);
                c11 = _mm256_fmadd_pd(av, b1, c11);
                av = _mm256_set1_pd(a[(i0 + 2) * k + p]);
                c20 = _mm256_fmadd_pd(av, b0, c20);
                c21 = _mm256_fmadd_pd(av, b1, c21);
                av = _mm256_set1_pd(a[(i0 + 3) * k + p]);
                c30 = _mm256_fmadd_pd(av, b0, c30);
                c31 = _mm256_fmadd_pd(av, b1, c31);
            }
            _mm256_storeu_pd(c + (i0 + 0) * n + j0, c00);
            _mm256_storeu_pd(c + (i0 + 0) * n + j0 + 4, c01);
            _mm256_storeu_pd(c + (i0 + 1) * n + j0, c10);
            _mm256_storeu_pd(c + (i0 + 1) * n + j0 + 4, c11);
            _mm256_storeu_pd(c + (i0 + 2) * n + j0, c20);
            _mm256_storeu_pd(c + (i0 + 2) * n + j0 + 4, c21);
            _mm256_storeu_pd(c + (i0 + 3) * n + j0, c30);
            _mm256_storeu_pd(c + (i0 + 3) * n + j0 + 4, c31);
        }
        for (; i0 < m; ++i0) {  // leftover rows, 1x8 tile
            __m256d c0 = _mm256_loadu_pd(c + i0 * n + j0);
            __m256d c1 = _mm256_loadu_pd(c + i0 * n + j0 + 4);
            for (size_t p = 0; p < k; ++p) {
                const __m256d av = _mm256_set1_pd(a[i0 * k + p]);
                c0 = _mm256_fmadd_pd(av, _mm256_loadu_pd(b + p * n + j0), c0);
                c1 = _mm256_fmadd_pd(av, _mm256_loadu_pd(b + p * n + j0 + 4), c1);
            }
            _mm256_storeu_pd(c + i0 * n + j0, c0);
            _mm256_storeu_pd(c + i0 * n + j0 + 4, c1);
        }
    }
    if (j0 < n) {  // leftover columns, scalar
        for (size_t i = 0; i < m; ++i) {
            const double* arow = a + i * k;
            double* crow = c + i * n;
            for (size_t p = 0; p < k; ++p) {
                const double av = arow[p];
                const double* brow = b + p * n;
                for (size_t j = j0; j < n; ++j) crow[j] += av * brow[j];
            }
        }
    }
}

// Row-dot-row kernel: contiguous loads from both operands.
void gemm_nt(size_t m, size_t n, size_t k, const double* a, const double* b,
             double* c, bool accumulate) {
    size_t i0 = 0;
    for (; i0 + 2 <= m; i0 += 2) {
        size_t j0 = 0;
        for (; j0 + 2 <= n; j0 += 2) {
            __m256d acc00 = _mm256_setzero_pd();
            __m256d acc01 = _mm256_setzero_pd();
            __m256d acc10 = _mm256_setzero_pd();
            __m256d acc11 = _mm256_setzero_pd();
            const double* a0 = a + (i0 + 0) * k;
            const double* a1 = a + (i0 + 1) * k;
            const double* b0 = b + (j0 + 0) * k;
            const double* b1 = b + (j0 + 1) * k;
            size_t p = 0;
            for (; p + 4 <= k; p += 4) {
                const __m256d va0 = _mm256_loadu_pd(a0 + p);
                const __m256d va1 = _mm256_loadu_pd(a1 + p);
                const __m256d vb0 = _mm256_loadu_pd(b0 + p);
                const __m256d vb1 = _mm256_loadu_pd(b1 + p);
                acc00 = _mm256_fmadd_pd(va0, vb0, acc00);
                acc01 = _mm256_fmadd_pd(va0, vb1, acc01);
                acc10 = _mm256_fmadd_pd(va1, vb0, acc10);
                acc11 = _mm256_fmadd_pd(va1, vb1, acc11);
            }
            double s00 = hsum(acc00), s01 = hsum(acc01);
            double s10 = hsum(acc10), s11 = hsum(acc11);
            for (; p < k; ++p) {
                s00 += a0[p] * b0[p];
                s01 += a0[p] * b1[p];
                s10 += a1[p] * b0[p];
                s11 += a1[p] * b1[p];
            }
            double* c0 = c + (i0 + 0) * n + j0;
            double* c1 = c + (i0 + 1) * n + j0;
            if (accumulate) {
                c0[0] += s00; c0[1] += s01;
                c1[0] += s10; c1[1] += s11;
            } else {
                c0[0] = s00; c0[1] = s01;
                c1[0] = s10; c1[1] = s11;
            }
        }
        for (; j0 < n; ++j0) {
            const double d0 = dot(a + (i0 + 0) * k, b + j0 * k, k);
            const double d1 = dot(a + (i0 + 1) * k, b + j0 * k, k);
            if (accumulate) {
                c[(i0 + 0) * n + j0] += d0;
                c[(i0 + 1) * n + j0] += d1;
            } else {
                c[(i0 + 0) * n + j0] = d0;
                c[(i0 + 1) * n + j0] = d1;
            }
        }
    }
    for (; i0 < m; ++i0) {
        for (size_t j = 0; j < n; ++j) {
            const double d = dot(a + i0 * k, b + j * k, k);
            if (accumulate)
                c[i0 * n + j] += d;
            else
                c[i0 * n + j] = d;
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
        size_t i = 0;
        for (; i + 4 <= s; i += 4) {
            __m256d v = _mm256_fmadd_pd(_mm256_loadu_pd(at + i), _mm256_loadu_pd(hp + i),
                                        _mm256_loadu_pd(xt + i));
            _mm256_storeu_pd(ht + i, v);
        }
        for (; i < s; ++i) ht[i] = at[i] * hp[i] + xt[i];
    }
}

void ssm_scan_tree(size_t len, size_t s, const double* abar, const double* x,
                   double* h, double* scratch) {
    if (len == 0) return;
    std::memcpy(h, x, len * s * sizeof(double));
    std::memcpy(scratch, abar, len * s * sizeof(double));
    auto combine = [s](double* al, double* bl, const double* ae, const double* be) {
        size_t j = 0;
        for (; j + 4 <= s; j += 4) {
            const __m256d va = _mm256_loadu_pd(al + j);
            _mm256_storeu_pd(bl + j, _mm256_fmadd_pd(va, _mm256_loadu_pd(be + j),
                                                     _mm256_loadu_pd(bl + j)));
            _mm256_storeu_pd(al + j, _mm256_mul_pd(va, _mm256_loadu_pd(ae + j)));
        }
        for (; j < s; ++j) {
            bl[j] = al[j] * be[j] + bl[j];
            al[j] = al[j] * ae[j];
        }
    };
    size_t stride = 1;
    for (; stride < len; stride *= 2)
        for (size_t i = 2 * stride - 1; i < len; i += 2 * stride)
            combine(scratch + i * s, h + i * s, scratch + (i - stride) * s, h + (i - stride) * s);
    for (stride /= 2; stride >= 1; stride /= 2)
        for (size_t i = 2 * stride - 1; i + stride < len; i += 2 * stride)
            combine(scratch + (i + stride) * s, h + (i + stride) * s, scratch + i * s, h + i * s);
}

}  // namespace msr::k::avx2

#endif  // MSR_HAVE_AVX2
