// AVX2+FMA variants of the hot kernels. Built with -mavx2 -mfma; only the
// dispatcher decides whether this table is used, after a runtime CPU check.

#include "hap/kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

#include <algorithm>
#include <cmath>

namespace hap::kernels {

void vexp_libm(const double* a, double* out, int64_t n);
void vlog_libm(const double* a, double* out, int64_t n);
void vsigmoid_libm(const double* a, double* out, int64_t n);
void vtanh_libm(const double* a, double* out, int64_t n);

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

// C[i,:] += a_val * B[p,:] over a row of length n.
inline void fmadd_row(double av, const double* bp, double* ci, int64_t n) {
  __m256d va = _mm256_set1_pd(av);
  int64_t j = 0;
  for (; j + 8 <= n; j += 8) {
    __m256d c0 = _mm256_loadu_pd(ci + j);
    __m256d c1 = _mm256_loadu_pd(ci + j + 4);
    c0 = _mm256_fmadd_pd(va, _mm256_loadu_pd(bp + j), c0);
    c1 = _mm256_fmadd_pd(va, _mm256_loadu_pd(bp + j + 4), c1);
    _mm256_storeu_pd(ci + j, c0);
    _mm256_storeu_pd(ci + j + 4, c1);
  }
  for (; j + 4 <= n; j += 4) {
    __m256d c0 = _mm256_loadu_pd(ci + j);
    c0 = _mm256_fmadd_pd(va, _mm256_loadu_pd(bp + j), c0);
    _mm256_storeu_pd(ci + j, c0);
  }
  for (; j < n; ++j) ci[j] += av * bp[j];
}

inline double dot_avx(const double* a, const double* b, int64_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  int64_t i = 0;
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

void gemm_avx2(bool trans_a, bool trans_b, int64_t m, int64_t n, int64_t k,
               const double* a, const double* b, double* c, bool accumulate) {
  if (!accumulate) std::fill(c, c + m * n, 0.0);
  if (!trans_a && !trans_b) {
    for (int64_t i = 0; i < m; ++i) {
      double* ci = c + i * n;
      const double* ai = a + i * k;
      for (int64_t p = 0; p < k; ++p) fmadd_row(ai[p], b + p * n, ci, n);
    }
  } else if (!trans_a && trans_b) {
    for (int64_t i = 0; i < m; ++i) {
      const double* ai = a + i * k;
      double* ci = c + i * n;
      for (int64_t j = 0; j < n; ++j) ci[j] += dot_avx(ai, b + j * k, k);
    }
  } else if (trans_a && !trans_b) {
    for (int64_t p = 0; p < k; ++p) {
      const double* ap = a + p * m;
      const double* bp = b + p * n;
      for (int64_t i = 0; i < m; ++i) fmadd_row(ap[i], bp, c + i * n, n);
    }
  } else {
    for (int64_t i = 0; i < m; ++i) {
      double* ci = c + i * n;
      for (int64_t j = 0; j < n; ++j) {
        const double* bj = b + j * k;
        double acc = 0.0;
        for (int64_t p = 0; p < k; ++p) acc += a[p * m + i] * bj[p];
        ci[j] += acc;
      }
    }
  }
}

void add_avx2(const double* a, const double* b, double* out, int64_t n) {
  int64_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  for (; i < n; ++i) out[i] = a[i] + b[i];
}

void mul_avx2(const double* a, const double* b, double* out, int64_t n) {
  int64_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  for (; i < n; ++i) out[i] = a[i] * b[i];
}

void affine_avx2(const double* a, double alpha, double beta, double* out, int64_t n) {
  __m256d va = _mm256_set1_pd(alpha);
  __m256d vb = _mm256_set1_pd(beta);
  int64_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(out + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(a + i), vb));
  for (; i < n; ++i) out[i] = alpha * a[i] + beta;
}

void axpy_avx2(double alpha, const double* x, double* y, int64_t n) {
  __m256d va = _mm256_set1_pd(alpha);
  int64_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vy = _mm256_loadu_pd(y + i);
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void gated_mix_acc_avx2(double z, const double* a, const double* c, double* out, int64_t n) {
  const double w = 1.0 - z;
  __m256d vz = _mm256_set1_pd(z);
  __m256d vw = _mm256_set1_pd(w);
  int64_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vo = _mm256_loadu_pd(out + i);
    vo = _mm256_fmadd_pd(vz, _mm256_loadu_pd(a + i), vo);
    vo = _mm256_fmadd_pd(vw, _mm256_loadu_pd(c + i), vo);
    _mm256_storeu_pd(out + i, vo);
  }
  for (; i < n; ++i) out[i] += z * a[i] + w * c[i];
}

double dot_diff_avx2(const double* g, const double* a, const double* c, int64_t n) {
  __m256d acc = _mm256_setzero_pd();
  int64_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(c + i));
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(g + i), d, acc);
  }
  double r = hsum(acc);
  for (; i < n; ++i) r += g[i] * (a[i] - c[i]);
  return r;
}

double sum_avx2(const double* a, int64_t n) {
  __m256d acc = _mm256_setzero_pd();
  int64_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(a + i));
  double r = hsum(acc);
  for (; i < n; ++i) r += a[i];
  return r;
}

double max_avx2(const double* a, int64_t n) {
  if (n < 8) {
    double m = a[0];
    for (int64_t i = 1; i < n; ++i) m = std::max(m, a[i]);
    return m;
  }
  __m256d vm = _mm256_loadu_pd(a);
  int64_t i = 4;
  for (; i + 4 <= n; i += 4) vm = _mm256_max_pd(vm, _mm256_loadu_pd(a + i));
  alignas(32) double tmp[4];
  _mm256_store_pd(tmp, vm);
  double m = std::max(std::max(tmp[0], tmp[1]), std::max(tmp[2], tmp[3]));
  for (; i < n; ++i) m = std::max(m, a[i]);
  return m;
}

}  // namespace

const KernelTable* avx2_table_or_null() {
  static const KernelTable t{
      "avx2",      gemm_avx2,     add_avx2, mul_avx2, affine_avx2,
      axpy_avx2,   gated_mix_acc_avx2, dot_avx, dot_diff_avx2, sum_avx2,
      max_avx2,    vexp_libm,     vlog_libm, vsigmoid_libm, vtanh_libm,
  };
  return &t;
}

}  // namespace hap::kernels

#else

namespace hap::kernels {
const KernelTable* avx2_table_or_null() { return nullptr; }
}  // namespace hap::kernels

#endif
