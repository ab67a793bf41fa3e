#include <algorithm>
#include <cmath>

#include "hap/kernels.hpp"

namespace hap::kernels {
namespace {

inline const double* row(const double* p, int64_t r, int64_t stride) { return p + r * stride; }

void gemm_scalar(bool trans_a, bool trans_b, int64_t m, int64_t n, int64_t k,
                 const double* a, const double* b, double* c, bool accumulate) {
  if (!accumulate) std::fill(c, c + m * n, 0.0);
  if (!trans_a && !trans_b) {
    // C[i,:] += A[i,p] * B[p,:]
    for (int64_t i = 0; i < m; ++i) {
      double* ci = c + i * n;
      const double* ai = row(a, i, k);
      for (int64_t p = 0; p < k; ++p) {
        double av = ai[p];
        const double* bp = row(b, p, n);
        for (int64_t j = 0; j < n; ++j) ci[j] += av * bp[j];
      }
    }
  } else if (!trans_a && trans_b) {
    // C[i,j] += dot(A[i,:], B[j,:])
    for (int64_t i = 0; i < m; ++i) {
      const double* ai = row(a, i, k);
      double* ci = c + i * n;
      for (int64_t j = 0; j < n; ++j) {
        const double* bj = row(b, j, k);
        double acc = 0.0;
        for (int64_t p = 0; p < k; ++p) acc += ai[p] * bj[p];
        ci[j] += acc;
      }
    }
  } else if (trans_a && !trans_b) {
    // A is [K,M]; C[i,:] += A[p,i] * B[p,:]
    for (int64_t p = 0; p < k; ++p) {
      const double* ap = row(a, p, m);
      const double* bp = row(b, p, n);
      for (int64_t i = 0; i < m; ++i) {
        double av = ap[i];
        double* ci = c + i * n;
        for (int64_t j = 0; j < n; ++j) ci[j] += av * bp[j];
      }
    }
  } else {
    // A [K,M], B [N,K]
    for (int64_t i = 0; i < m; ++i) {
      double* ci = c + i * n;
      for (int64_t j = 0; j < n; ++j) {
        const double* bj = row(b, j, k);
        double acc = 0.0;
        for (int64_t p = 0; p < k; ++p) acc += a[p * m + i] * bj[p];
        ci[j] += acc;
      }
    }
  }
}

void add_scalar(const double* a, const double* b, double* out, int64_t n) {
  for (int64_t i = 0; i < n; ++i) out[i] = a[i] + b[i];
}

void mul_scalar(const double* a, const double* b, double* out, int64_t n) {
  for (int64_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

void affine_scalar(const double* a, double alpha, double beta, double* out, int64_t n) {
  for (int64_t i = 0; i < n; ++i) out[i] = alpha * a[i] + beta;
}

void axpy_scalar(double alpha, const double* x, double* y, int64_t n) {
  for (int64_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void gated_mix_acc_scalar(double z, const double* a, const double* c, double* out, int64_t n) {
  const double w = 1.0 - z;
  for (int64_t i = 0; i < n; ++i) out[i] += z * a[i] + w * c[i];
}

double dot_scalar(const double* a, const double* b, int64_t n) {
  double acc = 0.0;
  for (int64_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double dot_diff_scalar(const double* g, const double* a, const double* c, int64_t n) {
  double acc = 0.0;
  for (int64_t i = 0; i < n; ++i) acc += g[i] * (a[i] - c[i]);
  return acc;
}

double sum_scalar(const double* a, int64_t n) {
  double acc = 0.0;
  for (int64_t i = 0; i < n; ++i) acc += a[i];
  return acc;
}

double max_scalar(const double* a, int64_t n) {
  double m = a[0];
  for (int64_t i = 1; i < n; ++i) m = std::max(m, a[i]);
  return m;
}

}  // namespace

// libm-backed; shared by both tables (no vectorized transcendental variants).
void vexp_libm(const double* a, double* out, int64_t n) {
  for (int64_t i = 0; i < n; ++i) out[i] = std::exp(a[i]);
}
void vlog_libm(const double* a, double* out, int64_t n) {
  for (int64_t i = 0; i < n; ++i) out[i] = std::log(a[i]);
}
void vsigmoid_libm(const double* a, double* out, int64_t n) {
  for (int64_t i = 0; i < n; ++i) {
    double x = a[i];
    out[i] = x >= 0.0 ? 1.0 / (1.0 + std::exp(-x)) : std::exp(x) / (1.0 + std::exp(x));
  }
}
void vtanh_libm(const double* a, double* out, int64_t n) {
  for (int64_t i = 0; i < n; ++i) out[i] = std::tanh(a[i]);
}

const KernelTable& scalar_table() {
  static const KernelTable t{
      "scalar",       gemm_scalar,     add_scalar, mul_scalar, affine_scalar,
      axpy_scalar,    gated_mix_acc_scalar, dot_scalar, dot_diff_scalar, sum_scalar,
      max_scalar,     vexp_libm,       vlog_libm,  vsigmoid_libm, vtanh_libm,
  };
  return t;
}

}  // namespace hap::kernels
