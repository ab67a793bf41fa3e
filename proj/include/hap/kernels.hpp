#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace hap::kernels {

// Dense f64 kernels behind the autodiff primitives. Every entry has a scalar
// reference implementation and (on x86-64 with AVX2+FMA) a vectorized variant;
// the active table is chosen once at startup. The two variants are
// equivalence-tested against each other; they may differ by reassociation and
// FMA rounding, never in semantics.

// C[M,N] = (accumulate ? C : 0) + op_a(A) * op_b(B), row-major.
// trans_a/trans_b interpret A as [K,M] / B as [N,K] and transpose on the fly.
using GemmFn = void (*)(bool trans_a, bool trans_b, int64_t m, int64_t n, int64_t k,
                        const double* a, const double* b, double* c, bool accumulate);
using BinFn = void (*)(const double* a, const double* b, double* out, int64_t n);
using AffineFn = void (*)(const double* a, double alpha, double beta, double* out, int64_t n);
using AxpyFn = void (*)(double alpha, const double* x, double* y, int64_t n);
using GatedMixFn = void (*)(double z, const double* a, const double* c, double* out, int64_t n);
using DotFn = double (*)(const double* a, const double* b, int64_t n);
using DotDiffFn = double (*)(const double* g, const double* a, const double* c, int64_t n);
using ReduceFn = double (*)(const double* a, int64_t n);
using UnaryFn = void (*)(const double* a, double* out, int64_t n);

struct KernelTable {
  const char* name;
  GemmFn gemm;
  BinFn add;        // out = a + b
  BinFn mul;        // out = a * b
  AffineFn affine;  // out = alpha * a + beta
  AxpyFn axpy;      // y += alpha * x
  GatedMixFn gated_mix_acc;  // out += z*a + (1-z)*c
  DotFn dot;                 // sum a_i b_i
  DotDiffFn dot_diff;        // sum g_i (a_i - c_i)
  ReduceFn sum;
  ReduceFn max;
  // Transcendentals share the libm-backed implementation in both tables.
  UnaryFn vexp;
  UnaryFn vlog;
  UnaryFn vsigmoid;
  UnaryFn vtanh;
};

enum class Backend { scalar, avx2 };

// Table for an explicit backend; avx2 falls back to scalar when the build or
// the CPU lacks support.
const KernelTable& table(Backend b);

bool avx2_available();

// Active table: avx2 when available, overridable with HAP_KERNELS=scalar|avx2.
const KernelTable& K();

std::string active_backend_name();

}  // namespace hap::kernels
