#include <cstdlib>
#include <string>

#include "hap/kernels.hpp"

namespace hap::kernels {

const KernelTable& scalar_table();
const KernelTable* avx2_table_or_null();

bool avx2_available() {
#if defined(__x86_64__) || defined(__i386__)
  if (avx2_table_or_null() == nullptr) return false;
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable& table(Backend b) {
  if (b == Backend::avx2 && avx2_available()) return *avx2_table_or_null();
  return scalar_table();
}

namespace {
const KernelTable& select_active() {
  if (const char* env = std::getenv("HAP_KERNELS")) {
    std::string v(env);
    if (v == "scalar") return scalar_table();
    if (v == "avx2") return table(Backend::avx2);
  }
  return table(avx2_available() ? Backend::avx2 : Backend::scalar);
}
}  // namespace

const KernelTable& K() {
  static const KernelTable& t = select_active();
  return t;
}

std::string active_backend_name() { return K().name; }

}  // namespace hap::kernels
