#include "jsdmix/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>

#include "kernels_internal.hpp"

namespace jsdmix::kernels {

bool cpu_supports_avx2() {
#if defined(JSDMIX_HAVE_AVX2)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace {

const KernelOps* pick_default() {
  if (const char* env = std::getenv("JSDMIX_KERNELS")) {
    const std::string want(env);
    if (want == "scalar") return &scalar_kernels();
#if defined(JSDMIX_HAVE_AVX2)
    if (want == "avx2" && cpu_supports_avx2()) return &avx2_kernels();
#endif
    if (!want.empty()) return &scalar_kernels();
  }
#if defined(JSDMIX_HAVE_AVX2)
  if (cpu_supports_avx2()) return &avx2_kernels();
#endif
  return &scalar_kernels();
}

std::atomic<const KernelOps*>& active_slot() {
  static std::atomic<const KernelOps*> slot{pick_default()};
  return slot;
}

}  // namespace

const KernelOps& active_kernels() { return *active_slot().load(); }

void force_kernels(const std::string& name) {
  if (name == "scalar") {
    active_slot().store(&scalar_kernels());
    return;
  }
#if defined(JSDMIX_HAVE_AVX2)
  if (name == "avx2") {
    if (!cpu_supports_avx2()) {
      throw std::runtime_error("avx2 kernels requested but CPU lacks AVX2/FMA");
    }
    active_slot().store(&avx2_kernels());
    return;
  }
#endif
  throw std::runtime_error("unknown kernel set: " + name);
}

std::vector<std::string> available_kernels() {
  std::vector<std::string> names{"scalar"};
#if defined(JSDMIX_HAVE_AVX2)
  if (cpu_supports_avx2()) names.emplace_back("avx2");
#endif
  return names;
}

}  // namespace jsdmix::kernels
