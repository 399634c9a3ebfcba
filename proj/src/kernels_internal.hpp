#pragma once

#include "jsdmix/kernels.hpp"

namespace jsdmix::kernels {

#if defined(JSDMIX_HAVE_AVX2)
// Defined in kernels_avx2.cpp, which is compiled with -mavx2 -mfma. Only
// call after checking cpu_supports_avx2().
const KernelOps& avx2_kernels();
#endif

bool cpu_supports_avx2();

}  // namespace jsdmix::kernels
