#include "vmr/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace vmr::kernels {

const Ops* avx2_ops_impl();

const Ops* avx2_ops() {
#if defined(__x86_64__) || defined(_M_X64)
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
    return avx2_ops_impl();
#endif
  return nullptr;
}

const Ops& active_ops() {
  static const Ops* selected = [] {
    const char* force = std::getenv("VMR_KERNELS");
    if (force && std::strcmp(force, "scalar") == 0) return &scalar_ops();
    const Ops* simd = avx2_ops();
    if (force && std::strcmp(force, "avx2") == 0 && simd) return simd;
    return simd ? simd : &scalar_ops();
  }();
  return *selected;
}

}  // namespace vmr::kernels
