#include "tqi/bitvec.hpp"

namespace tqi {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const BitKernels& active_kernels() {
    static const BitKernels& chosen = cpu_has_avx2() ? avx2_kernels() : scalar_kernels();
    return chosen;
}

}  // namespace tqi
