#include "neqr/kernels.hpp"

namespace neqr::kern {

#if defined(NEQR_HAVE_AVX2)
namespace detail {
const KernelSet* avx2_kernelset();
}
#endif

namespace {

bool cpu_has_avx2() {
#if defined(NEQR_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

const KernelSet* best_supported() {
    if (const KernelSet* avx2 = avx2_kernels()) {
        return avx2;
    }
    return &scalar_kernels();
}

const KernelSet*& active_slot() {
    static const KernelSet* current = best_supported();
    return current;
}

} // namespace

const KernelSet* avx2_kernels() {
#if defined(NEQR_HAVE_AVX2)
    if (cpu_has_avx2()) {
        return detail::avx2_kernelset();
    }
#endif
    return nullptr;
}

const KernelSet& active() {
    return *active_slot();
}

bool select(std::string_view name) {
    if (name == "auto") {
        active_slot() = best_supported();
        return true;
    }
    if (name == "scalar") {
        active_slot() = &scalar_kernels();
        return true;
    }
    if (name == "avx2") {
        if (const KernelSet* avx2 = avx2_kernels()) {
            active_slot() = avx2;
            return true;
        }
        return false;
    }
    return false;
}

} // namespace neqr::kern
