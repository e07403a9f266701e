#include "syzygy/fp_kernels.hpp"

namespace syzygy::fpk {

void axpy_scalar(uint32_t* y, const uint32_t* x, uint32_t a, std::size_t n,
                 const Barrett& br) {
    for (std::size_t i = 0; i < n; ++i) {
        y[i] = br.reduce(static_cast<uint64_t>(a) * x[i] + y[i]);
    }
}

void scale_scalar(uint32_t* y, uint32_t a, std::size_t n, const Barrett& br) {
    for (std::size_t i = 0; i < n; ++i) {
        y[i] = br.reduce(static_cast<uint64_t>(a) * y[i]);
    }
}

Kernels scalar_kernels() { return Kernels{&axpy_scalar, &scale_scalar, "scalar"}; }

#if defined(SYZYGY_HAVE_AVX2_TU)
void axpy_avx2(uint32_t* y, const uint32_t* x, uint32_t a, std::size_t n,
               const Barrett& br);
void scale_avx2(uint32_t* y, uint32_t a, std::size_t n, const Barrett& br);
#endif

std::optional<Kernels> avx2_kernels() {
#if defined(SYZYGY_HAVE_AVX2_TU)
    if (__builtin_cpu_supports("avx2")) {
        return Kernels{&axpy_avx2, &scale_avx2, "avx2"};
    }
#endif
    return std::nullopt;
}

const Kernels& active_kernels() {
    static const Kernels picked = [] {
        if (auto k = avx2_kernels()) return *k;
        return scalar_kernels();
    }();
    return picked;
}

}  // namespace syzygy::fpk
