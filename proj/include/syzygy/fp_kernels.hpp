#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

namespace syzygy::fpk {

// Barrett reduction context for a fixed modulus p < 2^31. reduce() is exact
// for any t < 2^63, which covers a*x + y with a, x < p and y < p.
struct Barrett {
    uint32_t p;
    uint64_t inv;  // floor(2^64 / p)

    explicit Barrett(uint32_t p_) : p(p_), inv(static_cast<uint64_t>((static_cast<unsigned __int128>(1) << 64) / p_)) {}

    uint32_t reduce(uint64_t t) const {
        // q = floor(t * inv / 2^64) is floor(t/p) or floor(t/p) - 1 for
        // t < 2^63, so at most one correction step is needed.
        uint64_t q = static_cast<uint64_t>((static_cast<unsigned __int128>(t) * inv) >> 64);
        uint64_t r = t - q * p;
        if (r >= p) r -= p;
        return static_cast<uint32_t>(r);
    }
};

// Row kernels. All values are residues in [0, p).
//   axpy: y[i] <- (y[i] + a * x[i]) mod p
//   scale: y[i] <- (a * y[i]) mod p
using AxpyFn = void (*)(uint32_t* y, const uint32_t* x, uint32_t a, std::size_t n,
                        const Barrett& br);
using ScaleFn = void (*)(uint32_t* y, uint32_t a, std::size_t n, const Barrett& br);

struct Kernels {
    AxpyFn axpy;
    ScaleFn scale;
    const char* name;
};

void axpy_scalar(uint32_t* y, const uint32_t* x, uint32_t a, std::size_t n,
                 const Barrett& br);
void scale_scalar(uint32_t* y, uint32_t a, std::size_t n, const Barrett& br);

Kernels scalar_kernels();

// AVX2 variant; present only when both the build and the host CPU support it.
std::optional<Kernels> avx2_kernels();

// The implementation picked at startup: AVX2 when available, scalar otherwise.
const Kernels& active_kernels();

}  // namespace syzygy::fpk
