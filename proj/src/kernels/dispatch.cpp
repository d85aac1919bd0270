#include <atomic>
#include <cstdlib>
#include <cstring>

#include "rossby/kernels.hpp"

namespace rossby::kernels {

#if defined(ROSSBY_HAVE_AVX2)
const Backend* avx2_backend_impl();
#endif
#if defined(ROSSBY_HAVE_NEON)
const Backend* neon_backend_impl();
#endif

const Backend* avx2_backend() {
#if defined(ROSSBY_HAVE_AVX2)
    if (__builtin_cpu_supports("avx2")) {
        return avx2_backend_impl();
    }
#endif
    return nullptr;
}

const Backend* neon_backend() {
#if defined(ROSSBY_HAVE_NEON)
    return neon_backend_impl();  // baseline on aarch64
#else
    return nullptr;
#endif
}

namespace {

const Backend* detect() {
    if (const char* env = std::getenv("ROSSBY_KERNEL")) {
        if (std::strcmp(env, "scalar") == 0) return &scalar_backend();
        if (std::strcmp(env, "avx2") == 0 && avx2_backend()) return avx2_backend();
        if (std::strcmp(env, "neon") == 0 && neon_backend()) return neon_backend();
        if (std::strcmp(env, "auto") != 0) return &scalar_backend();
    }
    if (const Backend* b = avx2_backend()) return b;
    if (const Backend* b = neon_backend()) return b;
    return &scalar_backend();
}

std::atomic<const Backend*> g_forced{nullptr};

}  // namespace

const Backend& active_backend() {
    if (const Backend* f = g_forced.load(std::memory_order_acquire)) {
        return *f;
    }
    static const Backend* chosen = detect();
    return *chosen;
}

void force_backend(const Backend* backend) {
    g_forced.store(backend, std::memory_order_release);
}

}  // namespace rossby::kernels
