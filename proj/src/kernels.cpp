#include "singraph/kernels.hpp"

#include "singraph/rational.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <string>

namespace sg::kernels {

namespace scalar {

auto and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) -> std::uint64_t {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < words; ++i) c += static_cast<std::uint64_t>(__builtin_popcountll(a[i] & b[i]));
    return c;
}

auto popcount(const std::uint64_t* a, std::size_t words) -> std::uint64_t {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < words; ++i) c += static_cast<std::uint64_t>(__builtin_popcountll(a[i]));
    return c;
}

void bernoulli_mask(const std::uint32_t* u, const std::uint64_t* thr, std::size_t m, std::uint64_t* out) {
    std::memset(out, 0, ((m + 63) / 64) * sizeof(std::uint64_t));
    for (std::size_t j = 0; j < m; ++j)
        if (u[j] < thr[j]) out[j / 64] |= std::uint64_t{1} << (j % 64);
}

void caxpy(std::complex<double>* y, std::complex<double> a, const std::complex<double>* x, std::size_t m) {
    for (std::size_t j = 0; j < m; ++j) y[j] -= a * x[j];
}

}  // namespace scalar

namespace {

std::atomic<int> g_isa{-1};

auto detect() -> Isa {
    if (const char* env = std::getenv("SINGRAPH_ISA"); env && std::string(env) == "scalar") return Isa::scalar;
    return avx2_available() ? Isa::avx2 : Isa::scalar;
}

}  // namespace

auto avx2_available() -> bool {
#if defined(__x86_64__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
    return false;
#endif
}

auto active_isa() -> Isa {
    int v = g_isa.load(std::memory_order_relaxed);
    if (v < 0) {
        v = static_cast<int>(detect());
        g_isa.store(v, std::memory_order_relaxed);
    }
    return static_cast<Isa>(v);
}

void set_isa(Isa isa) {
    if (isa == Isa::avx2 && !avx2_available()) throw ValidationError("AVX2 is not available on this host");
    g_isa.store(static_cast<int>(isa), std::memory_order_relaxed);
}

auto isa_name(Isa isa) -> const char* { return isa == Isa::avx2 ? "avx2" : "scalar"; }

#if defined(__x86_64__)
#define SG_DISPATCH(fn, ...) (active_isa() == Isa::avx2 ? avx2::fn(__VA_ARGS__) : scalar::fn(__VA_ARGS__))
#else
#define SG_DISPATCH(fn, ...) scalar::fn(__VA_ARGS__)
#endif

auto and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) -> std::uint64_t {
    return SG_DISPATCH(and_popcount, a, b, words);
}

auto popcount(const std::uint64_t* a, std::size_t words) -> std::uint64_t { return SG_DISPATCH(popcount, a, words); }

void bernoulli_mask(const std::uint32_t* u, const std::uint64_t* thr, std::size_t m, std::uint64_t* out) {
    SG_DISPATCH(bernoulli_mask, u, thr, m, out);
}

void caxpy(std::complex<double>* y, std::complex<double> a, const std::complex<double>* x, std::size_t m) {
    SG_DISPATCH(caxpy, y, a, x, m);
}

#undef SG_DISPATCH

}  // namespace sg::kernels
