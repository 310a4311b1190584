#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>

// Hot loops with a scalar reference and an AVX2 variant chosen at runtime.
// SINGRAPH_ISA=scalar in the environment forces the reference path.
namespace sg::kernels {

enum class Isa { scalar, avx2 };

auto active_isa() -> Isa;
auto isa_name(Isa isa) -> const char*;
auto avx2_available() -> bool;
// Overrides the dispatch (tests); selecting avx2 on a host without it throws.
void set_isa(Isa isa);

// popcount(a & b) over `words` 64-bit words.
auto and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) -> std::uint64_t;
auto popcount(const std::uint64_t* a, std::size_t words) -> std::uint64_t;
// Bit j of out is set iff u[j] < thr[j]; thresholds lie in [0, 2^32].
// out must hold ceil(m / 64) words and is overwritten.
void bernoulli_mask(const std::uint32_t* u, const std::uint64_t* thr, std::size_t m, std::uint64_t* out);
// y -= a * x.
void caxpy(std::complex<double>* y, std::complex<double> a, const std::complex<double>* x, std::size_t m);

namespace scalar {
auto and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) -> std::uint64_t;
auto popcount(const std::uint64_t* a, std::size_t words) -> std::uint64_t;
void bernoulli_mask(const std::uint32_t* u, const std::uint64_t* thr, std::size_t m, std::uint64_t* out);
void caxpy(std::complex<double>* y, std::complex<double> a, const std::complex<double>* x, std::size_t m);
}  // namespace scalar

#if defined(__x86_64__)
namespace avx2 {
auto and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) -> std::uint64_t;
auto popcount(const std::uint64_t* a, std::size_t words) -> std::uint64_t;
void bernoulli_mask(const std::uint32_t* u, const std::uint64_t* thr, std::size_t m, std::uint64_t* out);
void caxpy(std::complex<double>* y, std::complex<double> a, const std::complex<double>* x, std::size_t m);
}  // namespace avx2
#endif

}  // namespace sg::kernels
