#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "singraph/kernels.hpp"
#include "singraph/rng.hpp"

#include <vector>

using namespace sg;
using namespace sg::kernels;

TEST_CASE("dispatch reports an ISA") {
    Isa isa = active_isa();
    CHECK((isa == Isa::scalar || avx2_available()));
    set_isa(Isa::scalar);
    CHECK(active_isa() == Isa::scalar);
    if (avx2_available()) set_isa(Isa::avx2);
}

#if defined(__x86_64__)
TEST_CASE("AVX2 kernels agree with the scalar reference") {
    if (!avx2_available()) return;
    Philox rng(99, 0);
    for (std::size_t len : {0u, 1u, 3u, 4u, 5u, 63u, 64u, 65u, 127u, 1000u}) {
        std::vector<std::uint64_t> a(len), b(len);
        for (std::size_t i = 0; i < len; ++i) {
            a[i] = rng.next_u64();
            b[i] = rng.next_u64();
        }
        CHECK(avx2::and_popcount(a.data(), b.data(), len) == scalar::and_popcount(a.data(), b.data(), len));
        CHECK(avx2::popcount(a.data(), len) == scalar::popcount(a.data(), len));

        std::vector<std::uint32_t> u(len);
        std::vector<std::uint64_t> thr(len);
        for (std::size_t i = 0; i < len; ++i) {
            u[i] = rng();
            std::uint32_t pick = rng() % 4;
            thr[i] = pick == 0 ? 0 : pick == 1 ? (std::uint64_t{1} << 32) : pick == 2 ? u[i] : rng();
        }
        std::vector<std::uint64_t> m1((len + 63) / 64 + 1, ~0ull), m2 = m1;
        avx2::bernoulli_mask(u.data(), thr.data(), len, m1.data());
        scalar::bernoulli_mask(u.data(), thr.data(), len, m2.data());
        CHECK(m1 == m2);

        std::vector<std::complex<double>> x(len), y1(len);
        for (std::size_t i = 0; i < len; ++i) {
            x[i] = {rng.uniform() - 0.5, rng.uniform() - 0.5};
            y1[i] = {rng.uniform(), rng.uniform()};
        }
        auto y2 = y1;
        std::complex<double> alpha(0.3, -1.7);
        avx2::caxpy(y1.data(), alpha, x.data(), len);
        scalar::caxpy(y2.data(), alpha, x.data(), len);
        for (std::size_t i = 0; i < len; ++i) CHECK(std::abs(y1[i] - y2[i]) < 1e-14);
    }
}
#endif

TEST_CASE("threshold edge cases") {
    std::uint32_t u[3] = {0, 0xffffffffu, 5};
    std::uint64_t thr[3] = {0, std::uint64_t{1} << 32, 5};
    std::uint64_t out = 0;
    bernoulli_mask(u, thr, 3, &out);
    CHECK(out == 0b010);
}
