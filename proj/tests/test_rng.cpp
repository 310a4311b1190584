#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "singraph/rng.hpp"

#include <random>
#include <vector>

using namespace sg;

TEST_CASE("Philox4x32-10 known-answer vectors") {
    CHECK(philox4x32({0, 0, 0, 0}, {0, 0}) == PhiloxCounter{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
    CHECK(philox4x32({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
          PhiloxCounter{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
    CHECK(philox4x32({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
          PhiloxCounter{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("streams are reproducible and seekable") {
    Philox a(42, 7), b(42, 7), c(42, 8);
    std::vector<std::uint32_t> xa, xc;
    for (int i = 0; i < 20; ++i) {
        xa.push_back(a());
        CHECK(b() == xa.back());
        xc.push_back(c());
    }
    CHECK(xa != xc);
    Philox d(42, 7, 3);
    CHECK(d() == xa[12]);
    a.seek(0);
    CHECK(a() == xa[0]);
}

TEST_CASE("uniform draws look uniform") {
    Philox g(1, 0);
    double sum = 0, sq = 0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        double u = g.uniform();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
        sq += u * u;
    }
    CHECK(sum / n == doctest::Approx(0.5).epsilon(0.01));
    CHECK(sq / n == doctest::Approx(1.0 / 3).epsilon(0.01));
    std::uniform_int_distribution<int> die(1, 6);
    CHECK(die(g) >= 1);
}
