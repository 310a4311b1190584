#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace sg {

// Philox4x32-10 block function.
using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;
auto philox4x32(PhiloxCounter ctr, PhiloxKey key) -> PhiloxCounter;

// Counter-based stream: key = seed, counter = (block index, stream id).
// Distinct (seed, stream) pairs give independent sequences, and any draw is
// addressable without generating its predecessors.
class Philox {
public:
    using result_type = std::uint32_t;

    Philox(std::uint64_t seed, std::uint64_t stream, std::uint64_t block = 0);

    static constexpr auto min() -> result_type { return 0; }
    static constexpr auto max() -> result_type { return std::numeric_limits<result_type>::max(); }
    auto operator()() -> result_type;
    auto next_u64() -> std::uint64_t;
    // Uniform in [0, 1) with 53 random bits.
    auto uniform() -> double;
    // Jumps to the first word of block b.
    void seek(std::uint64_t block);

private:
    PhiloxKey key_;
    std::uint64_t stream_;
    std::uint64_t block_ = 0;
    PhiloxCounter buffer_{};
    int used_ = 4;
};

}  // namespace sg
