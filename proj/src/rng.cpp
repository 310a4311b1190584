#include "singraph/rng.hpp"

#include <cstddef>

namespace sg {

namespace {

constexpr std::uint32_t kM0 = 0xD2511F53;
constexpr std::uint32_t kM1 = 0xCD9E8D57;
constexpr std::uint32_t kW0 = 0x9E3779B9;
constexpr std::uint32_t kW1 = 0xBB67AE85;

inline auto round(const PhiloxCounter& c, const PhiloxKey& k) -> PhiloxCounter {
    std::uint64_t p0 = static_cast<std::uint64_t>(kM0) * c[0];
    std::uint64_t p1 = static_cast<std::uint64_t>(kM1) * c[2];
    auto hi0 = static_cast<std::uint32_t>(p0 >> 32), lo0 = static_cast<std::uint32_t>(p0);
    auto hi1 = static_cast<std::uint32_t>(p1 >> 32), lo1 = static_cast<std::uint32_t>(p1);
    return {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
}

}  // namespace

auto philox4x32(PhiloxCounter ctr, PhiloxKey key) -> PhiloxCounter {
    for (int r = 0; r < 10; ++r) {
        if (r > 0) {
            key[0] += kW0;
            key[1] += kW1;
        }
        ctr = round(ctr, key);
    }
    return ctr;
}

Philox::Philox(std::uint64_t seed, std::uint64_t stream, std::uint64_t block)
    : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)}, stream_(stream), block_(block) {}

void Philox::seek(std::uint64_t block) {
    block_ = block;
    used_ = 4;
}

auto Philox::operator()() -> result_type {
    if (used_ == 4) {
        PhiloxCounter c = {static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
                           static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32)};
        buffer_ = philox4x32(c, key_);
        ++block_;
        used_ = 0;
    }
    return buffer_[static_cast<std::size_t>(used_++)];
}

auto Philox::next_u64() -> std::uint64_t {
    std::uint64_t hi = (*this)();
    return (hi << 32) | (*this)();
}

auto Philox::uniform() -> double { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

}  // namespace sg
