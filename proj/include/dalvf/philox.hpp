#pragma once

#include <array>
#include <cmath>
#include <cstdint>

// Counter-based random numbers (Philox4x32-10). Each (seed, stream) pair is
// an independent, reproducible stream; streams occupy disjoint counter blocks
// so they can never overlap, and a stream's output depends only on how many
// draws it has produced, not on threads or scheduling.

namespace dalvf::mc {

struct Philox4x32 {
    using Block = std::array<std::uint32_t, 4>;

    static Block block(Block ctr, std::uint32_t k0, std::uint32_t k1) {
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t p0 = std::uint64_t{0xD2511F53u} * ctr[0];
            const std::uint64_t p1 = std::uint64_t{0xCD9E8D57u} * ctr[2];
            ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ k0,
                   static_cast<std::uint32_t>(p1),
                   static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ k1,
                   static_cast<std::uint32_t>(p0)};
            k0 += 0x9E3779B9u;
            k1 += 0xBB67AE85u;
        }
        return ctr;
    }
};

class StreamRng {
public:
    StreamRng(std::uint64_t seed, std::uint64_t stream)
        : key0_(static_cast<std::uint32_t>(seed)),
          key1_(static_cast<std::uint32_t>(seed >> 32)),
          stream_lo_(static_cast<std::uint32_t>(stream)),
          stream_hi_(static_cast<std::uint32_t>(stream >> 32)) {}

    /// Uniform on (0, 1) with 53 random bits; never exactly 0 or 1.
    double uniform() {
        const Philox4x32::Block b = next_block();
        const std::uint64_t bits =
            (static_cast<std::uint64_t>(b[0]) << 32) | b[1];
        return (static_cast<double>(bits >> 11) + 0.5) * 0x1p-53;
    }

    double exponential(double mean) { return -mean * std::log(uniform()); }

    /// Standard normal (Box-Muller, cosine branch).
    double normal() {
        const double u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(6.283185307179586477 * u2);
    }

private:
    Philox4x32::Block next_block() {
        const Philox4x32::Block ctr{static_cast<std::uint32_t>(draws_),
                                    static_cast<std::uint32_t>(draws_ >> 32),
                                    stream_lo_, stream_hi_};
        ++draws_;
        return Philox4x32::block(ctr, key0_, key1_);
    }

    std::uint32_t key0_, key1_, stream_lo_, stream_hi_;
    std::uint64_t draws_ = 0;
};

}  // namespace dalvf::mc
