#include "rentsim/prng.hpp"

namespace rentsim {

namespace {

// splitmix64 finalizer; bijective on u64, used to spread small seeds and
// stream ids over the whole state space.
std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t kPcgMult = 6364136223846793005ULL;

}  // namespace

RandomStream::RandomStream(std::uint64_t master_seed, std::uint64_t stream_id)
    : stream_id_(stream_id) {
    // Canonical PCG32 seeding with a mixed initstate/initseq pair. mix64 is
    // a bijection, so distinct stream ids keep distinct increments.
    inc_ = (mix64(stream_id) << 1u) | 1u;
    state_ = 0;
    next_u32();
    state_ += mix64(master_seed);
    next_u32();
}

std::uint32_t RandomStream::next_u32() {
    const std::uint64_t old = state_;
    state_ = old * kPcgMult + inc_;
    const auto xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
    const auto rot = static_cast<std::uint32_t>(old >> 59u);
    return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
}

double RandomStream::next_double() {
    const std::uint64_t hi = next_u32();
    const std::uint64_t lo = next_u32();
    const std::uint64_t bits = ((hi << 32) | lo) >> 11;
    return static_cast<double>(bits) * 0x1.0p-53;
}

bool RandomStream::next_bernoulli(double p) {
    return next_double() < p;
}

RandomStream make_stream(std::uint64_t master_seed, std::uint64_t stream_id) {
    return RandomStream(master_seed, stream_id);
}

}  // namespace rentsim
