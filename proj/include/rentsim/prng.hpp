#pragma once

#include <cstdint>

namespace rentsim {

/// Seedable random stream: PCG32 (XSH-RR output on a 64-bit LCG).
///
/// Streams are selected by an odd increment derived from the stream id, so
/// (master_seed, stream_id) fully determines the sample sequence and streams
/// with distinct ids are independent for practical purposes. Period is 2^64
/// per stream. Output depends only on integer arithmetic, so sequences are
/// identical across platforms.
///
/// A stream is single-owner mutable state: one run uses it at a time.
class RandomStream {
public:
    RandomStream(std::uint64_t master_seed, std::uint64_t stream_id);

    std::uint32_t next_u32();

    /// Uniform on [0, 1) with 53 random bits. Consumes two 32-bit outputs,
    /// high word first.
    double next_double();

    /// True with probability p. p <= 0 never fires, p >= 1 always fires.
    bool next_bernoulli(double p);

    std::uint64_t stream_id() const { return stream_id_; }

private:
    std::uint64_t state_;
    std::uint64_t inc_;
    std::uint64_t stream_id_;
};

RandomStream make_stream(std::uint64_t master_seed, std::uint64_t stream_id);

}  // namespace rentsim
