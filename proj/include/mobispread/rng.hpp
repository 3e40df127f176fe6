#pragma once

// Deterministic random streams.
//
// Every stream is a xoshiro256** generator (Blackman & Vigna, period 2^256-1)
// whose 256-bit state is filled by a splitmix64 sequence keyed on
// (seed, stream_id). Streams are plain values: copying one forks an identical
// sequence, and there is no global generator anywhere in the library.

#include <array>
#include <cstdint>
#include <limits>

namespace mobispread {

__extension__ typedef unsigned __int128 uint128_t;

/// One step of the splitmix64 finalizer; bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
}

class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t state) noexcept : state_(state) {}

    constexpr std::uint64_t next() noexcept {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix64(state_);
    }

private:
    std::uint64_t state_;
};

class RngStream {
public:
    using result_type = std::uint64_t;

    /// Stream fully determined by (seed, stream_id).
    ///
    /// The splitmix64 key is mix64(seed) ^ mix64(stream_id + golden gamma),
    /// and four successive splitmix64 outputs become the xoshiro state. An
    /// all-zero state (the one fixed point of xoshiro) is replaced by a
    /// constant nonzero state.
    static RngStream derive(std::uint64_t seed, std::uint64_t stream_id) noexcept;

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept {
        return std::numeric_limits<result_type>::max();
    }

    /// Raw 64-bit draw (xoshiro256**).
    result_type next_u64() noexcept {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    result_type operator()() noexcept { return next_u64(); }

    /// Uniform real in [0,1) built from the top 53 bits of one raw draw.
    double uniform01() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Unbiased integer in [0, n).
    ///
    /// Lemire's multiply-shift with rejection: one raw draw, plus a redraw
    /// whenever the low product word falls below 2^64 mod n. For powers of
    /// two the rejection set is empty, so exactly one draw is consumed.
    /// Throws std::invalid_argument for n == 0.
    std::uint64_t uniform_index(std::uint64_t n) {
        if (n == 0) throw_zero_range();
        const uint128_t m = static_cast<uint128_t>(next_u64()) * n;
        if (static_cast<std::uint64_t>(m) < n) return uniform_index_slow(n, m);
        return static_cast<std::uint64_t>(m >> 64);
    }

    /// One uniform01() draw compared against prob: `u < prob`.
    /// prob <= 0 never fires and prob >= 1 always does; a draw is consumed
    /// in every case so the stream position does not depend on prob.
    bool bernoulli(double prob) noexcept { return uniform01() < prob; }

    std::uint64_t stream_id() const noexcept { return stream_id_; }
    const std::array<std::uint64_t, 4>& state() const noexcept { return state_; }

    friend bool operator==(const RngStream&, const RngStream&) = default;

private:
    RngStream(std::array<std::uint64_t, 4> state, std::uint64_t stream_id) noexcept
        : state_(state), stream_id_(stream_id) {}

    [[noreturn]] static void throw_zero_range();
    std::uint64_t uniform_index_slow(std::uint64_t n, uint128_t m);

    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_;
    std::uint64_t stream_id_;
};

}  // namespace mobispread
