#include "mobispread/rng.hpp"

#include <stdexcept>

namespace mobispread {

RngStream RngStream::derive(std::uint64_t seed, std::uint64_t stream_id) noexcept {
    SplitMix64 sm(mix64(seed) ^ mix64(stream_id + 0x9e3779b97f4a7c15ULL));
    std::array<std::uint64_t, 4> state{};
    for (auto& word : state) word = sm.next();
    if ((state[0] | state[1] | state[2] | state[3]) == 0) {
        state = {0x180ec6d33cfd0abaULL, 0xd5a61266f0c9392cULL,
                 0xa9582618e03fc9aaULL, 0x39abdc4529b1661cULL};
    }
    return RngStream(state, stream_id);
}

void RngStream::throw_zero_range() {
    throw std::invalid_argument("uniform_index: n must be positive");
}

std::uint64_t RngStream::uniform_index_slow(std::uint64_t n, uint128_t m) {
    const std::uint64_t threshold = (0 - n) % n;
    while (static_cast<std::uint64_t>(m) < threshold)
        m = static_cast<uint128_t>(next_u64()) * n;
    return static_cast<std::uint64_t>(m >> 64);
}

}  // namespace mobispread
