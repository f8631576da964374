#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace resyn {

// xoshiro256++ with splitmix64 seeding. Self-contained so that sampled
// streams are reproducible across compilers and serializable into
// checkpoints. Each consumer owns its stream; streams are never shared
// across threads.
class Rng {
public:
    Rng() : Rng(0) {}

    explicit Rng(uint64_t seed) {
        uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64(sm);
    }

    // Independent substream s of a master seed; substream identity is part
    // of the reproducibility contract (sample s of a batch always draws
    // from stream(seed, s)).
    static Rng stream(uint64_t master_seed, uint64_t stream_id) {
        uint64_t sm = master_seed ^ (0x9E3779B97F4A7C15ULL * (stream_id + 1));
        Rng r;
        for (auto& word : r.state_) word = splitmix64(sm);
        return r;
    }

    uint64_t next_u64() {
        const uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, 1), 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in (0, 1]; safe as a log() argument.
    double uniform_pos() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

    // One standard normal via Box-Muller; consumes exactly two words so the
    // stream layout does not depend on call history.
    double normal() {
        const double u1 = uniform_pos();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    // Integer in [0, n).
    uint64_t below(uint64_t n) { return next_u64() % n; }

    std::array<uint64_t, 4> state() const { return state_; }
    void set_state(const std::array<uint64_t, 4>& s) { state_ = s; }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    static uint64_t splitmix64(uint64_t& x) {
        uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::array<uint64_t, 4> state_{};
};

}  // namespace resyn
