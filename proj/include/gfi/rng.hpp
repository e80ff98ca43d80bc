#pragma once

#include <bit>
#include <cmath>
#include <type_traits>
#include <cstdint>

namespace gfi {

/// splitmix64 step; used both as a mixer for stream keys and to expand a
/// key into generator state.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// xoshiro256** generator seeded from a 64-bit key.
///
/// Each simulation stream owns one instance; streams are derived purely
/// from their key, so replicates are independent of execution order and
/// worker count.
class Rng {
public:
    explicit Rng(std::uint64_t key) {
        std::uint64_t sm = key;
        for (auto& word : s_) word = splitmix64(sm);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform draw on the open interval (0, 1).
    double uniform_open01() {
        double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
        return u > 0.0 ? u : 0x1.0p-53;
    }

    /// Standard normal via Box-Muller; consumes exactly two uniforms per pair.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform_open01();
        double u2 = uniform_open01();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t s_[4];
    double spare_ = 0.0;
    bool have_spare_ = false;
};

/// Mixing rule that derives a stream key from a tuple of fields.
///
/// Fields are folded one at a time through splitmix64, so any change to any
/// field yields an unrelated stream. Doubles contribute their bit pattern.
class StreamKey {
public:
    explicit StreamKey(std::uint64_t seed) : h_(seed) { fold(0x6766496b6579ULL); }

    template <class T>
        requires std::is_integral_v<T>
    StreamKey& fold(T v) {
        h_ ^= static_cast<std::uint64_t>(static_cast<std::int64_t>(v));
        h_ = splitmix64(h_);
        return *this;
    }
    StreamKey& fold(double v) {
        h_ ^= std::bit_cast<std::uint64_t>(v);
        h_ = splitmix64(h_);
        return *this;
    }

    std::uint64_t value() const { return h_; }
    Rng rng() const { return Rng(h_); }

private:
    std::uint64_t h_;
};

}  // namespace gfi
