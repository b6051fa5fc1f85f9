#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace silentprobe {

/// SplitMix64 finalizer. Used to derive independent RNG streams from a
/// master seed so that parallel and serial execution draw identical numbers.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Stream seed for (seed, index) pairs: per-record, per-tree, per-sample.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    return mix64(seed ^ mix64(stream ^ 0x5851f42d4c957f2dULL));
}

/// FNV-1a over a stage name. Inserting a stage never shifts another
/// stage's randomness because each stream depends only on its own tag.
constexpr std::uint64_t hash_tag(std::string_view tag) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : tag) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag) {
    return derive_seed(seed, hash_tag(tag));
}

/// Deterministic random stream. mt19937_64 output is fixed by the standard
/// and the double/gaussian mappings below are hand-rolled, so sequences are
/// bit-identical across platforms and compilers.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n). Rejection-free modulo is acceptable here:
    /// n is tiny relative to 2^64 so the bias is far below statistical noise.
    std::uint64_t uniform_int(std::uint64_t n) { return eng_() % n; }

    /// Standard normal via Box-Muller, cached pair.
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        double u2 = uniform();
        // avoid log(0)
        while (u1 <= 0.0) u1 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * 3.141592653589793238462643383279502884 * u2;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

    double gaussian(double mean, double std) { return mean + std * gaussian(); }

    /// +1 or -1 with equal probability.
    double sign() { return (eng_() & 1u) ? 1.0 : -1.0; }

    /// true with probability p.
    bool bernoulli(double p) { return uniform() < p; }

private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace silentprobe
