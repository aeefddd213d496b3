#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace hawkes {

/// Identifier of the generator recorded in manifests and reports.
inline constexpr std::string_view kGeneratorId = "mt19937_64+splitmix64-seed-mix";

/// SplitMix64 finalizer.
[[nodiscard]] std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seed for stream `index` derived from `master`:
///   splitmix64(master ^ splitmix64(index + 0x9E3779B97F4A7C15)).
/// Depends only on (master, index), never on execution order.
[[nodiscard]] std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) noexcept;

/// Seeded 64-bit generator. Variates are produced by explicit transforms of
/// the raw engine output so that streams are identical across standard
/// library implementations (std:: distributions are not portable).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1) with 53 random bits.
    [[nodiscard]] double uniform() noexcept { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform on the open interval (0, 1).
    [[nodiscard]] double uniform_open() noexcept {
        return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    }

    [[nodiscard]] double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

    /// Exponential variate with the given rate.
    [[nodiscard]] double exponential(double rate) noexcept;

    [[nodiscard]] std::uint64_t next() noexcept { return engine_(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace hawkes
